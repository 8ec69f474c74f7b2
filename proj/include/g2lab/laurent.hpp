#pragma once

#include <complex>
#include <map>
#include <utility>

#include "g2lab/numbers.hpp"

namespace g2lab {

/// Two-variable Laurent polynomial with arbitrary-precision integer
/// coefficients, indexed by exponent pairs (e1, e2). Zero coefficients are
/// never stored.
class LaurentPoly2 {
public:
    using Exponent = std::pair<long, long>;
    using Map = std::map<Exponent, Int>;

    LaurentPoly2() = default;
    static LaurentPoly2 monomial(long e1, long e2, Int c = 1);
    static LaurentPoly2 constant(Int c);

    const Map& terms() const { return terms_; }
    Int coeff(long e1, long e2) const;
    bool empty() const { return terms_.empty(); }
    long support_bound() const;  // max(|e1|, |e2|) over the support

    void add_term(long e1, long e2, const Int& c);

    LaurentPoly2 operator+(const LaurentPoly2& o) const;
    LaurentPoly2 operator-(const LaurentPoly2& o) const;
    LaurentPoly2 operator*(const LaurentPoly2& o) const;
    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    bool operator==(const LaurentPoly2& o) const { return terms_ == o.terms_; }

    LaurentPoly2 pow(unsigned n) const;

    /// Exact division (throws std::runtime_error if the remainder is nonzero).
    LaurentPoly2 divide_exact(const LaurentPoly2& divisor) const;

    std::complex<double> eval(double theta1, double theta2) const;
    double eval_real(double theta1, double theta2) const { return eval(theta1, theta2).real(); }

private:
    Map terms_;
};

}  // namespace g2lab

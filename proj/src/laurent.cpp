#include "g2lab/laurent.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace g2lab {

LaurentPoly2 LaurentPoly2::monomial(long e1, long e2, Int c) {
    LaurentPoly2 p;
    if (c != 0) p.terms_[{e1, e2}] = std::move(c);
    return p;
}

LaurentPoly2 LaurentPoly2::constant(Int c) { return monomial(0, 0, std::move(c)); }

Int LaurentPoly2::coeff(long e1, long e2) const {
    auto it = terms_.find({e1, e2});
    return it == terms_.end() ? Int(0) : it->second;
}

long LaurentPoly2::support_bound() const {
    long b = 0;
    for (const auto& [e, c] : terms_) b = std::max({b, std::labs(e.first), std::labs(e.second)});
    return b;
}

void LaurentPoly2::add_term(long e1, long e2, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find({e1, e2});
    if (it == terms_.end()) {
        terms_[{e1, e2}] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
    LaurentPoly2 r = *this;
    r += o;
    return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
    LaurentPoly2 r = *this;
    r -= o;
    return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
    LaurentPoly2 r;
    for (const auto& [e, c] : terms_)
        for (const auto& [f, d] : o.terms_)
            r.add_term(e.first + f.first, e.second + f.second, c * d);
    return r;
}

LaurentPoly2 LaurentPoly2::pow(unsigned n) const {
    LaurentPoly2 r = constant(1);
    LaurentPoly2 base = *this;
    while (n) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

LaurentPoly2 LaurentPoly2::divide_exact(const LaurentPoly2& divisor) const {
    if (divisor.empty()) throw std::runtime_error("LaurentPoly2: division by zero polynomial");
    LaurentPoly2 rem = *this, quot;
    const auto& lead = *divisor.terms_.rbegin();  // lexicographically largest exponent
    while (!rem.empty()) {
        const auto& rl = *rem.terms_.rbegin();
        long e1 = rl.first.first - lead.first.first;
        long e2 = rl.first.second - lead.first.second;
        Int q = rl.second / lead.second;
        if (q * lead.second != rl.second)
            throw std::runtime_error("LaurentPoly2: inexact division");
        LaurentPoly2 m = monomial(e1, e2, q);
        quot += m;
        rem -= m * divisor;
    }
    return quot;
}

std::complex<double> LaurentPoly2::eval(double theta1, double theta2) const {
    std::complex<double> s = 0.0;
    for (const auto& [e, c] : terms_) {
        double arg = 2.0 * M_PI * (e.first * theta1 + e.second * theta2);
        s += to_double(c) * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return s;
}

}  // namespace g2lab

#pragma once

#include <string>
#include <utility>

#include "g2lab/numbers.hpp"

namespace g2lab {

/// Exact rational point (theta1, theta2) of the 2-torus, identified mod 1.
/// Stored as (num1/den, num2/den) with 0 <= num_j < den and den the lcm of
/// the two reduced denominators, so equal points have equal triples.
class TorusPoint {
public:
    TorusPoint() : num1_(0), num2_(0), den_(1) {}
    TorusPoint(const Rat& t1, const Rat& t2);

    const Int& num1() const { return num1_; }
    const Int& num2() const { return num2_; }
    const Int& den() const { return den_; }

    Rat theta1() const { return Rat(num1_, den_); }
    Rat theta2() const { return Rat(num2_, den_); }
    double t1() const { return to_double(theta1()); }
    double t2() const { return to_double(theta2()); }

    bool operator==(const TorusPoint& o) const {
        return num1_ == o.num1_ && num2_ == o.num2_ && den_ == o.den_;
    }
    bool operator<(const TorusPoint& o) const {
        if (den_ != o.den_) return den_ < o.den_;
        if (num1_ != o.num1_) return num1_ < o.num1_;
        return num2_ < o.num2_;
    }

    std::string str() const;

private:
    Int num1_, num2_, den_;
};

}  // namespace g2lab

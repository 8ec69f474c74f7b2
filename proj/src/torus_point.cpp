#include "g2lab/torus_point.hpp"

#include <sstream>

namespace g2lab {

TorusPoint::TorusPoint(const Rat& t1, const Rat& t2) {
    Rat a = mod1(t1), b = mod1(t2);
    Int da = boost::multiprecision::denominator(a);
    Int db = boost::multiprecision::denominator(b);
    den_ = boost::multiprecision::lcm(da, db);
    num1_ = boost::multiprecision::numerator(a) * (den_ / da);
    num2_ = boost::multiprecision::numerator(b) * (den_ / db);
}

std::string TorusPoint::str() const {
    std::ostringstream os;
    os << "(" << num1_ << "/" << den_ << "," << num2_ << "/" << den_ << ")";
    return os.str();
}

}  // namespace g2lab

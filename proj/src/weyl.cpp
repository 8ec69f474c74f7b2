#include "g2lab/weyl.hpp"

#include <algorithm>

namespace g2lab {

TorusPoint WeylElement::apply(const TorusPoint& p) const {
    Rat t1 = p.theta1(), t2 = p.theta2();
    return TorusPoint(Rat(a11) * t1 + Rat(a12) * t2, Rat(a21) * t1 + Rat(a22) * t2);
}

namespace {

std::vector<WeylElement> generate(std::vector<WeylElement> gens) {
    std::set<WeylElement> g{weyl_identity()};
    for (bool grew = true; grew;) {
        grew = false;
        std::set<WeylElement> next = g;
        for (const auto& a : g)
            for (const auto& b : gens)
                if (next.insert(a * b).second) grew = true;
        g = std::move(next);
    }
    return {g.begin(), g.end()};
}

}  // namespace

const std::vector<WeylElement>& d12_elements() {
    static const std::vector<WeylElement> g = generate({weyl_t2(), weyl_t6()});
    return g;
}

const std::vector<WeylElement>& s3_elements() {
    // -T6 has order 3
    static const std::vector<WeylElement> g = generate({weyl_t2(), {0, -1, 1, -1}});
    return g;
}

std::set<TorusPoint> orbit(const TorusPoint& p, const std::vector<WeylElement>& group) {
    std::set<TorusPoint> out;
    for (const auto& g : group) out.insert(g.apply(p));
    return out;
}

bool in_fundamental_domain(const TorusPoint& p, bool strict) {
    // test the four lifts of the [0,1)^2 representative into [0,1]^2
    for (int a = 0; a <= 1; ++a) {
        for (int b = 0; b <= 1; ++b) {
            Rat t1 = p.theta1() + a, t2 = p.theta2() + b;
            if (t1 > 1 || t2 > 1) continue;
            bool in = strict ? (t1 + t2 > 1 && 2 * t1 < t2 && t2 < 1)
                             : (t1 + t2 >= 1 && 2 * t1 <= t2 && t2 <= 1);
            if (in) return true;
        }
    }
    return false;
}

}  // namespace g2lab

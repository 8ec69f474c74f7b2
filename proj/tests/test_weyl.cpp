#include "doctest.h"

#include <random>
#include <set>

#include "g2lab/jacobian.hpp"
#include "g2lab/weyl.hpp"

using namespace g2lab;

TEST_CASE("torus points normalize mod 1") {
    TorusPoint p(Rat(5, 3), Rat(-1, 4));
    CHECK(p.theta1() == Rat(2, 3));
    CHECK(p.theta2() == Rat(3, 4));
    CHECK(p.den() == 12);
    CHECK(TorusPoint(Rat(1, 2), Rat(1, 2)) == TorusPoint(Rat(3, 2), Rat(-1, 2)));
}

TEST_CASE("D12 has twelve elements closed under product") {
    const auto& g = d12_elements();
    REQUIRE(g.size() == 12);
    std::set<WeylElement> s(g.begin(), g.end());
    CHECK(s.count(weyl_identity()) == 1);
    CHECK(s.count(weyl_t2()) == 1);
    CHECK(s.count(weyl_t6()) == 1);
    for (const auto& a : g)
        for (const auto& b : g) CHECK(s.count(a * b) == 1);
    WeylElement t6pow = weyl_identity();
    for (int i = 0; i < 6; ++i) t6pow = t6pow * weyl_t6();
    CHECK(t6pow == weyl_identity());
}

TEST_CASE("S3 is the six-element subgroup generated by T2 and -T6") {
    const auto& s3 = s3_elements();
    REQUIRE(s3.size() == 6);
    std::set<WeylElement> d12(d12_elements().begin(), d12_elements().end());
    for (const auto& a : s3) CHECK(d12.count(a) == 1);
    WeylElement mt6{0, -1, 1, -1}, cube = mt6 * mt6 * mt6;
    CHECK(cube == weyl_identity());
}

TEST_CASE("orbit sizes") {
    CHECK(orbit(TorusPoint(Rat(0), Rat(0)), d12_elements()).size() == 1);
    CHECK(orbit(TorusPoint(Rat(1, 3), Rat(2, 3)), d12_elements()).size() == 2);
    CHECK(orbit(TorusPoint(Rat(4, 21), Rat(20, 21)), d12_elements()).size() == 12);
    // orbit size divides the group order
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        std::uniform_int_distribution<long> den(3, 500);
        const long d = den(rng);
        TorusPoint p(Rat(rng() % d, d), Rat(rng() % d, d));
        CHECK(12 % orbit(p, d12_elements()).size() == 0);
        CHECK(6 % orbit(p, s3_elements()).size() == 0);
    }
}

TEST_CASE("fundamental domain membership") {
    CHECK(in_fundamental_domain(TorusPoint(Rat(4, 21), Rat(20, 21))));
    CHECK(in_fundamental_domain(TorusPoint(Rat(1, 3), Rat(2, 3))));   // vertex
    CHECK(in_fundamental_domain(TorusPoint(Rat(0), Rat(0))));         // corner via lift (0,1)
    CHECK_FALSE(in_fundamental_domain(TorusPoint(Rat(0), Rat(0)), true));
    CHECK_FALSE(in_fundamental_domain(TorusPoint(Rat(1, 2), Rat(1, 4))));
}

TEST_CASE("orbits tile: one representative in closed F off the reflection lines") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> den(97, 4999);
    for (int i = 0; i < 2000; ++i) {
        const long d = den(rng);
        TorusPoint p(Rat(rng() % d, d), Rat(rng() % d, d));
        int reps = 0;
        for (const auto& q : orbit(p, d12_elements()))
            if (in_fundamental_domain(q)) ++reps;
        CHECK(reps >= 1);
        if (std::fabs(jacobian_theta(p.t1(), p.t2())) > 1e-6) CHECK(reps == 1);
    }
}

#include "doctest.h"

#include <cmath>
#include <random>

#include "g2lab/characters.hpp"
#include "g2lab/errors.hpp"

using namespace g2lab;

TEST_CASE("fundamental Laurent characters") {
    const auto& s1 = chi_fund_laurent(1);
    const auto& s2 = chi_fund_laurent(2);
    CHECK(s1.terms().size() == 7);
    CHECK(s2.terms().size() == 13);  // 14 terms with multiplicity; sigma_(0,0) carries 2
    CHECK(s1.coeff(0, 0) == 1);
    CHECK(s2.coeff(0, 0) == 2);
    Int sum = 0;
    for (const auto& [e, c] : s2.terms()) sum += c;
    CHECK(sum == 14);
    for (const auto& [e, c] : s1.terms()) CHECK(s1.coeff(-e.first, -e.second) == c);
}

TEST_CASE("closed cosine forms at the fixed points") {
    CHECK(chi_fund_eval(1, 0, 0) == doctest::Approx(7.0));
    CHECK(chi_fund_eval(2, 0, 0) == doctest::Approx(14.0));
    CHECK(chi_fund_eval(1, 1.0 / 3, 2.0 / 3) == doctest::Approx(-2.0));
    // the S3 fixed points land on the (-2,5) pinch corner of the joint spectrum
    CHECK(chi_fund_eval(2, 1.0 / 3, 2.0 / 3) == doctest::Approx(5.0));
}

TEST_CASE("Laurent and trig routes agree") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 1000; ++i) {
        const double t1 = u(rng), t2 = u(rng);
        for (int j : {1, 2}) {
            const double a = chi_fund_laurent(j).eval_real(t1, t2);
            const double b = chi_fund_eval(j, t1, t2);
            CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(b)));
        }
    }
}

TEST_CASE("Weyl-formula characters reproduce the fundamental ones") {
    CHECK(chi_laurent({0, 0}) == LaurentPoly2::constant(1));
    CHECK(chi_laurent({1, 0}) == chi_fund_laurent(1));
    CHECK(chi_laurent({1, 1}) == chi_fund_laurent(2));
    // chi_(2,0) = chi1^2 - chi2 - chi1 - 1 from the fusion rule
    LaurentPoly2 expect = chi_fund_laurent(1) * chi_fund_laurent(1) - chi_fund_laurent(2) -
                          chi_fund_laurent(1) - LaurentPoly2::constant(1);
    CHECK(chi_laurent({2, 0}) == expect);
}

TEST_CASE("general character ratio") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 300; ++i) {
        const double t1 = u(rng), t2 = u(rng);
        CHECK(chi_general({0, 0}, t1, t2) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(chi_general({1, 0}, t1, t2) ==
              doctest::Approx(chi_fund_eval(1, t1, t2)).epsilon(1e-10));
        CHECK(chi_general({3, 1}, t1, t2) ==
              doctest::Approx(chi_laurent({3, 1}).eval_real(t1, t2)).epsilon(1e-8));
    }
    // singular-point limits recover dimensions
    CHECK(chi_general({1, 1}, 0.0, 0.0) == doctest::Approx(14.0).epsilon(1e-8));
    CHECK(chi_general({2, 0}, 0.0, 0.0) == doctest::Approx(27.0).epsilon(1e-7));
}

TEST_CASE("fusion case rules") {
    auto f = fuse_with_fundamental(1, {0, 0});
    CHECK(f.size() == 1);
    CHECK(f.at({1, 0}) == 1);

    f = fuse_with_fundamental(1, {1, 0});
    CHECK(f == std::map<DominantWeight, long>{{{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}, {{2, 0}, 1}});
    Int dims = 0;
    for (const auto& [w, mult] : f) dims += mult * weyl_dimension(w);
    CHECK(dims == 49);

    f = fuse_with_fundamental(1, {1, 1});
    CHECK(f == std::map<DominantWeight, long>{{{1, 0}, 1}, {{2, 0}, 1}, {{2, 1}, 1}});

    f = fuse_with_fundamental(2, {0, 0});
    CHECK(f == std::map<DominantWeight, long>{{{1, 1}, 1}});

    // multiplicity-2 case mu1 = mu2 + 1
    f = fuse_with_fundamental(2, {2, 1});
    CHECK(f.at({2, 1}) == 2);
}

TEST_CASE("fusion is dimension- and character-consistent") {
    for (long a = 0; a <= 4; ++a) {
        for (long b = 0; b <= a; ++b) {
            for (int j : {1, 2}) {
                LaurentPoly2 lhs = chi_fund_laurent(j) * chi_laurent({a, b});
                LaurentPoly2 rhs;
                Int dims = 0;
                for (const auto& [w, mult] : fuse_with_fundamental(j, {a, b})) {
                    for (long t = 0; t < mult; ++t) rhs += chi_laurent(w);
                    dims += mult * weyl_dimension(w);
                }
                CHECK(lhs == rhs);
                CHECK(dims == (j == 1 ? 7 : 14) * weyl_dimension({a, b}));
            }
        }
    }
}

TEST_CASE("Weyl dimensions") {
    CHECK(weyl_dimension({0, 0}) == 1);
    CHECK(weyl_dimension({1, 0}) == 7);
    CHECK(weyl_dimension({1, 1}) == 14);
    CHECK(weyl_dimension({2, 0}) == 27);
    CHECK(weyl_dimension({2, 1}) == 64);
    CHECK(weyl_dimension({3, 0}) == 77);
    CHECK(weyl_dimension({2, 2}) == 77);
    CHECK(weyl_dimension({3, 1}) == 189);
}

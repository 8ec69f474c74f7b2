#include "doctest.h"

#include <cmath>
#include <random>

#include "g2lab/errors.hpp"
#include "g2lab/jacobian.hpp"

using namespace g2lab;

namespace {
const double kPi2 = M_PI * M_PI;
}

TEST_CASE("psi_map fixed values") {
    auto [x0, y0] = psi_map(0, 0);
    CHECK(x0 == doctest::Approx(7.0));
    CHECK(y0 == doctest::Approx(14.0));
    // S3 fixed points go to the pinch corner (-2, 5)
    auto [x1, y1] = psi_map(1.0 / 3, 2.0 / 3);
    CHECK(x1 == doctest::Approx(-2.0));
    CHECK(y1 == doctest::Approx(5.0));
}

TEST_CASE("jacobian forms agree and J^2 descends to the (x,y) polynomial") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 1000; ++i) {
        const double t1 = u(rng), t2 = u(rng);
        const double jt = jacobian_theta(t1, t2);
        const double js = jacobian_sine_product(t1, t2);
        CHECK(std::fabs(jt - js) <= 1e-9 * std::max(1.0, std::fabs(jt)));
        auto [x, y] = psi_map(t1, t2);
        const double lhs = jt * jt;
        const double rhs = 16.0 * kPi2 * kPi2 * jacobian_sq_xy(x, y);
        CHECK(std::fabs(lhs - rhs) <= 1e-8 * std::max(1.0, std::fabs(lhs)));
    }
}

TEST_CASE("jacobian magnitudes at the exceptional exponent points") {
    CHECK(std::fabs(jacobian_theta(4.0 / 21, 20.0 / 21)) / (8 * kPi2) ==
          doctest::Approx((7 - std::sqrt(21.0)) / 4).epsilon(1e-10));
    CHECK(std::fabs(jacobian_theta(1.0 / 6, 23.0 / 24)) / (8 * kPi2) ==
          doctest::Approx((3 - std::sqrt(6.0)) / std::sqrt(3.0)).epsilon(1e-10));
    CHECK(jacobian_theta(0, 0) == doctest::Approx(0.0));
}

TEST_CASE("sign character: T6 preserves J, T2 flips it") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 200; ++i) {
        const double t1 = u(rng), t2 = u(rng);
        const double j = jacobian_theta(t1, t2);
        CHECK(jacobian_theta(t2, t2 - t1) == doctest::Approx(j).epsilon(1e-9));
        CHECK(jacobian_theta(-t2, -t1) == doctest::Approx(-j).epsilon(1e-9));
    }
}

TEST_CASE("J vanishes on the reflection lines") {
    for (int i = 0; i <= 60; ++i) {
        const double t = i / 60.0;
        CHECK(std::fabs(jacobian_theta(t, t)) < 1e-10);
        CHECK(std::fabs(jacobian_theta(t, -t)) < 1e-10);
        CHECK(std::fabs(jacobian_theta(2 * t, t)) < 1e-10);
        CHECK(std::fabs(jacobian_theta(t, 2 * t)) < 1e-10);
        CHECK(std::fabs(jacobian_theta(0.0, t)) < 1e-10);
        CHECK(std::fabs(jacobian_theta(t, 0.0)) < 1e-10);
    }
}

TEST_CASE("boundary curves") {
    // upper-arc minimum joins c1 and c2 at (7/9, 10/27)
    CHECK(boundary_y_upper(7.0 / 9) == doctest::Approx(10.0 / 27).epsilon(1e-12));
    CHECK(boundary_x_of_y(BoundaryCurve::C4, -2.0) == doctest::Approx(-1.0));
    CHECK(boundary_x_of_y(BoundaryCurve::C4, 14.0) == doctest::Approx(7.0));
    // matched roots kill the cubic factor
    auto cubic = [](double x, double y) {
        return 4 * x * x * x - x * x - 2 * x - 10 * x * y - y * y - 10 * y + 7;
    };
    for (int i = 1; i < 200; ++i) {
        const double y = 10.0 / 27 + (14.0 - 10.0 / 27) * i / 200.0;
        CHECK(std::fabs(cubic(boundary_x_of_y(BoundaryCurve::C1, y), y)) < 1e-8);
    }
    for (int i = 1; i < 200; ++i) {
        const double y = -2.0 + 7.0 * i / 200.0;
        CHECK(std::fabs(cubic(boundary_x_of_y(BoundaryCurve::C3, y), y)) < 1e-8);
    }
    CHECK_THROWS_AS(boundary_x_of_y(BoundaryCurve::C2, 6.0), OutOfRange);
    CHECK_THROWS_AS(boundary_x_of_y(BoundaryCurve::C1, 0.0), OutOfRange);
    // at mid-height the slice splits into two lobes
    CHECK(slice_intervals(3.0).size() == 2);
    CHECK(slice_intervals(0.0).size() == 1);
    CHECK(slice_intervals(10.0).size() == 1);
}

TEST_CASE("boundary arcs meet where they should") {
    // stated arc ranges
    REQUIRE(RegionD::arcs().size() == 4);
    // c1 and c2 join at the upper-arc minimum (7/9, 10/27)
    CHECK(boundary_x_of_y(BoundaryCurve::C1, 10.0 / 27) ==
          doctest::Approx(7.0 / 9).epsilon(1e-6));
    CHECK(boundary_x_of_y(BoundaryCurve::C2, 10.0 / 27) ==
          doctest::Approx(7.0 / 9).epsilon(1e-6));
    // c2 meets c3 at the pinch corner (-2, 5)
    CHECK(boundary_x_of_y(BoundaryCurve::C2, 5.0) == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(boundary_x_of_y(BoundaryCurve::C3, 5.0) == doctest::Approx(-2.0).epsilon(1e-9));
    // c3 meets c4 at (-1, -2), c1 meets c4 at (7, 14)
    CHECK(boundary_x_of_y(BoundaryCurve::C3, -2.0) == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(boundary_x_of_y(BoundaryCurve::C4, -2.0) == doctest::Approx(-1.0));
    CHECK(boundary_x_of_y(BoundaryCurve::C1, 14.0) == doctest::Approx(7.0).epsilon(1e-6));
    CHECK(boundary_x_of_y(BoundaryCurve::C4, 14.0) == doctest::Approx(7.0));
}

TEST_CASE("domain membership") {
    CHECK(domain_contains(7, 14));
    CHECK(domain_contains(-2, 5));
    CHECK(domain_contains(-1, -2));
    CHECK(domain_contains(0, 0));
    CHECK_FALSE(domain_contains(0, 13));
    CHECK_FALSE(domain_contains(-2, -2));  // below the pinch corner
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 2000; ++i) {
        auto [x, y] = psi_map(u(rng), u(rng));
        CHECK(domain_contains(x, y));
    }
}

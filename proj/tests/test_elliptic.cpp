#include "doctest.h"

#include <cmath>

#include "g2lab/elliptic.hpp"
#include "g2lab/errors.hpp"
#include "g2lab/quadrature.hpp"
#include "g2lab/walk_moments.hpp"

using namespace g2lab;

TEST_CASE("complete elliptic integrals by AGM") {
    CHECK(ellip_K(0.0) == doctest::Approx(M_PI / 2).epsilon(1e-14));
    CHECK(ellip_E(0.0) == doctest::Approx(M_PI / 2).epsilon(1e-14));
    CHECK(ellip_E(1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(ellip_K(1.0), DivergentK);
    // independent quadrature oracle of the defining integrals
    for (double m : {0.1, 0.5, 0.9}) {
        const double kq = tanh_sinh(
            [m](double t) { return 1.0 / std::sqrt(1.0 - m * std::sin(t) * std::sin(t)); }, 0.0,
            M_PI / 2, 1e-13, 1e-13);
        const double eq = tanh_sinh(
            [m](double t) { return std::sqrt(1.0 - m * std::sin(t) * std::sin(t)); }, 0.0,
            M_PI / 2, 1e-13, 1e-13);
        CHECK(ellip_K(m) == doctest::Approx(kq).epsilon(1e-10));
        CHECK(ellip_E(m) == doctest::Approx(eq).epsilon(1e-10));
    }
    // Legendre relation E(m)K(1-m) + E(1-m)K(m) - K(m)K(1-m) = pi/2
    for (double m : {0.2, 0.7}) {
        const double lhs = ellip_E(m) * ellip_K(1 - m) + ellip_E(1 - m) * ellip_K(m) -
                           ellip_K(m) * ellip_K(1 - m);
        CHECK(lhs == doctest::Approx(M_PI / 2).epsilon(1e-12));
    }
}

TEST_CASE("v(x) identities") {
    CHECK(v_of_x(-1.0) == doctest::Approx(1.0).epsilon(1e-14));
    for (int i = 1; i < 50; ++i) {
        const double x = -2.0 + 9.0 * i / 50.0;
        const double s = std::pow(x + 2.0, 1.5);
        CHECK(v_of_x(x) * (8 * s - x * x - 22 * x - 13) == doctest::Approx(16 * s).epsilon(1e-12));
    }
    // v -> 0 at the left endpoint
    CHECK(v_of_x(-1.9999) < 1e-4);
}

TEST_CASE("closed forms match the direct quadrature route") {
    for (auto target : {DensityTarget::TorusV1, DensityTarget::HaarV1}) {
        const auto closed = make_profile(target, EvaluatorKind::ClosedForm);
        const auto quad = make_profile(target, EvaluatorKind::Quadrature);
        for (double x : {-1.9, -1.5, -1.1, -0.5, 0.0, 1.0, 3.0, 5.0, 6.5}) {
            const double a = density_eval(closed, x);
            const double b = density_eval(quad, x);
            CHECK(std::fabs(a - b) <= 1e-6 * std::max(std::fabs(a), 1e-3));
        }
    }
}

TEST_CASE("frozen density spot values") {
    const auto tv1 = make_profile(DensityTarget::TorusV1, EvaluatorKind::ClosedForm);
    CHECK(density_eval(tv1, -1.5) == doctest::Approx(0.227752965).epsilon(1e-8));
    CHECK(density_eval(tv1, 0.0) == doctest::Approx(0.150563934).epsilon(1e-8));
    const auto hv1 = make_profile(DensityTarget::HaarV1, EvaluatorKind::ClosedForm);
    CHECK(density_eval(hv1, -0.5) == doctest::Approx(0.4625732761).epsilon(1e-8));
    CHECK(density_eval(hv1, 3.0) == doctest::Approx(0.0172724355).epsilon(1e-8));
}

TEST_CASE("densities are normalized and match the exact moments") {
    const auto tv1 = profile_by_name("torus-v1");
    CHECK(density_moment(tv1, 0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(density_moment(tv1, 1) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(density_moment(tv1, 2) == doctest::Approx(7.0).epsilon(1e-5));
    const auto hv1 = profile_by_name("haar-v1");
    const double expect[5] = {1, 0, 1, 1, 4};
    for (int r = 0; r <= 4; ++r)
        CHECK(std::fabs(density_moment(hv1, r) - expect[r]) < 1e-5);
}

TEST_CASE("support preconditions") {
    const auto tv1 = profile_by_name("torus-v1");
    CHECK_THROWS_AS(density_eval(tv1, -2.0), OutsideSupport);
    CHECK_THROWS_AS(density_eval(tv1, 7.5), OutsideSupport);
    CHECK_THROWS_AS(make_profile(DensityTarget::TorusV2, EvaluatorKind::ClosedForm),
                    BadParameter);
}

TEST_CASE("density moments match the exact walk moments up to r = 6") {
    const auto tv1 = profile_by_name("torus-v1");
    const auto hv1 = profile_by_name("haar-v1");
    const auto tv2 = profile_by_name("torus-v2");
    const auto hv2 = profile_by_name("haar-v2");
    for (int r = 0; r <= 6; ++r) {
        const double t1 = to_double(moment_walk(WalkKind::TorusLattice, r, 0));
        const double h1 = to_double(moment_walk(WalkKind::DominantCone, r, 0));
        const double t2 = to_double(moment_walk(WalkKind::TorusLattice, 0, r));
        const double h2 = to_double(moment_walk(WalkKind::DominantCone, 0, r));
        CHECK(std::fabs(density_moment(tv1, r) - t1) <= 1e-5 * std::max(1.0, t1));
        CHECK(std::fabs(density_moment(hv1, r) - h1) <= 1e-5 * std::max(1.0, h1));
        CHECK(std::fabs(density_moment(tv2, r) - t2) <= 1e-5 * std::max(1.0, t2));
        CHECK(std::fabs(density_moment(hv2, r) - h2) <= 1e-5 * std::max(1.0, h2));
    }
}

TEST_CASE("second-operator densities by quadrature") {
    const auto tv2 = profile_by_name("torus-v2");
    const auto hv2 = profile_by_name("haar-v2");
    CHECK(density_eval(tv2, 1.0) > 0.0);
    CHECK(density_eval(hv2, 1.0) > 0.0);
    CHECK(density_moment(tv2, 0) == doctest::Approx(1.0).epsilon(2e-6));
    CHECK(density_moment(hv2, 0) == doctest::Approx(1.0).epsilon(2e-6));
    // first moments: torus CT(sigma2) coefficient 2 at origin -> 2; haar 0
    CHECK(density_moment(tv2, 1) == doctest::Approx(2.0).epsilon(1e-5));
    CHECK(std::fabs(density_moment(hv2, 1)) < 1e-5);
}

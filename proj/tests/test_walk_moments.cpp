#include "doctest.h"

#include "g2lab/walk_moments.hpp"

using namespace g2lab;

TEST_CASE("torus step stencils") {
    auto d0 = WeightVector::delta_origin(WalkKind::TorusLattice);
    auto v = step_torus(1, d0);
    CHECK(v.entries().size() == 7);
    for (auto [a, b] : {std::pair<long, long>{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1},
                        {-1, 1}, {1, -1}})
        CHECK(v.at(a, b) == 1);
    CHECK(v.total_mass() == 7);
    CHECK(step_torus(2, d0).total_mass() == 14);
    CHECK(step_torus(1, v).at(0, 0) == 7);  // loop-loop plus 6 out-and-back
}

TEST_CASE("cone steps have no self-loop at the apex") {
    auto c0 = WeightVector::delta_origin(WalkKind::DominantCone);
    auto c1 = step_cone(1, c0);
    CHECK(c1.entries().size() == 1);
    CHECK(c1.at(1, 0) == 1);
    CHECK(step_cone(1, c1).at(0, 0) == 1);
}

TEST_CASE("step operators commute") {
    auto d0 = WeightVector::delta_origin(WalkKind::TorusLattice);
    CHECK(step_torus(2, step_torus(1, d0)).entries() ==
          step_torus(1, step_torus(2, d0)).entries());
    auto c0 = WeightVector::delta_origin(WalkKind::DominantCone);
    CHECK(step_cone(2, step_cone(1, c0)).entries() == step_cone(1, step_cone(2, c0)).entries());
    CHECK(step_cone(1, step_cone(2, step_cone(1, c0))).entries() ==
          step_cone(2, step_cone(1, step_cone(1, c0))).entries());
}

TEST_CASE("frozen torus moments") {
    CHECK(moment_walk(WalkKind::TorusLattice, 0, 0) == 1);
    CHECK(moment_walk(WalkKind::TorusLattice, 1, 0) == 1);
    CHECK(moment_walk(WalkKind::TorusLattice, 2, 0) == 7);
    CHECK(moment_walk(WalkKind::TorusLattice, 0, 1) == 2);
    CHECK(moment_walk(WalkKind::TorusLattice, 1, 1) == 8);
    CHECK(moment_walk(WalkKind::TorusLattice, 2, 1) == 50);
    CHECK(moment_walk(WalkKind::TorusLattice, 2, 2) == 478);
    CHECK(moment_constant_term(3, 0) == 31);
    CHECK(moment_constant_term(0, 2) == 16);
}

TEST_CASE("frozen cone moments") {
    CHECK(moment_walk(WalkKind::DominantCone, 1, 0) == 0);
    CHECK(moment_walk(WalkKind::DominantCone, 2, 0) == 1);
    CHECK(moment_walk(WalkKind::DominantCone, 3, 0) == 1);
    CHECK(moment_walk(WalkKind::DominantCone, 4, 0) == 4);
    CHECK(moment_walk(WalkKind::DominantCone, 5, 0) == 10);
    CHECK(moment_walk(WalkKind::DominantCone, 6, 0) == 35);
    CHECK(moment_walk(WalkKind::DominantCone, 0, 2) == 1);
    CHECK(moment_walk(WalkKind::DominantCone, 0, 4) == 5);
    CHECK(moment_walk(WalkKind::DominantCone, 2, 2) == 3);
}

TEST_CASE("formulas agree with the constant-term oracle") {
    for (int m = 0; m <= 6; ++m) CHECK(moment_formula_pure1(m) == moment_constant_term(m, 0));
    for (int n = 0; n <= 4; ++n) CHECK(moment_formula_pure2(n) == moment_constant_term(0, n));
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n)
            CHECK(moment_formula_cross(m, n) == moment_constant_term(m, n));
    CHECK(moment_formula_pure1(6) == 5881);
    CHECK(moment_formula_pure2(4) == 1468);
    CHECK(moment_formula_cross(0, 1) == 2);  // both identity terms of the second operator
}

TEST_CASE("cone moments never exceed torus moments") {
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; m + n <= 5; ++n)
            CHECK(moment_walk(WalkKind::DominantCone, m, n) <=
                  moment_walk(WalkKind::TorusLattice, m, n));
}

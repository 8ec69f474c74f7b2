#include "doctest.h"

#include <cmath>

#include "g2lab/errors.hpp"
#include "g2lab/measures.hpp"
#include "g2lab/modular.hpp"
#include "g2lab/walk_moments.hpp"
#include "g2lab/weyl.hpp"

using namespace g2lab;

TEST_CASE("Definition-1 support cardinalities") {
    CHECK(measure_dn(2).support_size() == 9);
    CHECK(measure_dn(6).support_size() == 18);
    CHECK(measure_dn(Rat(8, 3)).support_size() == 18);
    CHECK(measure_dnk(6, Rat(0)).support_size() == 18);
    CHECK(measure_dnk(Rat(21, 4), Rat(1, 21)).support_size() == 36);
    CHECK(measure_dnk(6, Rat(1, 24)).support_size() == 36);
    CHECK_THROWS_AS(measure_dn(Rat(3, 2)), BadParameter);
    CHECK_THROWS_AS(measure_dnk(6, Rat(1, 2)), BadParameter);
}

TEST_CASE("exponent orbits sit inside the claimed Definition-1 supports") {
    // E3 family: orbits of the level-3 exponents lie in supp d^(21/4,1/21)
    const auto d3 = measure_dnk(Rat(21, 4), Rat(1, 21));
    for (auto e : {Exponent{0, 0}, {1, 1}, {2, 0}})
        for (const auto& p : orbit(theta_of_exponent(3, e), d12_elements()))
            CHECK(d3.atoms.count(p) == 1);
    // E4 family: the two |J|-weighted orbits lie in supp d^(6,1/24), and the
    // remaining 12 support points are one D12 orbit (the extra points)
    const auto d4 = measure_dnk(6, Rat(1, 24));
    size_t covered = 0;
    for (auto e : {Exponent{0, 0}, {3, 0}}) {
        for (const auto& p : orbit(theta_of_exponent(4, e), d12_elements())) {
            CHECK(d4.atoms.count(p) == 1);
            ++covered;
        }
    }
    const auto extra = orbit(TorusPoint(Rat(1, 8), Rat(1, 2)), d12_elements());
    for (const auto& p : extra) CHECK(d4.atoms.count(p) == 1);
    CHECK(covered + extra.size() == d4.atoms.size());
    // the extra orbit is exactly the (2,1) exponent orbit of E4star
    CHECK(orbit(TorusPoint(Rat(3, 8), Rat(7, 8)), d12_elements()) == extra);
    // the (4,0) orbit is NOT in supp d^((6)) (the printed E4 theorem needs
    // d^(3,5/24) instead)
    const auto d6 = measure_dn(6);
    const auto th40 = theta_of_exponent(4, {4, 0});
    CHECK(d6.atoms.count(th40) == 0);
    CHECK(measure_dnk(3, Rat(5, 24)).atoms.count(th40) == 1);
}

TEST_CASE("F_k^W grids") {
    CHECK(measure_fkw(2).support_size() == 108);
    CHECK(measure_fkw(2).is_invariant());
    const auto fk = measure_fkw(6);
    CHECK(fk.mass() == doctest::Approx(1.0).epsilon(1e-12));
    // grid moments reproduce torus moments below the aliasing threshold
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; m + n <= 3; ++n)
            CHECK(measure_moment(fk, m, n) ==
                  doctest::Approx(to_double(moment_walk(WalkKind::TorusLattice, m, n)))
                      .epsilon(1e-9));
}

TEST_CASE("A_k measures") {
    const auto a6 = measure_ak(6);
    CHECK(a6.mass() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(a6.is_invariant(1e-9));
    CHECK(measure_moment(a6, 1, 0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(measure_moment(a6, 2, 0) == doctest::Approx(1.0).epsilon(1e-9));
    // matches nimrep matrix-element moments at the same level
    const auto lev = build_level(6);
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n)
            CHECK(measure_moment(a6, m, n) ==
                  doctest::Approx(to_double(nimrep_moment(lev, m, n))).epsilon(1e-8));
    // and converges to the cone moments once k >= 3(m+n)
    const auto a12 = measure_ak(12);
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n)
            CHECK(measure_moment(a12, m, n) ==
                  doctest::Approx(to_double(moment_walk(WalkKind::DominantCone, m, n)))
                      .epsilon(1e-9));
}

TEST_CASE("E3 masses: printed 5/6, corrected 1") {
    const auto printed = measure_exceptional(ExceptionalName::E3, false);
    const auto corrected = measure_exceptional(ExceptionalName::E3, true);
    CHECK(printed.mass() == doctest::Approx(5.0 / 6).epsilon(1e-9));
    CHECK(corrected.mass() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(printed.is_invariant(1e-10));
    CHECK(corrected.is_invariant(1e-10));
    // moments of the corrected measure are the nimrep walk counts at *
    CHECK(measure_moment(corrected, 1, 0) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(measure_moment(corrected, 2, 0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(measure_moment(corrected, 3, 0) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("E3M printed measure already has mass 1 and integer moments") {
    const auto mu = measure_exceptional(ExceptionalName::E3M, false);
    CHECK(mu.mass() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(measure_moment(mu, 1, 0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(measure_moment(mu, 2, 0) == doctest::Approx(3.0).epsilon(1e-9));
    // the Dirac subtraction exactly cancels the (2,0)-orbit atoms
    const auto th = theta_of_exponent(3, {2, 0});
    CHECK(mu.atoms.count(th) == 0);
}

TEST_CASE("E4 masses: printed far from 1 with negative atoms, corrected 1") {
    const auto printed = measure_exceptional(ExceptionalName::E4, false);
    CHECK(printed.mass() == doctest::Approx(8.75).epsilon(1e-9));
    bool has_negative = false;
    for (const auto& [p, w] : printed.atoms) has_negative |= w < -1e-12;
    CHECK(has_negative);
    const auto corrected = measure_exceptional(ExceptionalName::E4, true);
    CHECK(corrected.mass() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(corrected.is_invariant(1e-10));
    for (const auto& [p, w] : corrected.atoms) CHECK(w > 0.0);
    // moments are non-negative integers
    CHECK(measure_moment(corrected, 1, 0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(measure_moment(corrected, 2, 0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(measure_moment(corrected, 0, 1) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(measure_moment(corrected, 0, 2) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("E4M and E4star corrected variants") {
    const auto e4m = measure_exceptional(ExceptionalName::E4M, true);
    CHECK(e4m.mass() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(e4m.is_invariant(1e-10));
    CHECK(measure_moment(e4m, 2, 0) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(measure_moment(e4m, 0, 1) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(measure_moment(e4m, 3, 0) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(measure_moment(e4m, 0, 3) == doctest::Approx(11.0).epsilon(1e-8));
    const auto printed = measure_exceptional(ExceptionalName::E4star, false);
    CHECK(printed.mass() == doctest::Approx(7.0 / 6).epsilon(1e-9));
    const auto e4s = measure_exceptional(ExceptionalName::E4star, true);
    CHECK(e4s.mass() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(measure_moment(e4s, 1, 0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(measure_moment(e4s, 2, 0) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(measure_moment(e4s, 0, 1) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(measure_moment(e4s, 3, 0) == doctest::Approx(14.0).epsilon(1e-8));
}

TEST_CASE("audit reports carry the printed-formula discrepancies as flags") {
    const auto e3 = audit_measure(ExceptionalName::E3);
    CHECK(e3.printed_mass == doctest::Approx(5.0 / 6).epsilon(1e-9));
    CHECK(!e3.flags.empty());
    for (const auto& row : e3.table_rows) CHECK(row.residual < 1e-10);
    for (const auto& row : e3.zeta_rows) CHECK(row.residual < 1e-10);
    const auto e4 = audit_measure(ExceptionalName::E4);
    CHECK(e4.printed_mass > 2.0);
    CHECK(e4.max_moment_integrality_residual < 1e-7);
    const auto e4s = audit_measure(ExceptionalName::E4star);
    CHECK(e4s.printed_mass == doctest::Approx(7.0 / 6).epsilon(1e-9));
}

TEST_CASE("JSON export shape") {
    const auto mu = measure_dn(2);
    const auto js = measure_to_json(mu);
    CHECK(js.find("\"name\"") != std::string::npos);
    CHECK(js.find("\"invariance\":\"S3\"") != std::string::npos);
    CHECK(js.find("\"atoms\"") != std::string::npos);
    CHECK(js.find("\"mass\":1") != std::string::npos);
}

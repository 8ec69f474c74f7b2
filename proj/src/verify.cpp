#include "g2lab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "g2lab/characters.hpp"
#include "g2lab/elliptic.hpp"
#include "g2lab/errors.hpp"
#include "g2lab/jacobian.hpp"
#include "g2lab/measures.hpp"
#include "g2lab/modular.hpp"
#include "g2lab/quadrature.hpp"
#include "g2lab/walk_moments.hpp"
#include "g2lab/weyl.hpp"

namespace g2lab {

std::string status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Flagged: return "flagged";
    }
    return "?";
}

namespace {

struct Ctx {
    double max_resid = 0.0;
    bool ok = true;
    std::ostringstream detail;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.tellp() > 0 ? "; " : "") << what;
        }
    }
    void near(double a, double b, double tol, const std::string& what) {
        const double r = std::fabs(a - b);
        max_resid = std::max(max_resid, r);
        if (r > tol) {
            ok = false;
            detail << (detail.tellp() > 0 ? "; " : "") << what << " |" << a << "-" << b
                   << "|=" << r;
        }
    }
    void near_rel(double a, double b, double tol, const std::string& what) {
        const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
        const double r = std::fabs(a - b) / scale;
        max_resid = std::max(max_resid, r);
        if (r > tol) {
            ok = false;
            detail << (detail.tellp() > 0 ? "; " : "") << what << " rel=" << r;
        }
    }
    CheckResult result(const std::string& id, const std::string& scope) const {
        return {id, scope, ok ? CheckStatus::Pass : CheckStatus::Fail, max_resid, 0.0,
                detail.str()};
    }
};

std::mt19937_64 rng_for(const std::string& id) {
    std::seed_seq seq(id.begin(), id.end());
    return std::mt19937_64(seq);
}

TorusPoint random_rational_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> den(97, 9973);
    const long d = den(rng);
    std::uniform_int_distribution<long> num(0, d - 1);
    return TorusPoint(Rat(num(rng), d), Rat(num(rng), d));
}

std::pair<double, double> random_theta(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return {u(rng), u(rng)};
}

// ---------------- module invariant checks ----------------

CheckResult chk_weyl_groups() {
    Ctx c;
    const auto& d12 = d12_elements();
    const auto& s3 = s3_elements();
    c.check(d12.size() == 12, "|D12| != 12");
    c.check(s3.size() == 6, "|S3| != 6");
    std::set<WeylElement> dset(d12.begin(), d12.end());
    c.check(dset.count(weyl_identity()) == 1, "identity missing");
    c.check(dset.count(weyl_t2()) == 1 && dset.count(weyl_t6()) == 1, "generators missing");
    for (const auto& a : d12)
        for (const auto& b : d12) c.check(dset.count(a * b) == 1, "closure fails");
    for (const auto& a : s3) c.check(dset.count(a) == 1, "S3 not subset of D12");
    WeylElement p = weyl_identity();
    for (int i = 0; i < 6; ++i) p = p * weyl_t6();
    c.check(p == weyl_identity(), "T6^6 != id");
    WeylElement mt6{0, -1, 1, -1}, q = weyl_identity();
    for (int i = 0; i < 3; ++i) q = q * mt6;
    c.check(q == weyl_identity(), "(-T6)^3 != id");
    for (const auto& a : d12) c.check(std::abs(a.det()) == 1, "det not +-1");
    return c.result("weyl.groups", "weyl_torus");
}

CheckResult chk_weyl_orbits() {
    Ctx c;
    c.check(orbit(TorusPoint(Rat(0), Rat(0)), d12_elements()).size() == 1, "orbit(0,0) != 1");
    c.check(orbit(TorusPoint(Rat(1, 3), Rat(2, 3)), d12_elements()).size() == 2,
            "orbit(1/3,2/3) != 2");
    c.check(orbit(TorusPoint(Rat(4, 21), Rat(20, 21)), d12_elements()).size() == 12,
            "orbit(4/21,20/21) != 12");
    // orbit(g p) = orbit(p)
    auto rng = rng_for("weyl.orbits");
    for (int i = 0; i < 50; ++i) {
        const TorusPoint p = random_rational_point(rng);
        const auto ob = orbit(p, d12_elements());
        for (const auto& g : d12_elements())
            c.check(orbit(g.apply(p), d12_elements()) == ob, "orbit not constant on orbit");
    }
    c.check(in_fundamental_domain(TorusPoint(Rat(4, 21), Rat(20, 21))), "(4/21,20/21) not in F");
    c.check(!in_fundamental_domain(TorusPoint(Rat(0), Rat(0)), /*strict=*/true),
            "(0,0) in open F");
    c.check(in_fundamental_domain(TorusPoint(Rat(0), Rat(0)), /*strict=*/false),
            "(0,0) not in closed F");
    return c.result("weyl.orbits", "weyl_torus");
}

CheckResult chk_weyl_tiling() {
    Ctx c;
    auto rng = rng_for("weyl.tiling");
    for (int i = 0; i < 10000; ++i) {
        const TorusPoint p = random_rational_point(rng);
        int reps = 0;
        for (const auto& q : orbit(p, d12_elements()))
            if (in_fundamental_domain(q)) ++reps;
        c.check(reps >= 1, "no representative in closed F");
        if (std::fabs(jacobian_theta(p.t1(), p.t2())) > 1e-6)
            c.check(reps == 1, "multiple representatives off the reflection lines");
    }
    return c.result("weyl.tiling", "weyl_torus");
}

CheckResult chk_characters_fundamental() {
    Ctx c;
    const auto& s1 = chi_fund_laurent(1);
    const auto& s2 = chi_fund_laurent(2);
    c.check(s1.terms().size() == 7, "sigma1 monomial count");
    c.check(s2.terms().size() == 13, "sigma2 monomial count (13 distinct, mass 14)");
    Int sum1 = 0, sum2 = 0;
    for (const auto& [e, v] : s1.terms()) sum1 += v;
    for (const auto& [e, v] : s2.terms()) sum2 += v;
    c.check(sum1 == 7 && sum2 == 14, "coefficient sums");
    c.check(s1.coeff(0, 0) == 1 && s2.coeff(0, 0) == 2, "constant coefficients");
    for (const auto& [e, v] : s2.terms())
        c.check(s2.coeff(-e.first, -e.second) == v, "conjugation symmetry");
    c.near(chi_fund_eval(1, 0, 0), 7.0, 1e-12, "chi1(0,0)");
    c.near(chi_fund_eval(2, 0, 0), 14.0, 1e-12, "chi2(0,0)");
    c.near(chi_fund_eval(1, 1.0 / 3, 2.0 / 3), -2.0, 1e-12, "chi1(1/3,2/3)");
    // the S3 fixed points map to (-2, 5): chi2 there is 5, the pinch corner of D
    c.near(chi_fund_eval(2, 1.0 / 3, 2.0 / 3), 5.0, 1e-12, "chi2(1/3,2/3)");
    auto rng = rng_for("characters.fundamental");
    for (int i = 0; i < 1000; ++i) {
        auto [t1, t2] = random_theta(rng);
        for (int j : {1, 2}) {
            c.near_rel(chi_fund_laurent(j).eval_real(t1, t2), chi_fund_eval(j, t1, t2), 1e-12,
                       "laurent vs trig");
        }
        for (const auto& g : d12_elements()) {
            const double u1 = g.a11 * t1 + g.a12 * t2, u2 = g.a21 * t1 + g.a22 * t2;
            c.near(chi_fund_eval(1, u1, u2), chi_fund_eval(1, t1, t2), 1e-10, "D12 invariance");
        }
    }
    return c.result("characters.fundamental", "characters");
}

CheckResult chk_characters_general() {
    Ctx c;
    c.check(chi_laurent({1, 0}) == chi_fund_laurent(1), "Weyl formula chi(1,0)");
    c.check(chi_laurent({1, 1}) == chi_fund_laurent(2), "Weyl formula chi(1,1)");
    c.check(chi_laurent({0, 0}) == LaurentPoly2::constant(1), "chi(0,0) = 1");
    auto rng = rng_for("characters.general");
    for (int i = 0; i < 200; ++i) {
        auto [t1, t2] = random_theta(rng);
        c.near(chi_general({0, 0}, t1, t2), 1.0, 1e-9, "chi(0,0) ratio");
        c.near_rel(chi_general({1, 0}, t1, t2), chi_fund_eval(1, t1, t2), 1e-10, "chi(1,0) ratio");
        c.near_rel(chi_general({2, 1}, t1, t2), chi_laurent({2, 1}).eval_real(t1, t2), 1e-9,
                   "chi(2,1) vs exact");
    }
    c.near(chi_general({1, 1}, 0.0, 0.0), 14.0, 1e-8, "chi(1,1) at singular origin");
    c.near(chi_general({1, 0}, 0.0, 0.0), 7.0, 1e-8, "chi(1,0) at singular origin");
    c.near(chi_general({2, 0}, 0.0, 0.0), 27.0, 1e-7, "dim(2,0) limit");
    c.check(weyl_dimension({2, 1}) == 64 && weyl_dimension({3, 0}) == 77 &&
                weyl_dimension({2, 2}) == 77,
            "Weyl dimensions");
    return c.result("characters.general", "characters");
}

CheckResult chk_characters_fusion() {
    Ctx c;
    {
        auto f = fuse_with_fundamental(1, {0, 0});
        c.check(f.size() == 1 && f.count({1, 0}) == 1, "fuse1(0,0)");
    }
    {
        auto f = fuse_with_fundamental(1, {1, 0});
        c.check(f.size() == 4, "fuse1(1,0) size");
        Int dim = 0;
        for (const auto& [w, m] : f) dim += m * weyl_dimension(w);
        c.check(dim == 49, "fuse1(1,0) dims");
    }
    {
        auto f = fuse_with_fundamental(1, {1, 1});
        Int dim = 0;
        for (const auto& [w, m] : f) dim += m * weyl_dimension(w);
        c.check(dim == 98, "fuse1(1,1) dims");
    }
    // exact Laurent fusion consistency and dimension sums for mu1 <= 4
    std::map<DominantWeight, LaurentPoly2> chis;
    for (long a = 0; a <= 5; ++a)
        for (long b = 0; b <= a; ++b) chis[{a, b}] = chi_laurent({a, b});
    for (long a = 0; a <= 4; ++a) {
        for (long b = 0; b <= a; ++b) {
            for (int j : {1, 2}) {
                LaurentPoly2 lhs = chi_fund_laurent(j) * chis[{a, b}];
                LaurentPoly2 rhs;
                Int dims = 0;
                for (const auto& [w, m] : fuse_with_fundamental(j, {a, b})) {
                    for (int t = 0; t < m; ++t) rhs += chis[w];
                    dims += m * weyl_dimension(w);
                }
                c.check(lhs == rhs, "exact fusion mismatch at mu1<=4");
                c.check(dims == (j == 1 ? 7 : 14) * weyl_dimension({a, b}), "fusion dim sum");
            }
        }
    }
    // numeric fusion consistency at random theta
    auto rng = rng_for("characters.fusion");
    for (int i = 0; i < 1000; ++i) {
        auto [t1, t2] = random_theta(rng);
        const DominantWeight w{2, 1};
        for (int j : {1, 2}) {
            double lhs = chi_fund_eval(j, t1, t2) * chi_general(w, t1, t2);
            double rhs = 0.0;
            for (const auto& [v, m] : fuse_with_fundamental(j, w))
                rhs += m * chi_general(v, t1, t2);
            c.near_rel(lhs, rhs, 1e-8, "numeric fusion");
        }
    }
    return c.result("characters.fusion", "characters");
}

CheckResult chk_characters_ring() {
    Ctx c;
    // chi_w as integer polynomial in chi1, chi2: peel leading weights
    std::map<DominantWeight, LaurentPoly2> chis;
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= a; ++b) chis[{a, b}] = chi_laurent({a, b});
    for (const auto& [w, chi] : chis) {
        // express chi1^(mu1-mu2) chi2^mu2 = sum c_v chi_v with unit leading
        // coefficient at v = w, then invert: both directions must be integral
        LaurentPoly2 rem = chi;
        std::map<std::pair<long, long>, Int> poly;  // (m,n) -> coeff of chi1^m chi2^n
        // subtract multiples of products, scanning weights from the top
        std::vector<DominantWeight> order;
        for (const auto& [v, p] : chis) order.push_back(v);
        std::sort(order.begin(), order.end(), [](auto& a, auto& b) {
            if (a.mu1 + a.mu2 != b.mu1 + b.mu2) return a.mu1 + a.mu2 > b.mu1 + b.mu2;
            return b < a;
        });
        for (const auto& v : order) {
            const Int coef = rem.coeff(v.mu1, v.mu2);
            if (coef == 0) continue;
            LaurentPoly2 prod =
                chi_fund_laurent(1).pow(static_cast<unsigned>(v.dynkin1())) *
                chi_fund_laurent(2).pow(static_cast<unsigned>(v.dynkin2()));
            rem -= prod * LaurentPoly2::constant(coef);
            poly[{v.dynkin1(), v.dynkin2()}] = coef;
        }
        c.check(rem.empty(), "chi not an integer polynomial in chi1, chi2");
        (void)poly;
    }
    return c.result("characters.ring", "characters");
}

CheckResult chk_walk_steps() {
    Ctx c;
    auto d0 = WeightVector::delta_origin(WalkKind::TorusLattice);
    auto v1 = step_torus(1, d0);
    c.check(v1.entries().size() == 7, "step_torus(1) stencil size");
    for (auto [a, b] : {std::pair<long, long>{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1},
                        {-1, 1}, {1, -1}})
        c.check(v1.at(a, b) == 1, "step_torus(1) entries");
    c.check(step_torus(1, v1).at(0, 0) == 7, "two-step return count");
    c.check(v1.total_mass() == 7, "mass x7");
    c.check(step_torus(2, d0).total_mass() == 14, "mass x14");
    auto c0 = WeightVector::delta_origin(WalkKind::DominantCone);
    auto c1 = step_cone(1, c0);
    c.check(c1.entries().size() == 1 && c1.at(1, 0) == 1, "cone apex step");
    c.check(step_cone(1, c1).at(0, 0) == 1, "trivial in rho1 x rho1");
    c.check(moment_walk(WalkKind::DominantCone, 4, 0) == 4, "cone (4,0) moment");
    c.check(moment_walk(WalkKind::DominantCone, 1, 0) == 0, "cone (1,0) moment");
    // commutativity of the two operators, both kinds
    {
        auto a = step_torus(2, step_torus(1, d0));
        auto b = step_torus(1, step_torus(2, d0));
        c.check(a.entries() == b.entries(), "torus operators commute");
        auto e = step_cone(2, step_cone(1, c0));
        auto f = step_cone(1, step_cone(2, c0));
        c.check(e.entries() == f.entries(), "cone operators commute");
        auto g = step_cone(1, step_cone(2, step_cone(1, c0)));
        auto h = step_cone(2, step_cone(1, step_cone(1, c0)));
        c.check(g.entries() == h.entries(), "cone interleaving");
    }
    return c.result("walk.steps", "walk_moments");
}

CheckResult chk_walk_domination() {
    Ctx c;
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; m + n <= 6; ++n)
            c.check(moment_walk(WalkKind::DominantCone, m, n) <=
                        moment_walk(WalkKind::TorusLattice, m, n),
                    "cone moment exceeds torus moment");
    return c.result("walk.domination", "walk_moments");
}

CheckResult chk_walk_cyclicity() {
    Ctx c;
    // span of (v1)^a (v2)^b delta_0, a+b <= 4, contains every delta_w, mu1 <= 2
    std::vector<std::map<std::pair<long, long>, Rat>> basis;
    auto reduce = [&](std::map<std::pair<long, long>, Rat> vec) {
        for (const auto& row : basis) {
            if (vec.empty()) break;
            const auto& pivot = *row.begin();
            auto it = vec.find(pivot.first);
            if (it == vec.end()) continue;
            const Rat f = it->second / pivot.second;
            for (const auto& [site, val] : row) {
                auto jt = vec.find(site);
                Rat nv = (jt == vec.end() ? Rat(0) : jt->second) - f * val;
                if (nv == 0) {
                    if (jt != vec.end()) vec.erase(jt);
                } else {
                    vec[site] = nv;
                }
            }
        }
        return vec;
    };
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; a + b <= 4; ++b) {
            WeightVector v = WeightVector::delta_origin(WalkKind::DominantCone);
            for (int i = 0; i < a; ++i) v = step_cone(1, v);
            for (int i = 0; i < b; ++i) v = step_cone(2, v);
            std::map<std::pair<long, long>, Rat> vec;
            for (const auto& [site, val] : v.entries()) vec[site] = Rat(val);
            vec = reduce(std::move(vec));
            if (!vec.empty()) basis.push_back(std::move(vec));
        }
    }
    for (long m1 = 0; m1 <= 2; ++m1) {
        for (long m2 = 0; m2 <= m1; ++m2) {
            std::map<std::pair<long, long>, Rat> delta{{{m1, m2}, Rat(1)}};
            c.check(reduce(delta).empty(),
                    "delta_(" + std::to_string(m1) + "," + std::to_string(m2) + ") not in span");
        }
    }
    return c.result("walk.cyclicity", "walk_moments");
}

CheckResult chk_jacobian_fifth_root() {
    Ctx c;
    // x = -1 - 2 sqrt(y+2) meets D only at (-1,-2)
    for (int i = 0; i <= 400; ++i) {
        const double y = -2.0 + 16.0 * i / 400.0;
        const double x = -1.0 - 2.0 * std::sqrt(y + 2.0);
        const bool at_corner = std::fabs(y + 2.0) < 1e-12;
        if (!at_corner) c.check(!domain_contains(x, y), "fifth root enters D");
    }
    c.check(domain_contains(-1.0, -2.0), "(-1,-2) on boundary");
    return c.result("jacobian.fifth_root", "jacobian_geometry");
}

CheckResult chk_jacobian_symmetry() {
    Ctx c;
    auto rng = rng_for("jacobian.symmetry");
    for (int i = 0; i < 500; ++i) {
        auto [t1, t2] = random_theta(rng);
        const double j = jacobian_theta(t1, t2);
        c.near_rel(jacobian_theta(t2, -t1 + t2), j, 1e-9, "T6 invariance");
        c.near_rel(jacobian_theta(-t2, -t1), -j, 1e-9, "T2 antisymmetry");
    }
    return c.result("jacobian.symmetry", "jacobian_geometry");
}

CheckResult chk_elliptic_basics() {
    Ctx c;
    c.near(ellip_K(0.0), M_PI / 2, 1e-14, "K(0)");
    c.near(ellip_E(0.0), M_PI / 2, 1e-14, "E(0)");
    c.near(ellip_E(1.0), 1.0, 1e-14, "E(1)");
    bool threw = false;
    try {
        ellip_K(1.0);
    } catch (const DivergentK&) {
        threw = true;
    }
    c.check(threw, "K(1) must throw DivergentK");
    // quadrature oracle for K(1/2), E(1/2)
    auto kq = tanh_sinh(
        [](double t) { return 1.0 / std::sqrt(1.0 - 0.5 * std::sin(t) * std::sin(t)); }, 0.0,
        M_PI / 2, 1e-13, 1e-13);
    auto eq = tanh_sinh(
        [](double t) { return std::sqrt(1.0 - 0.5 * std::sin(t) * std::sin(t)); }, 0.0,
        M_PI / 2, 1e-13, 1e-13);
    c.near(ellip_K(0.5), kq, 1e-10, "K(1/2) vs quadrature");
    c.near(ellip_E(0.5), eq, 1e-10, "E(1/2) vs quadrature");
    // v(x): algebraic identity and special values
    c.near(v_of_x(-1.0), 1.0, 1e-14, "v(-1)");
    for (int i = 1; i < 40; ++i) {
        const double x = -2.0 + 9.0 * i / 40.0;
        const double s = std::pow(x + 2.0, 1.5);
        c.near(v_of_x(x) * (8.0 * s - x * x - 22.0 * x - 13.0), 16.0 * s, 1e-9, "v identity");
    }
    return c.result("elliptic.basics", "elliptic_densities");
}

CheckResult chk_density_branch_continuity() {
    Ctx c;
    // both closed-form branches of torus-v1 agree approaching the split x=-1
    const auto prof = make_profile(DensityTarget::TorusV1, EvaluatorKind::ClosedForm);
    for (double eps : {1e-4, 1e-5, 1e-6}) {
        const double left = density_eval(prof, -1.0 - eps);
        const double right = density_eval(prof, -1.0 + eps);
        c.near_rel(left, right, 0.02, "branch continuity at x=-1");
        c.check(left > 0.3 && right > 0.3, "log growth near x=-1");
    }
    // haar-v1 tends to 0 at the support ends
    const auto hp = make_profile(DensityTarget::HaarV1, EvaluatorKind::ClosedForm);
    c.check(density_eval(hp, -1.9999) < 1e-4 && density_eval(hp, 6.9999) < 1e-4,
            "haar-v1 endpoint decay");
    bool threw = false;
    try {
        density_eval(hp, 7.5);
    } catch (const OutsideSupport&) {
        threw = true;
    }
    c.check(threw, "OutsideSupport not thrown");
    return c.result("elliptic.branch_continuity", "elliptic_densities");
}

CheckResult chk_modular_basics() {
    Ctx c;
    c.check(build_level(1).size() == 2, "k=1 exponent count");
    c.check(build_level(2).size() == 4, "k=2 exponent count");
    c.check(build_level(3).size() == 6, "k=3 exponent count");
    const auto lev3 = build_level(3);
    const TorusPoint t00 = theta_of_exponent(lev3, {0, 0});
    c.check(t00 == TorusPoint(Rat(4, 21), Rat(20, 21)), "theta(k=3,(0,0))");
    const auto lev4 = build_level(4);
    c.check(theta_of_exponent(lev4, {3, 0}) == TorusPoint(Rat(7, 24), Rat(5, 6)),
            "theta(k=4,(3,0))");
    // beta vs chi at theta, and range bounds
    for (int k = 1; k <= 8; ++k) {
        const auto lev = build_level(k);
        for (const auto& e : lev.exponents) {
            const TorusPoint th = theta_of_exponent(lev, e);
            c.check(in_fundamental_domain(th), "exponent theta outside F");
            for (int j : {1, 2}) {
                if (j == 2 && k < 2) continue;  // (0,1) enters the alphabet at k=2
                const double b = beta(lev, j, e);
                c.near(b, chi_fund_eval(j, th), 1e-10, "beta vs chi");
                c.check(b >= -2.0 - 1e-9 && b <= (j == 1 ? 7.0 : 14.0) + 1e-9, "beta range");
            }
            c.near(psi_star(lev, e), lev.S(lev.e0(), lev.index_of(e)), 1e-12,
                   "psi* vs S-matrix row");
        }
    }
    c.near(beta(lev3, 1, {0, 0}), chi_fund_eval(1, TorusPoint(Rat(4, 21), Rat(20, 21))), 1e-10,
           "beta(k=3) vs chi(4/21,20/21)");
    return c.result("modular.basics", "modular_verlinde");
}

CheckResult chk_modular_nimrep_sanity() {
    Ctx c;
    for (int k : {2, 4, 6}) {
        const auto lev = build_level(k);
        // trivial weight gives the identity nimrep: N_0 = sum_s S S^* = I
        const int n = lev.size();
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                double v = 0.0;
                for (int s = 0; s < n; ++s) v += lev.S(s, a) * lev.S(s, b);
                c.near(v, a == b ? 1.0 : 0.0, 1e-10, "unit nimrep");
            }
        }
        for (int j : {1, 2}) {
            const auto nim = verlinde_nimrep(lev, j);
            long maxrow = 0;
            for (const auto& row : nim) {
                long s = 0;
                for (long x : row) {
                    c.check(x >= 0, "negative nimrep entry");
                    s += x;
                }
                maxrow = std::max(maxrow, s);
            }
            c.check(maxrow <= (j == 1 ? 7 : 14), "row sum exceeds fusion bound");
        }
    }
    // short nimrep walks match cone moments
    const auto lev6 = build_level(6);
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; m + n <= 2; ++n)
            c.check(nimrep_moment(lev6, m, n) == moment_walk(WalkKind::DominantCone, m, n),
                    "short nimrep moment != cone moment");
    return c.result("modular.nimrep_sanity", "modular_verlinde");
}

CheckResult chk_measures_invariance() {
    Ctx c;
    c.check(measure_dn(4).is_invariant(), "d((4)) not S3 invariant");
    c.check(measure_dnk(6, Rat(1, 24)).is_invariant(), "d(6,1/24) not invariant");
    c.check(measure_fkw(2).is_invariant(), "F_2^W not invariant");
    c.check(measure_ak(3).is_invariant(1e-9), "A_3 measure not invariant");
    // Definition-1 measures are also D12-invariant
    auto d = measure_dnk(Rat(21, 4), Rat(1, 21));
    d.invariance = Invariance::D12;
    c.check(d.is_invariant(), "d(21/4,1/21) not D12 invariant");
    for (auto name : {ExceptionalName::E3, ExceptionalName::E3M, ExceptionalName::E4,
                      ExceptionalName::E4M, ExceptionalName::E4star}) {
        for (bool corr : {false, true}) {
            const auto mu = measure_exceptional(name, corr);
            c.check(mu.is_invariant(1e-10),
                    exceptional_name_str(name) + (corr ? "-corrected" : "-printed") +
                        " not D12 invariant");
        }
    }
    return c.result("measures.invariance", "invariant_measures");
}

CheckResult chk_measures_grid_limits() {
    Ctx c;
    // F_k^W uniform measure reproduces torus moments below the aliasing bound
    const auto fk = measure_fkw(6);
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; m + n <= 3; ++n)
            c.near(measure_moment(fk, m, n),
                   to_double(moment_walk(WalkKind::TorusLattice, m, n)), 1e-7,
                   "F_k^W vs torus moment");
    // A_k reproduces cone moments exactly for k >= 3(m+n)
    const auto a12 = measure_ak(12);
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n)
            c.near_rel(measure_moment(a12, m, n),
                       to_double(moment_walk(WalkKind::DominantCone, m, n)), 1e-9,
                       "A_12 vs cone moment");
    c.near(measure_moment(measure_ak(6), 2, 0), 1.0, 1e-9, "A_6 (2,0) moment");
    c.near(measure_moment(measure_ak(6), 1, 0), 0.0, 1e-9, "A_6 (1,0) moment");
    return c.result("measures.grid_limits", "invariant_measures");
}

// ---------------- acceptance criteria ----------------

CheckResult acc1_moment_triple() {
    Ctx c;
    for (int m = 0; m + 0 <= 6; ++m) {
        for (int n = 0; m + n <= 6; ++n) {
            const Int w = moment_walk(WalkKind::TorusLattice, m, n);
            const Int f = moment_formula_cross(m, n);
            const Int t = moment_constant_term(m, n);
            c.check(w == f && f == t,
                    "triple disagreement at (" + std::to_string(m) + "," + std::to_string(n) +
                        ")");
            if (n == 0) c.check(moment_formula_pure1(m) == w, "pure1 disagrees");
            if (m == 0) c.check(moment_formula_pure2(n) == w, "pure2 disagrees");
        }
    }
    c.check(moment_walk(WalkKind::TorusLattice, 2, 0) == 7, "sigma_{2,0} != 7");
    c.check(moment_walk(WalkKind::TorusLattice, 0, 1) == 2, "sigma_{0,1} != 2");
    c.check(moment_walk(WalkKind::TorusLattice, 1, 1) == 8, "sigma_{1,1} != 8");
    return c.result("acc.01.moment_triple", "acceptance");
}

CheckResult acc2_trapezoid() {
    Ctx c;
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; m + n <= 5; ++n) {
            const int N = 3 * (m + n) + 3;
            double s = 0.0;
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    const double t1 = static_cast<double>(i) / N;
                    const double t2 = static_cast<double>(j) / N;
                    s += std::pow(chi_fund_eval(1, t1, t2), m) *
                         std::pow(chi_fund_eval(2, t1, t2), n);
                }
            s /= static_cast<double>(N) * N;
            c.near_rel(s, to_double(moment_walk(WalkKind::TorusLattice, m, n)), 1e-9,
                       "trapezoid moment (" + std::to_string(m) + "," + std::to_string(n) + ")");
        }
    }
    return c.result("acc.02.trapezoid_exactness", "acceptance");
}

CheckResult acc3_jacobian_identities() {
    Ctx c;
    auto rng = rng_for("acc.3");
    for (int i = 0; i < 1000; ++i) {
        auto [t1, t2] = random_theta(rng);
        const double jt = jacobian_theta(t1, t2);
        c.near_rel(jt, jacobian_sine_product(t1, t2), 1e-9, "trig vs sine product");
        auto [x, y] = psi_map(t1, t2);
        c.near_rel(jt * jt, 16.0 * std::pow(M_PI, 4) * jacobian_sq_xy(x, y), 1e-8,
                   "J^2 polynomial");
    }
    // J vanishes on all six reflection lines
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double t = u(rng);
        for (auto [a, b] : {std::pair<double, double>{t, t}, {t, -t}, {2 * t, t}, {t, 2 * t},
                            {0.0, t}, {t, 0.0}})
            c.near(jacobian_theta(a, b), 0.0, 1e-10, "J on reflection line");
    }
    return c.result("acc.03.jacobian_identities", "acceptance");
}

CheckResult acc4_boundary_geometry() {
    Ctx c;
    auto cubic = [](double x, double y) {
        return 4 * x * x * x - x * x - 2 * x - 10 * x * y - y * y - 10 * y + 7;
    };
    struct Arc {
        BoundaryCurve curve;
        double lo, hi;
    };
    for (const Arc arc : {Arc{BoundaryCurve::C1, 10.0 / 27.0, 14.0},
                          Arc{BoundaryCurve::C2, 10.0 / 27.0, 5.0},
                          Arc{BoundaryCurve::C3, -2.0, 5.0}}) {
        for (int i = 0; i <= 200; ++i) {
            const double y = arc.lo + (arc.hi - arc.lo) * i / 200.0;
            const double x = boundary_x_of_y(arc.curve, y);
            c.near(cubic(x, y), 0.0, 1e-8, "cubic residual on arc");
        }
    }
    for (int i = 0; i <= 200; ++i) {
        const double y = -2.0 + 16.0 * i / 200.0;
        const double x = boundary_x_of_y(BoundaryCurve::C4, y);
        c.near(x * x + 2 * x - 7 - 4 * y, 0.0, 1e-10, "c4 quadratic residual");
    }
    c.near(boundary_y_upper(7.0 / 9.0), 10.0 / 27.0, 1e-12, "c1/c2 endpoint y(7/9)");
    c.near(boundary_x_of_y(BoundaryCurve::C4, -2.0), -1.0, 1e-12, "c4 at y=-2");
    bool threw = false;
    try {
        boundary_x_of_y(BoundaryCurve::C2, 6.0);
    } catch (const OutOfRange&) {
        threw = true;
    }
    c.check(threw, "OutOfRange not thrown");
    auto rng = rng_for("acc.4");
    for (int i = 0; i < 10000; ++i) {
        auto [t1, t2] = random_theta(rng);
        auto [x, y] = psi_map(t1, t2);
        c.check(domain_contains(x, y), "Psi image rejected");
    }
    const double probes[10][2] = {{0, 13},    {-3, 0},    {8, 0},     {0, -2.5}, {0, 14.5},
                                  {-1.5, 4},  {2, -2},    {7.5, 10},  {-2.5, 3}, {5, 1}};
    for (const auto& p : probes) c.check(!domain_contains(p[0], p[1]), "exterior probe accepted");
    c.check(domain_contains(7, 14) && domain_contains(-2, 5) && domain_contains(-1, -2),
            "corners rejected");
    return c.result("acc.04.boundary_geometry", "acceptance");
}

CheckResult acc5_densities() {
    Ctx c;
    // closed form vs direct singular quadrature at 50 interior points
    for (auto target : {DensityTarget::TorusV1, DensityTarget::HaarV1}) {
        const auto closed = make_profile(target, EvaluatorKind::ClosedForm);
        const auto quad = make_profile(target, EvaluatorKind::Quadrature);
        for (int i = 1; i <= 50; ++i) {
            const double x = -2.0 + 9.0 * i / 51.0;
            if (std::fabs(x + 1.0) < 0.02) continue;  // log point of torus-v1
            c.near_rel(density_eval(closed, x), density_eval(quad, x), 1e-6,
                       closed.name() + " closed vs quadrature");
        }
    }
    // all four densities have mass 1
    for (const char* name : {"torus-v1", "torus-v2", "haar-v1", "haar-v2"}) {
        const auto prof = profile_by_name(name);
        c.near(density_moment(prof, 0), 1.0, 1e-6, std::string(name) + " mass");
    }
    // moments match the exact walk moments
    const auto tv1 = profile_by_name("torus-v1");
    const double texp[3] = {1.0, 1.0, 7.0};
    for (int r = 0; r <= 2; ++r)
        c.near(density_moment(tv1, r), texp[r], 1e-5, "torus-v1 moment r=" + std::to_string(r));
    const auto hv1 = profile_by_name("haar-v1");
    const double hexp[5] = {1.0, 0.0, 1.0, 1.0, 4.0};
    for (int r = 0; r <= 4; ++r)
        c.near(density_moment(hv1, r), hexp[r], 1e-5, "haar-v1 moment r=" + std::to_string(r));
    return c.result("acc.05.elliptic_densities", "acceptance");
}

CheckResult acc6_modular_data() {
    Ctx c;
    for (int k = 1; k <= 8; ++k) {
        const auto lev = build_level(k);
        const int n = lev.size();
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                double dot = 0.0;
                for (int s = 0; s < n; ++s) dot += lev.S(a, s) * lev.S(b, s);
                c.near(dot, a == b ? 1.0 : 0.0, 1e-10, "S orthogonality");
                c.near(lev.S(a, b), lev.S(b, a), 1e-10, "S symmetry");
            }
        }
        for (int j : {1, 2}) {
            if (j == 2 && k < 2) continue;  // rho2 is not a level-1 weight
            const auto nim = verlinde_nimrep(lev, j);  // throws above 1e-6 residual
            // integrality residual to 1e-8: recompute one pass
            const int ir = lev.index_of(j == 1 ? Exponent{1, 0} : Exponent{0, 1});
            std::vector<std::vector<double>> nd(n, std::vector<double>(n));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    double v = 0.0;
                    for (int s = 0; s < n; ++s)
                        v += lev.S(s, ir) / lev.S(s, lev.e0()) * lev.S(s, a) * lev.S(s, b);
                    nd[a][b] = v;
                    c.near(v, std::round(v), 1e-8, "nimrep integrality");
                    c.check(std::llround(v) >= 0, "nimrep negativity");
                    c.check(nim[a][b] == std::llround(v), "rounding mismatch");
                }
            // eigenvalue multiset equals {beta} via an independent eigensolver
            auto ev = symmetric_eigenvalues(nd);
            std::vector<double> betas;
            for (const auto& e : lev.exponents) betas.push_back(beta(lev, j, e));
            std::sort(betas.begin(), betas.end());
            for (int i = 0; i < n; ++i) c.near(ev[i], betas[i], 1e-8, "eigenvalue multiset");
        }
    }
    return c.result("acc.06.modular_data", "acceptance");
}

CheckResult acc7_psi_jacobian() {
    Ctx c;
    for (int k = 1; k <= 8; ++k) {
        const auto lev = build_level(k);
        const double denom_sines = 64.0 * std::sin(lev.xi) * std::sin(3 * lev.xi) *
                                   std::sin(4 * lev.xi) * std::sin(5 * lev.xi) *
                                   std::sin(6 * lev.xi) * std::sin(9 * lev.xi);
        for (const auto& e : lev.exponents) {
            const TorusPoint th = theta_of_exponent(lev, e);
            const double ps = psi_star(lev, e);
            c.near(ps, -jacobian_theta(th.t1(), th.t2()) /
                           (4.0 * std::sqrt(3.0) * (k + 4) * M_PI * M_PI),
                   1e-10, "psi* vs J identity");
            c.check(ps > 0, "psi* not Perron positive");
            c.near_rel((lev.k + 4) * std::sqrt(3.0) * ps, denom_sines * kac_weyl_phi(lev, e),
                       1e-9, "Kac-Weyl proportionality");
        }
    }
    return c.result("acc.07.psi_star_jacobian", "acceptance");
}

CheckResult acc8_ak_measure() {
    Ctx c;
    for (int k : {4, 5, 6}) {
        const auto lev = build_level(k);
        const auto mu = measure_ak(k);
        for (int m = 0; m <= 4; ++m)
            for (int n = 0; m + n <= 4; ++n)
                c.near_rel(measure_moment(mu, m, n), to_double(nimrep_moment(lev, m, n)), 1e-8,
                           "A_k moment vs nimrep walk, k=" + std::to_string(k));
    }
    const auto a12 = measure_ak(12);
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n)
            c.near_rel(measure_moment(a12, m, n),
                       to_double(moment_walk(WalkKind::DominantCone, m, n)), 1e-9,
                       "A_k moment vs cone moment at k=12");
    return c.result("acc.08.ak_measure_theorem", "acceptance");
}

CheckResult acc9_exceptional_audits() {
    Ctx c;
    const double s21 = std::sqrt(21.0), s6 = std::sqrt(6.0), s3 = std::sqrt(3.0);
    {
        const auto rep = audit_measure(ExceptionalName::E3);
        for (const auto& row : rep.table_rows)
            c.near(row.computed, row.printed_value, 1e-10, "E3 |J| row " + row.exponent);
        c.near(rep.printed_mass, 5.0 / 6.0, 1e-9, "E3 printed mass");
        c.near(rep.corrected_mass, 1.0, 1e-9, "E3 corrected mass");
        c.check(!rep.flags.empty(), "E3 mass discrepancy not flagged");
        for (const auto& row : rep.zeta_rows)
            c.near(row.computed, row.printed_value, 1e-10, "E3 zeta relation " + row.exponent);
        // spot values straight from the table
        c.near(rep.table_rows[0].computed, (7 - s21) / 4, 1e-10, "E3 (0,0) |J|");
        c.near(rep.table_rows[1].computed, (7 + s21) / 4, 1e-10, "E3 (1,1) |J|");
        c.near(rep.table_rows[2].computed, 3.5, 1e-10, "E3 (2,0) |J|");
    }
    {
        const auto rep = audit_measure(ExceptionalName::E3M);
        c.near(rep.printed_mass, 1.0, 1e-9, "E3M printed mass");
        c.near(rep.corrected_mass, 1.0, 1e-9, "E3M corrected mass");
    }
    {
        const auto rep = audit_measure(ExceptionalName::E4);
        c.near(rep.table_rows[0].computed, (3 - s6) / s3, 1e-10, "E4 (0,0) |J|");
        c.near(rep.table_rows[1].computed, (3 + s6) / s3, 1e-10, "E4 (3,0) |J|");
        c.near(rep.table_rows[2].computed, s3, 1e-10, "E4 (0,1) |J|");
        c.near(rep.table_rows[3].computed, s3, 1e-10, "E4 (4,0) |J|");
        c.near(rep.table_rows[4].computed, 2 * s3, 1e-10, "E4 (1,1) |J|");
        c.check(rep.printed_mass > 2.0, "E4 printed mass should be far from 1");
        c.check(!rep.flags.empty(), "E4 discrepancies not flagged");
        c.near(rep.corrected_mass, 1.0, 1e-9, "E4 corrected mass");
    }
    {
        const auto rep = audit_measure(ExceptionalName::E4M);
        c.check(!rep.flags.empty(), "E4M discrepancies not flagged");
        c.near(rep.corrected_mass, 1.0, 1e-9, "E4M corrected mass");
    }
    {
        const auto rep = audit_measure(ExceptionalName::E4star);
        c.near(rep.printed_mass, 7.0 / 6.0, 1e-9, "E4star printed mass");
        c.check(!rep.flags.empty(), "E4star mass discrepancy not flagged");
        c.near(rep.corrected_mass, 1.0, 1e-9, "E4star corrected mass");
    }
    for (auto name : {ExceptionalName::E3, ExceptionalName::E3M, ExceptionalName::E4,
                      ExceptionalName::E4M, ExceptionalName::E4star}) {
        const auto rep = audit_measure(name);
        c.check(rep.max_moment_integrality_residual <= 1e-7,
                exceptional_name_str(name) + " corrected moments not near integers");
        c.check(rep.corrected_moments_nonnegative,
                exceptional_name_str(name) + " corrected moment negative");
    }
    return c.result("acc.09.exceptional_audits", "acceptance");
}

CheckResult acc10_quantum_dimensions() {
    Ctx c;
    const auto lev3 = build_level(3);
    const double d3 = q_dim_fundamental(lev3, 1);
    c.near(d3, (3 + std::sqrt(21.0)) / 2, 1e-10, "qdim(rho1) at k=3");
    c.near(d3 * d3 - 3 * d3 - 3, 0.0, 1e-9, "near-group equation k=3");
    const auto lev4 = build_level(4);
    const double d4 = q_dim_fundamental(lev4, 1);
    c.near(d4, 2 + std::sqrt(6.0), 1e-10, "qdim(rho1) at k=4");
    c.near(d4 * d4 - 4 * d4 - 2, 0.0, 1e-9, "quadratic-category equation k=4");
    c.near(q_int(lev3, 1), 1.0, 1e-14, "[1] = 1");
    // the sine-product quantum dimension matches the S-matrix ratio
    for (int k : {3, 4, 6}) {
        const auto lev = build_level(k);
        for (const auto& e : lev.exponents)
            c.near_rel(q_dim(lev, e), lev.S(lev.index_of(e), lev.e0()) / lev.S(lev.e0(), lev.e0()),
                       1e-10, "qdim vs S ratio");
        c.near_rel(q_dim_fundamental(lev, 1), q_dim(lev, {1, 0}), 1e-10, "rho1 qdim routes");
        c.near_rel(q_dim_fundamental(lev, 2), q_dim(lev, {0, 1}), 1e-10, "rho2 qdim routes");
    }
    return c.result("acc.10.quantum_dimensions", "acceptance");
}

CheckResult acc11_cardinalities() {
    Ctx c;
    c.check(measure_dn(2).support_size() == 9, "|d((2))| != 9");
    c.check(measure_dn(6).support_size() == 18, "|d((6))| != 18");
    c.check(measure_dnk(6, Rat(0)).support_size() == 18, "|d(6,0)| != 18");
    c.check(measure_dnk(Rat(21, 4), Rat(1, 21)).support_size() == 36, "|d(21/4,1/21)| != 36");
    c.check(measure_dnk(6, Rat(1, 24)).support_size() == 36, "|d(6,1/24)| != 36");
    c.check(measure_fkw(2).support_size() == 108, "|F_2^W| != 108");
    c.check(measure_fkw(4).support_size() == 3 * 8 * 8, "|F_4^W| != 192");
    bool threw = false;
    try {
        measure_dn(Rat(3, 2));
    } catch (const BadParameter&) {
        threw = true;
    }
    c.check(threw, "BadParameter not thrown for n < 2");
    return c.result("acc.11.cardinalities", "acceptance");
}

std::vector<Check> make_registry() {
    return {
        {"weyl.groups", "weyl_torus", chk_weyl_groups},
        {"weyl.orbits", "weyl_torus", chk_weyl_orbits},
        {"weyl.tiling", "weyl_torus", chk_weyl_tiling},
        {"characters.fundamental", "characters", chk_characters_fundamental},
        {"characters.general", "characters", chk_characters_general},
        {"characters.fusion", "characters", chk_characters_fusion},
        {"characters.ring", "characters", chk_characters_ring},
        {"walk.steps", "walk_moments", chk_walk_steps},
        {"walk.domination", "walk_moments", chk_walk_domination},
        {"walk.cyclicity", "walk_moments", chk_walk_cyclicity},
        {"jacobian.fifth_root", "jacobian_geometry", chk_jacobian_fifth_root},
        {"jacobian.symmetry", "jacobian_geometry", chk_jacobian_symmetry},
        {"elliptic.basics", "elliptic_densities", chk_elliptic_basics},
        {"elliptic.branch_continuity", "elliptic_densities", chk_density_branch_continuity},
        {"modular.basics", "modular_verlinde", chk_modular_basics},
        {"modular.nimrep_sanity", "modular_verlinde", chk_modular_nimrep_sanity},
        {"measures.invariance", "invariant_measures", chk_measures_invariance},
        {"measures.grid_limits", "invariant_measures", chk_measures_grid_limits},
        {"acc.01.moment_triple", "acceptance", acc1_moment_triple},
        {"acc.02.trapezoid_exactness", "acceptance", acc2_trapezoid},
        {"acc.03.jacobian_identities", "acceptance", acc3_jacobian_identities},
        {"acc.04.boundary_geometry", "acceptance", acc4_boundary_geometry},
        {"acc.05.elliptic_densities", "acceptance", acc5_densities},
        {"acc.06.modular_data", "acceptance", acc6_modular_data},
        {"acc.07.psi_star_jacobian", "acceptance", acc7_psi_jacobian},
        {"acc.08.ak_measure_theorem", "acceptance", acc8_ak_measure},
        {"acc.09.exceptional_audits", "acceptance", acc9_exceptional_audits},
        {"acc.10.quantum_dimensions", "acceptance", acc10_quantum_dimensions},
        {"acc.11.cardinalities", "acceptance", acc11_cardinalities},
    };
}

// checks that report known discrepancies of the printed formulas; a
// confirming result is Flagged rather than Pass
CheckResult run_flag_check(const std::string& id, ExceptionalName name, double expect_mass) {
    Ctx c;
    const auto rep = audit_measure(name);
    c.near(rep.printed_mass, expect_mass, 1e-9, "printed mass");
    CheckResult r = c.result(id, "invariant_measures");
    r.status = r.status == CheckStatus::Pass ? CheckStatus::Flagged : CheckStatus::Fail;
    std::ostringstream os;
    os << "printed mass " << rep.printed_mass << " (printed formula); corrected mass "
       << rep.corrected_mass;
    r.detail = os.str() + (r.detail.empty() ? "" : "; " + r.detail);
    return r;
}

}  // namespace

const std::vector<Check>& check_registry() {
    static std::vector<Check> reg = [] {
        auto r = make_registry();
        r.push_back({"measures.e3_printed_mass", "invariant_measures", [] {
                         return run_flag_check("measures.e3_printed_mass", ExceptionalName::E3,
                                               5.0 / 6.0);
                     }});
        r.push_back({"measures.e4star_printed_mass", "invariant_measures", [] {
                         return run_flag_check("measures.e4star_printed_mass",
                                               ExceptionalName::E4star, 7.0 / 6.0);
                     }});
        r.push_back({"measures.e4_printed_mass", "invariant_measures", [] {
                         Ctx c;
                         const auto rep = audit_measure(ExceptionalName::E4);
                         c.check(std::fabs(rep.printed_mass - 1.0) > 1e-3,
                                 "printed E4 mass unexpectedly near 1");
                         CheckResult res = c.result("measures.e4_printed_mass",
                                                    "invariant_measures");
                         if (res.status == CheckStatus::Pass) res.status = CheckStatus::Flagged;
                         std::ostringstream os;
                         os << "printed mass " << rep.printed_mass << "; corrected mass "
                            << rep.corrected_mass;
                         res.detail = os.str();
                         return res;
                     }});
        r.push_back({"measures.e4m_printed_mass", "invariant_measures", [] {
                         Ctx c;
                         const auto rep = audit_measure(ExceptionalName::E4M);
                         c.check(std::fabs(rep.printed_mass - 1.0) > 1e-3,
                                 "printed E4M mass unexpectedly near 1");
                         CheckResult res = c.result("measures.e4m_printed_mass",
                                                    "invariant_measures");
                         if (res.status == CheckStatus::Pass) res.status = CheckStatus::Flagged;
                         std::ostringstream os;
                         os << "printed mass " << rep.printed_mass << "; corrected mass "
                            << rep.corrected_mass;
                         res.detail = os.str();
                         return res;
                     }});
        r.push_back({"modular.e4_text_relation", "modular_verlinde", [] {
                         // 3|psi*|^2 = 2J^2/64pi^4 printed in the E4 section
                         // conflicts with the same table's numbers
                         const TorusPoint th = theta_of_exponent(4, {0, 1});
                         const double j = jacobian_theta(th.t1(), th.t2());
                         const double j2 = j * j / (64.0 * std::pow(M_PI, 4));
                         CheckResult res;
                         res.id = "modular.e4_text_relation";
                         res.scope = "modular_verlinde";
                         res.residual = std::fabs(3.0 * 0.125 - 2.0 * j2);
                         res.status = res.residual > 1e-9 ? CheckStatus::Flagged
                                                          : CheckStatus::Pass;
                         std::ostringstream os;
                         os << "3|psi*|^2 = " << 3.0 * 0.125 << " vs 2J^2/64pi^4 = " << 2.0 * j2;
                         res.detail = os.str();
                         return res;
                     }});
        return r;
    }();
    return reg;
}

std::vector<CheckResult> run_checks(const std::string& scope, int max_threads) {
    std::vector<const Check*> todo;
    for (const auto& ch : check_registry())
        if (scope == "all" || ch.scope == scope || ch.id == scope) todo.push_back(&ch);
    std::vector<CheckResult> results(todo.size());
    const int nthreads = std::max(1, std::min<int>(max_threads, static_cast<int>(todo.size())));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= todo.size()) break;
            const auto t0 = std::chrono::steady_clock::now();
            CheckResult r;
            try {
                r = todo[i]->run();
            } catch (const std::exception& e) {
                r.id = todo[i]->id;
                r.scope = todo[i]->scope;
                r.status = CheckStatus::Fail;
                r.detail = std::string("exception: ") + e.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                            .count();
            results[i] = std::move(r);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::sort(results.begin(), results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return results;
}

}  // namespace g2lab

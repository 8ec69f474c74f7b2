#include "g2lab/walk_moments.hpp"

#include <array>
#include <vector>

#include "g2lab/errors.hpp"

namespace g2lab {

WeightVector WeightVector::delta_origin(WalkKind kind) {
    WeightVector v(kind);
    v.add(0, 0, 1);
    return v;
}

Int WeightVector::at(long a, long b) const {
    auto it = entries_.find({a, b});
    return it == entries_.end() ? Int(0) : it->second;
}

void WeightVector::add(long a, long b, const Int& c) {
    if (c == 0) return;
    auto it = entries_.find({a, b});
    if (it == entries_.end()) {
        entries_[{a, b}] = c;
    } else {
        it->second += c;
        if (it->second == 0) entries_.erase(it);
    }
}

Int WeightVector::total_mass() const {
    Int s = 0;
    for (const auto& [site, c] : entries_) s += c;
    return s;
}

WeightVector step_torus(int j, const WeightVector& v) {
    if (v.kind() != WalkKind::TorusLattice)
        throw BadParameter("step_torus: vector is not torus-lattice");
    WeightVector out(WalkKind::TorusLattice);
    const auto& stencil = chi_fund_laurent(j).terms();
    for (const auto& [site, c] : v.entries())
        for (const auto& [e, mult] : stencil)
            out.add(site.first + e.first, site.second + e.second, c * mult);
    return out;
}

WeightVector step_cone(int j, const WeightVector& v) {
    if (v.kind() != WalkKind::DominantCone)
        throw BadParameter("step_cone: vector is not dominant-cone");
    WeightVector out(WalkKind::DominantCone);
    for (const auto& [site, c] : v.entries()) {
        for (const auto& [w, mult] : fuse_with_fundamental(j, {site.first, site.second}))
            out.add(w.mu1, w.mu2, c * mult);
    }
    return out;
}

Int moment_walk(WalkKind kind, int m, int n) {
    if (m < 0 || n < 0) throw BadParameter("moment_walk: m,n must be >= 0");
    WeightVector v = WeightVector::delta_origin(kind);
    auto step = kind == WalkKind::TorusLattice ? step_torus : step_cone;
    for (int i = 0; i < m; ++i) v = step(1, v);
    for (int i = 0; i < n; ++i) v = step(2, v);
    return v.at(0, 0);
}

namespace {

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// (a_1,...,a_k)! = (sum a_i)! / prod a_i!
Int multinomial(const std::vector<int>& parts) {
    int tot = 0;
    for (int p : parts) tot += p;
    Int r = factorial(tot);
    for (int p : parts) r /= factorial(p);
    return r;
}

// enumerate non-negative tuples of length len with sum <= bound
template <typename F>
void for_each_tuple(int len, int bound, std::vector<int>& buf, int used, const F& f) {
    if (static_cast<int>(buf.size()) == len) {
        f(buf, used);
        return;
    }
    for (int v = 0; v + used <= bound; ++v) {
        buf.push_back(v);
        for_each_tuple(len, bound, buf, used + v, f);
        buf.pop_back();
    }
}

}  // namespace

Int moment_formula_cross(int m, int n) {
    if (m < 0 || n < 0) throw BadParameter("moment_formula_cross: m,n must be >= 0");
    Int total = 0;
    std::vector<int> kbuf, lbuf;
    for_each_tuple(6, m, kbuf, 0, [&](const std::vector<int>& k, int ksum) {
        const int r1k = k[0] - k[1] + k[4] - k[5];
        const int r2k = k[2] - k[3] - k[4] + k[5];
        std::vector<int> kparts = k;
        kparts.push_back(m - ksum);
        const Int mk = multinomial(kparts);
        for_each_tuple(12, n, lbuf, 0, [&](const std::vector<int>& l, int lsum) {
            const int r1 = r1k + l[0] - l[1] + l[4] - l[5] + l[6] - l[7] + 2 * l[8] -
                           2 * l[9] + l[10] - l[11];
            if (r1 != 0) return;
            const int r2 = r2k + l[2] - l[3] - l[4] + l[5] + l[6] - l[7] - l[8] + l[9] -
                           2 * l[10] + 2 * l[11];
            if (r2 != 0) return;
            std::vector<int> lparts = l;
            lparts.push_back(n - lsum);
            total += mk * multinomial(lparts) * Int(Int(1) << (n - lsum));
        });
    });
    return total;
}

Int moment_formula_pure1(int m) {
    if (m < 0) throw BadParameter("moment_formula_pure1: m must be >= 0");
    Int total = 0;
    for (int k1 = 0; k1 <= m; ++k1)
        for (int k2 = 0; k2 <= m; ++k2)
            for (int k3 = 0; k3 <= m; ++k3)
                for (int k5 = 0; k5 <= m; ++k5) {
                    const int k4 = k1 - k2 + k3, k6 = k1 - k2 + k5;
                    if (k4 < 0 || k6 < 0) continue;
                    const int used = 3 * k1 - k2 + 2 * k3 + 2 * k5;
                    if (used < 0 || used > m) continue;
                    total += multinomial({k1, k2, k3, k4, k5, k6, m - used});
                }
    return total;
}

Int moment_formula_pure2(int n) {
    if (n < 0) throw BadParameter("moment_formula_pure2: n must be >= 0");
    Int total = 0;
    std::vector<int> buf;
    // free indices l1,l2,l3,l5,l7,l8,l9,l10,l11,l12
    for_each_tuple(10, n, buf, 0, [&](const std::vector<int>& l, int) {
        const int l1 = l[0], l2 = l[1], l3 = l[2], l5 = l[3], l7 = l[4], l8 = l[5],
                  l9 = l[6], l10 = l[7], l11 = l[8], l12 = l[9];
        const int p1 = l1 - l2 + l3 + 2 * l7 - 2 * l8 + l9 - l10 - l11 + l12;
        const int p2 = l1 - l2 + l5 + l7 - l8 + 2 * l9 - 2 * l10 + l11 - l12;
        const int p3 = 3 * l1 - l2 + 2 * l3 + 2 * l5 + 4 * l7 - 2 * l8 + 4 * l9 - 2 * l10 +
                       l11 + l12;
        if (p1 < 0 || p2 < 0 || p3 < 0 || p3 > n) return;
        total += Int(Int(1) << (n - p3)) *
                 multinomial({l1, l2, l3, p1, l5, p2, l7, l8, l9, l10, l11, l12, n - p3});
    });
    return total;
}

Int moment_constant_term(int m, int n) {
    if (m < 0 || n < 0) throw BadParameter("moment_constant_term: m,n must be >= 0");
    LaurentPoly2 p = chi_fund_laurent(1).pow(m) * chi_fund_laurent(2).pow(n);
    return p.coeff(0, 0);
}

MomentReport moment_report(int m, int n) {
    MomentReport r;
    r.m = m;
    r.n = n;
    r.value_walk = moment_walk(WalkKind::TorusLattice, m, n);
    r.value_formula = moment_formula_cross(m, n);
    r.value_ct = moment_constant_term(m, n);
    r.agree = r.value_walk == r.value_formula && r.value_formula == r.value_ct;
    return r;
}

}  // namespace g2lab

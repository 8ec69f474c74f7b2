#pragma once

#include <map>
#include <utility>

#include "g2lab/characters.hpp"
#include "g2lab/numbers.hpp"

namespace g2lab {

enum class WalkKind { TorusLattice, DominantCone };

/// Sparse integer vector over the walk state space: Z^2 lattice sites for the
/// torus graphs, dominant weights for the cone graphs. Entries outside the
/// stored support are zero.
class WeightVector {
public:
    using Site = std::pair<long, long>;

    explicit WeightVector(WalkKind kind) : kind_(kind) {}
    static WeightVector delta_origin(WalkKind kind);

    WalkKind kind() const { return kind_; }
    const std::map<Site, Int>& entries() const { return entries_; }
    Int at(long a, long b) const;
    void add(long a, long b, const Int& c);
    Int total_mass() const;

private:
    WalkKind kind_;
    std::map<Site, Int> entries_;
};

/// One application of the torus shift operator (7-term stencil for j=1,
/// 15-term for j=2).
WeightVector step_torus(int j, const WeightVector& v);

/// One application of the cone operator: fuse_with_fundamental applied
/// linearly, with the zero rule providing the boundary truncation.
WeightVector step_cone(int j, const WeightVector& v);

/// <(v1)^m (v2)^n delta_0, delta_0> by explicit stepping.
Int moment_walk(WalkKind kind, int m, int n);

/// Torus cross moment by the double multinomial sum over k_1..k_6, l_1..l_12
/// with r_1 = r_2 = 0. Each identity step of the second operator can come
/// from either of its two identity terms, giving a factor 2^(n - sum l).
Int moment_formula_cross(int m, int n);

/// Pure moment of the first torus operator (n = 0 specialization).
Int moment_formula_pure1(int m);

/// Pure moment of the second torus operator, with the 2^(n-p3) weight.
Int moment_formula_pure2(int n);

/// Constant coefficient of sigma1^m * sigma2^n (exact Laurent arithmetic).
Int moment_constant_term(int m, int n);

/// All three torus routes side by side.
struct MomentReport {
    int m = 0, n = 0;
    Int value_walk, value_formula, value_ct;
    bool agree = false;
};

MomentReport moment_report(int m, int n);

}  // namespace g2lab

#pragma once

#include <map>
#include <vector>

#include "g2lab/laurent.hpp"
#include "g2lab/torus_point.hpp"

namespace g2lab {

/// Dominant weight of G2 in partition labels (mu1 >= mu2 >= 0).
/// Dynkin labels are (mu1 - mu2, mu2).
struct DominantWeight {
    long mu1 = 0, mu2 = 0;

    long dynkin1() const { return mu1 - mu2; }
    long dynkin2() const { return mu2; }
    static DominantWeight from_dynkin(long l1, long l2) { return {l1 + l2, l2}; }

    bool operator==(const DominantWeight& o) const { return mu1 == o.mu1 && mu2 == o.mu2; }
    bool operator<(const DominantWeight& o) const {
        return mu1 != o.mu1 ? mu1 < o.mu1 : mu2 < o.mu2;
    }
};

/// Restriction of the fundamental character chi_j to T^2 as an exact Laurent
/// polynomial (7 monomials for j=1, 15 for j=2).
const LaurentPoly2& chi_fund_laurent(int j);

/// Closed cosine form of the fundamental characters: x for j=1, y for j=2.
double chi_fund_eval(int j, double theta1, double theta2);
double chi_fund_eval(int j, const TorusPoint& p);

/// General irreducible character chi_w(theta) via the ratio of six-cosine
/// alternating sums (Weyl character formula in S-function form). Denominator
/// zeros are handled by a small-offset two-step Richardson limit; throws
/// SingularPoint if the extrapolation does not settle.
double chi_general(const DominantWeight& w, double theta1, double theta2);

/// Exact character as Laurent polynomial by the Weyl formula
/// chi_w = A_{w+(2,1)} / A_{(2,1)} (alternating orbit sums, exact division).
LaurentPoly2 chi_laurent(const DominantWeight& w);

/// Decomposition of chi_j * chi_w into irreducibles (weight -> multiplicity),
/// implementing the fusion case rules with the zero rule applied last.
std::map<DominantWeight, long> fuse_with_fundamental(int j, const DominantWeight& w);

/// Weyl dimension of the irreducible with the given highest weight.
Int weyl_dimension(const DominantWeight& w);

}  // namespace g2lab

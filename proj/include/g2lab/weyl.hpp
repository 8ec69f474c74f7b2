#pragma once

#include <array>
#include <set>
#include <vector>

#include "g2lab/torus_point.hpp"

namespace g2lab {

/// Element of the Weyl group of G2 acting on T^2 as an integer 2x2 matrix:
/// (theta1, theta2) -> (a11 t1 + a12 t2, a21 t1 + a22 t2) mod 1.
struct WeylElement {
    int a11, a12, a21, a22;

    int det() const { return a11 * a22 - a12 * a21; }

    WeylElement operator*(const WeylElement& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    bool operator==(const WeylElement& o) const {
        return a11 == o.a11 && a12 == o.a12 && a21 == o.a21 && a22 == o.a22;
    }
    bool operator<(const WeylElement& o) const {
        return std::array<int, 4>{a11, a12, a21, a22} <
               std::array<int, 4>{o.a11, o.a12, o.a21, o.a22};
    }

    TorusPoint apply(const TorusPoint& p) const;
};

inline WeylElement weyl_identity() { return {1, 0, 0, 1}; }
inline WeylElement weyl_t2() { return {0, -1, -1, 0}; }
inline WeylElement weyl_t6() { return {0, 1, -1, 1}; }

/// The dihedral Weyl group D12 = <T2, T6>, 12 elements.
const std::vector<WeylElement>& d12_elements();

/// The S3 subgroup <T2, -T6>, 6 elements.
const std::vector<WeylElement>& s3_elements();

/// Exact deduplicated orbit of a torus point.
std::set<TorusPoint> orbit(const TorusPoint& p, const std::vector<WeylElement>& group);

/// Membership in the fundamental domain F of T^2/D12, the closed triangle
/// with vertices (0,1), (1/3,2/3), (1/2,1): theta1+theta2 >= 1, 2*theta1 <= theta2,
/// theta2 <= 1, testing all integer lifts of the [0,1) representative.
/// strict = true tests the open interior instead.
bool in_fundamental_domain(const TorusPoint& p, bool strict = false);

}  // namespace g2lab

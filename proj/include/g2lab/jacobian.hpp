#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace g2lab {

/// Character map Psi: theta -> (x, y) = (chi1, chi2).
std::pair<double, double> psi_map(double theta1, double theta2);

/// Jacobian det(d(x,y)/d(theta1,theta2)) as the six-cosine expression
/// times 8 pi^2.
double jacobian_theta(double theta1, double theta2);

/// The same Jacobian as 256 pi^2 times a product of six sines.
double jacobian_sine_product(double theta1, double theta2);

/// J(theta)^2 / 16 pi^4 as a polynomial in (x, y):
///   (4x^3 - x^2 - 2x - 10xy - y^2 - 10y + 7) * (4y + 7 - 2x - x^2).
/// The cubic factor is >= 0 and the printed quadratic factor x^2+2x-7-4y
/// is <= 0 on the joint spectrum, so the product here carries the sign
/// that makes it equal J^2/16pi^4 (non-negative on the domain).
double jacobian_sq_xy(double x, double y);

enum class BoundaryCurve { C1, C2, C3, C4 };

/// Descriptor of the joint spectrum D: bounding box and the parameter
/// ranges of its four boundary arcs in the x(y) direction.
struct RegionD {
    static constexpr double x_min = -2.0, x_max = 7.0;
    static constexpr double y_min = -2.0, y_max = 14.0;
    struct Arc {
        BoundaryCurve curve;
        double y_lo, y_hi;
    };
    static const std::vector<Arc>& arcs();
};

/// Boundary arcs of the joint spectrum D in the y(x) direction:
///   upper arc  y = -5(x+1) + 2(x+2)^{3/2}   (c2 for x in [-2,7/9], c1 beyond),
///   lower arcs y = -5(x+1) - 2(x+2)^{3/2}   (c3, x in [-2,-1])
///          and 4y = x^2 + 2x - 7            (c4, x in [-1,7]).
double boundary_y_upper(double x);
double boundary_y_lower(double x);  // c3 branch
double boundary_y_c4(double x);

/// x(y) for the named arc via the cube-root formula for the roots p_i(y)
/// of the cubic J^2-factor (c1..c3) or the square root for c4. Roots are
/// matched to arcs by their x-ranges, not by the printed index. Stated
/// ranges: c1 y in [10/27,14], c2 y in [10/27,5], c3 y in [-2,5],
/// c4 y in [-2,14]; throws OutOfRange outside them.
double boundary_x_of_y(BoundaryCurve curve, double y);

/// All real roots of the cubic factor in x at height y (ascending).
std::vector<double> cubic_factor_roots(double y);

/// The three cube-root branch points at height y (complex; conjugate pairs
/// when the cubic has one real root). Near-real pairs mark interior pinches
/// of |J| that quadrature must split at.
std::vector<std::complex<double>> cubic_branch_points(double y);

/// Maximal x-intervals of the slice {x : (x,y) in D} at height y, bounded by
/// boundary roots: one interval for y outside [10/27,5], two inside.
std::vector<std::pair<double, double>> slice_intervals(double y);

/// Membership test for the joint spectrum D: inside the bounding box,
/// cubic factor >= -tol and quadratic factor x^2+2x-7-4y <= tol.
bool domain_contains(double x, double y, double tol = 1e-9);

}  // namespace g2lab

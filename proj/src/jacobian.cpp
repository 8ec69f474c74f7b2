#include "g2lab/jacobian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "g2lab/characters.hpp"
#include "g2lab/errors.hpp"

namespace g2lab {

const std::vector<RegionD::Arc>& RegionD::arcs() {
    static const std::vector<Arc> a{{BoundaryCurve::C1, 10.0 / 27.0, 14.0},
                                    {BoundaryCurve::C2, 10.0 / 27.0, 5.0},
                                    {BoundaryCurve::C3, -2.0, 5.0},
                                    {BoundaryCurve::C4, -2.0, 14.0}};
    return a;
}

std::pair<double, double> psi_map(double t1, double t2) {
    return {chi_fund_eval(1, t1, t2), chi_fund_eval(2, t1, t2)};
}

double jacobian_theta(double t1, double t2) {
    auto c = [](double a) { return std::cos(2.0 * M_PI * a); };
    return 8.0 * M_PI * M_PI *
           (c(2 * t1 + t2) + c(t1 - 3 * t2) + c(3 * t1 - 2 * t2) - c(t1 + 2 * t2) -
            c(3 * t1 - t2) - c(2 * t1 - 3 * t2));
}

double jacobian_sine_product(double t1, double t2) {
    auto s = [](double a) { return std::sin(M_PI * a); };
    return 256.0 * M_PI * M_PI * s(t1) * s(t2) * s(t1 + t2) * s(t1 - t2) * s(2 * t1 - t2) *
           s(t1 - 2 * t2);
}

namespace {

double cubic_factor(double x, double y) {
    return 4 * x * x * x - x * x - 2 * x - 10 * x * y - y * y - 10 * y + 7;
}

double quad_factor(double x, double y) { return x * x + 2 * x - 7 - 4 * y; }

}  // namespace

double jacobian_sq_xy(double x, double y) { return -cubic_factor(x, y) * quad_factor(x, y); }

double boundary_y_upper(double x) { return -5 * (x + 1) + 2 * std::pow(x + 2, 1.5); }
double boundary_y_lower(double x) { return -5 * (x + 1) - 2 * std::pow(x + 2, 1.5); }
double boundary_y_c4(double x) { return (x * x + 2 * x - 7) / 4; }

namespace {

// 12 p_i(y) = -1 - eps_i P - 25 conj(eps_i) / P with the principal cube root
// of P^3 = 145 - 54y + 2 sqrt(27 (27y^2 - 145y + 50)); x = -1 + 4p + 4p^2.
std::vector<std::complex<double>> cube_root_branches(double y) {
    using C = std::complex<double>;
    const C disc = 27.0 * (27.0 * y * y - 145.0 * y + 50.0);
    const C P = std::pow(C(145.0 - 54.0 * y) + 2.0 * std::sqrt(disc), 1.0 / 3.0);
    std::vector<C> xs;
    for (int j = 0; j < 3; ++j) {
        const C eps = std::polar(1.0, 2.0 * M_PI * j / 3.0);
        const C p = (-1.0 - eps * P - 25.0 * std::conj(eps) / P) / 12.0;
        xs.push_back(-1.0 + 4.0 * p + 4.0 * p * p);
    }
    return xs;
}

}  // namespace

std::vector<double> cubic_factor_roots(double y) {
    std::vector<double> roots;
    for (const auto& x : cube_root_branches(y)) {
        if (std::fabs(x.imag()) > 1e-7 * std::max(1.0, std::fabs(x.real()))) continue;
        double r = x.real();
        // one Newton polish on the cubic factor in x
        for (int it = 0; it < 2; ++it) {
            const double f = cubic_factor(r, y);
            const double df = 12 * r * r - 2 * r - 2 - 10 * y;
            if (std::fabs(df) < 1e-12) break;
            r -= f / df;
        }
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    // drop duplicates from nearly-merged complex pairs
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::fabs(a - b) < 1e-12; }),
                roots.end());
    return roots;
}

std::vector<std::complex<double>> cubic_branch_points(double y) { return cube_root_branches(y); }

double boundary_x_of_y(BoundaryCurve curve, double y) {
    const double eps = 1e-9;
    const double ymin = curve == BoundaryCurve::C1 || curve == BoundaryCurve::C2
                            ? 10.0 / 27.0
                            : -2.0;
    const double ymax = curve == BoundaryCurve::C2 || curve == BoundaryCurve::C3 ? 5.0 : 14.0;
    if (y < ymin - eps || y > ymax + eps)
        throw OutOfRange("boundary_x_of_y: y outside the stated range of the curve");
    if (curve == BoundaryCurve::C4) return -1.0 + 2.0 * std::sqrt(std::max(y + 2.0, 0.0));
    auto roots = cubic_factor_roots(y);
    if (roots.empty()) throw OutOfRange("boundary_x_of_y: no real root at this y");
    const double split = 7.0 / 9.0 + 1e-7;
    switch (curve) {
        case BoundaryCurve::C1:  // ascending upper arc, x in [7/9, 7]
            return roots.back();
        case BoundaryCurve::C3:  // lower-left arc, x in [-2, -1]
            return roots.front();
        case BoundaryCurve::C2: {
            // descending upper arc, x in [-2, 7/9]; at the arc junctions the
            // root merges with c1 (y = 10/27) or c3 (y = 5)
            double best = roots.front();
            bool found = false;
            for (double r : roots)
                if (r <= split) {
                    best = r;
                    found = true;
                }
            if (!found) throw OutOfRange("boundary_x_of_y: no c2 root at this y");
            return best;
        }
        default:
            break;
    }
    throw BadParameter("boundary_x_of_y: unknown curve");
}

std::vector<std::pair<double, double>> slice_intervals(double y) {
    const double y_split_lo = 10.0 / 27.0, y_split_hi = 5.0;
    if (y <= -2.0 || y >= 14.0) return {};
    const double c4x = -1.0 + 2.0 * std::sqrt(y + 2.0);
    auto roots = cubic_factor_roots(y);
    if (roots.empty()) return {};
    // approaching (7,14) the upper arc and the parabola are tangent to second
    // order and the wedge width drops below root precision; an inverted tiny
    // interval is that degenerate wedge, not an empty slice
    auto wedge = [](double lo, double hi) {
        if (lo > hi && lo - hi < 1e-6) std::swap(lo, hi);
        return std::pair<double, double>{lo, hi};
    };
    if (y < y_split_lo) {
        return {wedge(roots.front(), c4x)};
    }
    if (y <= y_split_hi && roots.size() >= 3) {
        return {{roots[0], roots[1]}, wedge(roots[2], c4x)};
    }
    return {wedge(roots.back(), c4x)};
}

bool domain_contains(double x, double y, double tol) {
    if (x < -2 - tol || x > 7 + tol || y < -2 - tol || y > 14 + tol) return false;
    return cubic_factor(x, y) >= -tol && quad_factor(x, y) <= tol;
}

}  // namespace g2lab

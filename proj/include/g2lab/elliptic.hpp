#pragma once

#include <string>
#include <utility>

namespace g2lab {

/// Complete elliptic integral of the first kind, K(m) with parameter m
/// (the square of the modulus), by AGM iteration. Throws DivergentK at m >= 1.
double ellip_K(double m);

/// Complete elliptic integral of the second kind, E(m), m <= 1.
double ellip_E(double m);

/// v(x) = 16 (x+2)^{3/2} / (8 (x+2)^{3/2} - x^2 - 22x - 13), x in (-2, 7).
/// Elliptic parameter of the closed-form density weights; v(-1) = 1.
double v_of_x(double x);

enum class DensityTarget { TorusV1, TorusV2, HaarV1, HaarV2 };
enum class EvaluatorKind { ClosedForm, Quadrature };

/// One spectral density weight on its support interval:
///   torus-v1: 12 int |J|^-1 dy        on [-2,7]   (probability density in x)
///   torus-v2: 12 int |J|^-1 dx        on [-2,14]
///   haar-v1:  int |J| dy / 16 pi^4    on [-2,7]
///   haar-v2:  int |J| dx / 16 pi^4    on [-2,14]
/// Closed elliptic-integral forms exist for torus-v1 and haar-v1; the
/// quadrature route exists for all four.
struct DensityProfile {
    DensityTarget target = DensityTarget::TorusV1;
    EvaluatorKind kind = EvaluatorKind::ClosedForm;

    std::pair<double, double> support() const;
    std::string name() const;
};

DensityProfile make_profile(DensityTarget target, EvaluatorKind kind);
DensityProfile profile_by_name(const std::string& name,
                               EvaluatorKind kind = EvaluatorKind::ClosedForm);

/// Density value at an interior point of the support. Throws OutsideSupport
/// at or beyond the endpoints; may return +inf at interior divergence points
/// (x = -1 of torus-v1, endpoints approached by torus-v2).
double density_eval(const DensityProfile& profile, double t);

/// r-th moment of the density over its support.
double density_moment(const DensityProfile& profile, int r);

}  // namespace g2lab

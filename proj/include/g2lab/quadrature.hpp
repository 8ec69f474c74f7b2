#pragma once

#include <functional>

namespace g2lab {

/// tanh-sinh (double exponential) quadrature on (a,b). Absorbs integrable
/// endpoint singularities; nodes never touch the endpoints and non-finite
/// integrand samples are dropped.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-11, double rel_tol = 1e-11, int max_level = 10);

/// Composite Gauss-Legendre with panels graded dyadically toward both
/// endpoints; for smooth-except-at-endpoints integrands.
double graded_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                             int panels_per_side = 20);

}  // namespace g2lab

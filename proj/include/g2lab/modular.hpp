#pragma once

#include <utility>
#include <vector>

#include "g2lab/torus_point.hpp"

namespace g2lab {

using Exponent = std::pair<int, int>;  // Dynkin labels (lambda1, lambda2)

/// Level-k modular data: the exponent set P^k_+ = {lambda1 + 2 lambda2 <= k}
/// ordered lexicographically, and the Kac-Peterson S-matrix.
struct ModularLevel {
    int k = 0;
    double xi = 0.0;  // pi / 3(k+4)
    std::vector<Exponent> exponents;
    std::vector<double> s;  // row-major |exp| x |exp|

    int size() const { return static_cast<int>(exponents.size()); }
    double S(int i, int j) const { return s[static_cast<size_t>(i) * exponents.size() + j]; }
    int index_of(const Exponent& e) const;
    int e0() const { return index_of({0, 0}); }
};

/// Builds the level from the six-cosine S-matrix formula with prefactor
/// -2/((k+4) sqrt 3); the global sign is normalized so S_{00} > 0.
ModularLevel build_level(int k);

/// Eigenvalue beta^{j,(mu)} = S_{rho_j, mu} / S_{0, mu}.
double beta(const ModularLevel& level, int j, const Exponent& mu);

/// Exact rational torus point of an exponent:
/// theta = ((l1hat + 3 l2hat)/3(k+4), -l1hat/3(k+4)) mod 1.
TorusPoint theta_of_exponent(const ModularLevel& level, const Exponent& lambda);
TorusPoint theta_of_exponent(int k, const Exponent& lambda);

/// Distinguished-vertex eigenvector entry psi^lambda_* by its own six-cosine
/// formula (not read from the S-matrix).
double psi_star(const ModularLevel& level, const Exponent& lambda);

/// Kac-Weyl factorized Perron-Frobenius entry phi^*_lambda (ratio of six
/// sine products, normalized to 1 at lambda = 0).
double kac_weyl_phi(const ModularLevel& level, const Exponent& lambda);

/// Verlinde nimrep of the fundamental weight rho_j at this level, rounded to
/// integers. Throws NonIntegerEntry if any rounding residual exceeds 1e-6.
std::vector<std::vector<long>> verlinde_nimrep(const ModularLevel& level, int j);

/// Quantum integer [m] = sin(m xi)/sin(xi).
double q_int(const ModularLevel& level, int m);

/// Quantum dimension of the fundamental generators: [2][7][12]/[4][6] for
/// rho1 and [7][8][15]/([3][4][5]) for rho2.
double q_dim_fundamental(const ModularLevel& level, int j);

/// Quantum dimension of an arbitrary exponent weight (Kac-Weyl sine product).
double q_dim(const ModularLevel& level, const Exponent& lambda);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations (test oracle
/// for the nimrep spectra); ascending order.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a);

/// <N_{rho1}^m N_{rho2}^n e_0, e_0> in exact integer arithmetic.
Int nimrep_moment(const ModularLevel& level, int m, int n);

}  // namespace g2lab

#include "g2lab/modular.hpp"

#include <algorithm>
#include <cmath>

#include "g2lab/errors.hpp"

namespace g2lab {

int ModularLevel::index_of(const Exponent& e) const {
    auto it = std::lower_bound(exponents.begin(), exponents.end(), e);
    if (it == exponents.end() || *it != e) throw BadParameter("exponent not at this level");
    return static_cast<int>(it - exponents.begin());
}

ModularLevel build_level(int k) {
    if (k < 1 || k > 16) throw BadParameter("build_level: k must be in 1..16");
    ModularLevel lev;
    lev.k = k;
    lev.xi = M_PI / (3.0 * (k + 4));
    for (int l1 = 0; l1 <= k; ++l1)
        for (int l2 = 0; 2 * l2 + l1 <= k; ++l2) lev.exponents.push_back({l1, l2});
    std::sort(lev.exponents.begin(), lev.exponents.end());
    const int n = lev.size();
    lev.s.resize(static_cast<size_t>(n) * n);
    const double pref = -2.0 / ((k + 4) * std::sqrt(3.0));
    for (int i = 0; i < n; ++i) {
        const double L1 = lev.exponents[i].first + 1, L2 = lev.exponents[i].second + 1;
        const double L = L1 + L2;
        for (int j = 0; j < n; ++j) {
            const double M1 = lev.exponents[j].first + 1, M2 = lev.exponents[j].second + 1;
            const double M = M1 + M2;
            auto c = [&](double arg) { return std::cos(2.0 * lev.xi * arg); };
            const double bracket =
                c(2 * L * M + L * M2 + L2 * M + 2 * L2 * M2) +
                c(-L * M - 2 * L * M2 + L2 * M - L2 * M2) +
                c(-L * M + L * M2 - 2 * L2 * M - L2 * M2) -
                c(-L * M - 2 * L * M2 - 2 * L2 * M - L2 * M2) -
                c(2 * L * M + L * M2 + L2 * M - L2 * M2) -
                c(-L * M + L * M2 + L2 * M + 2 * L2 * M2);
            lev.s[static_cast<size_t>(i) * n + j] = pref * bracket;
        }
    }
    const int z = lev.e0();
    if (lev.S(z, z) < 0)
        for (auto& v : lev.s) v = -v;
    return lev;
}

double beta(const ModularLevel& level, int j, const Exponent& mu) {
    if (j != 1 && j != 2) throw BadParameter("beta: j must be 1 or 2");
    const int im = level.index_of(mu);
    const int ir = level.index_of(j == 1 ? Exponent{1, 0} : Exponent{0, 1});
    return level.S(ir, im) / level.S(level.e0(), im);
}

TorusPoint theta_of_exponent(int k, const Exponent& lambda) {
    const Int h1 = lambda.first + 1, h2 = lambda.second + 1;
    const Int N = 3 * (k + 4);
    return TorusPoint(Rat(h1 + 3 * h2, N), Rat(-h1, N));
}

TorusPoint theta_of_exponent(const ModularLevel& level, const Exponent& lambda) {
    return theta_of_exponent(level.k, lambda);
}

double psi_star(const ModularLevel& level, const Exponent& lambda) {
    const double h1 = lambda.first + 1, h2 = lambda.second + 1;
    auto c = [&](double arg) { return std::cos(2.0 * level.xi * arg); };
    return -2.0 / ((level.k + 4) * std::sqrt(3.0)) *
           (c(5 * h1 + 9 * h2) + c(h1 + 6 * h2) + c(4 * h1 + 3 * h2) - c(4 * h1 + 9 * h2) -
            c(h1 - 3 * h2) - c(5 * h1 + 6 * h2));
}

namespace {

double sine_product_ratio(double xi, double h1, double h2) {
    auto s = [&](double a) { return std::sin(a * xi); };
    const double num = s(h1) * s(3 * h2) * s(h1 + 3 * h2) * s(2 * h1 + 3 * h2) *
                       s(3 * h1 + 3 * h2) * s(3 * h1 + 6 * h2);
    const double den = s(1) * s(3) * s(4) * s(5) * s(6) * s(9);
    return num / den;
}

}  // namespace

double kac_weyl_phi(const ModularLevel& level, const Exponent& lambda) {
    return sine_product_ratio(level.xi, lambda.first + 1, lambda.second + 1);
}

std::vector<std::vector<long>> verlinde_nimrep(const ModularLevel& level, int j) {
    if (j != 1 && j != 2) throw BadParameter("verlinde_nimrep: j must be 1 or 2");
    const int n = level.size();
    const int ir = level.index_of(j == 1 ? Exponent{1, 0} : Exponent{0, 1});
    const int z = level.e0();
    std::vector<std::vector<long>> out(n, std::vector<long>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            double v = 0.0;
            for (int s = 0; s < n; ++s)
                v += level.S(s, ir) / level.S(s, z) * level.S(s, a) * level.S(s, b);
            const double r = std::round(v);
            if (std::fabs(v - r) > 1e-6)
                throw NonIntegerEntry("verlinde_nimrep: entry " + std::to_string(v) +
                                      " is not integral");
            out[a][b] = out[b][a] = static_cast<long>(r);
        }
    }
    return out;
}

double q_int(const ModularLevel& level, int m) {
    return std::sin(m * level.xi) / std::sin(level.xi);
}

double q_dim_fundamental(const ModularLevel& level, int j) {
    if (j == 1)
        return q_int(level, 2) * q_int(level, 7) * q_int(level, 12) /
               (q_int(level, 4) * q_int(level, 6));
    if (j == 2)
        return q_int(level, 7) * q_int(level, 8) * q_int(level, 15) /
               (q_int(level, 3) * q_int(level, 4) * q_int(level, 5));
    throw BadParameter("q_dim_fundamental: j must be 1 or 2");
}

double q_dim(const ModularLevel& level, const Exponent& lambda) {
    return sine_product_ratio(level.xi, lambda.first + 1, lambda.second + 1);
}

Int nimrep_moment(const ModularLevel& level, int m, int n) {
    const int sz = level.size();
    const auto n1 = verlinde_nimrep(level, 1);
    const auto n2 = verlinde_nimrep(level, 2);
    std::vector<Int> v(sz, 0);
    v[level.e0()] = 1;
    auto apply = [&](const std::vector<std::vector<long>>& mat) {
        std::vector<Int> out(sz, 0);
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j)
                if (mat[i][j] != 0) out[i] += mat[i][j] * v[j];
        v = std::move(out);
    };
    for (int i = 0; i < m; ++i) apply(n1);
    for (int i = 0; i < n; ++i) apply(n2);
    return v[level.e0()];
}

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    const int n = static_cast<int>(a.size());
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-18) continue;
                const double theta = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace g2lab

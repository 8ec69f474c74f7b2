#include "g2lab/characters.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>

#include "g2lab/errors.hpp"
#include "g2lab/weyl.hpp"

namespace g2lab {

const LaurentPoly2& chi_fund_laurent(int j) {
    static const LaurentPoly2 s1 = [] {
        LaurentPoly2 p;
        for (auto [a, b] : {std::pair<long, long>{0, 0}, {1, 0}, {-1, 0}, {0, -1},
                            {0, 1}, {-1, 1}, {1, -1}})
            p.add_term(a, b, 1);
        return p;
    }();
    static const LaurentPoly2 s2 = [] {
        LaurentPoly2 p = s1;
        for (auto [a, b] : {std::pair<long, long>{0, 0}, {1, 1}, {-1, -1}, {2, -1},
                            {-2, 1}, {1, -2}, {-1, 2}})
            p.add_term(a, b, 1);
        return p;
    }();
    if (j == 1) return s1;
    if (j == 2) return s2;
    throw BadParameter("chi_fund_laurent: j must be 1 or 2");
}

double chi_fund_eval(int j, double t1, double t2) {
    auto c = [](double a) { return std::cos(2.0 * M_PI * a); };
    double x = 1 + 2 * c(t1) + 2 * c(t2) + 2 * c(t1 - t2);
    if (j == 1) return x;
    if (j == 2) return x + 1 + 2 * c(t1 + t2) + 2 * c(2 * t1 - t2) + 2 * c(t1 - 2 * t2);
    throw BadParameter("chi_fund_eval: j must be 1 or 2");
}

double chi_fund_eval(int j, const TorusPoint& p) { return chi_fund_eval(j, p.t1(), p.t2()); }

namespace {

// The six alternating exponent pairs of the Weyl-antisymmetrized sum for a
// strictly dominant weight with hatted Dynkin labels (w1, w2): the S-function
// is sum_i sign_i cos(2 pi e_i . theta), and chi = S_{lambda+rho} / S_rho.
struct AltTerm {
    long e1, e2;
    int sign;
};

std::array<AltTerm, 6> alternant_exponents(long w1, long w2) {
    return {{{w1 + 2 * w2, -(w1 + w2), +1},
             {w1 + w2, w2, +1},
             {w2, -(w1 + 2 * w2), +1},
             {w1 + 2 * w2, -w2, -1},
             {w1 + w2, -(w1 + 2 * w2), -1},
             {w2, w1 + w2, -1}}};
}

double s_function(long w1, long w2, double t1, double t2) {
    double s = 0.0;
    for (const auto& t : alternant_exponents(w1, w2))
        s += t.sign * std::cos(2.0 * M_PI * (t.e1 * t1 + t.e2 * t2));
    return s;
}

double chi_ratio(const DominantWeight& w, double t1, double t2) {
    double den = s_function(1, 1, t1, t2);
    double num = s_function(w.dynkin1() + 1, w.dynkin2() + 1, t1, t2);
    return num / den;
}

}  // namespace

double chi_general(const DominantWeight& w, double t1, double t2) {
    double den = s_function(1, 1, t1, t2);
    if (std::fabs(den) > 1e-9) return chi_ratio(w, t1, t2);
    // Denominator zero. At points where the alternant vanishes to high order
    // (the D12-fixed corners) an offset ratio loses all precision in doubles,
    // so moderate weights fall back to the exact Laurent expansion.
    if (w.mu1 <= 40) {
        static std::map<std::pair<long, long>, LaurentPoly2> cache;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({w.mu1, w.mu2});
        if (it == cache.end()) it = cache.emplace(std::pair{w.mu1, w.mu2}, chi_laurent(w)).first;
        return it->second.eval_real(t1, t2);
    }
    // large weights: small-offset limit with two-step Richardson extrapolation
    const double h = 1e-5;
    const double d1 = 0.6180339887498949, d2 = 0.3819660112501051;
    auto f = [&](double h_) { return chi_ratio(w, t1 + h_ * d1, t2 + h_ * d2); };
    double r1 = 2 * f(h / 2) - f(h);
    double r2 = 2 * f(h / 4) - f(h / 2);
    if (std::fabs(r1 - r2) > 1e-6 * std::max(1.0, std::fabs(r2)))
        throw SingularPoint("chi_general: limit did not converge at the singular point");
    return r2;
}

LaurentPoly2 chi_laurent(const DominantWeight& w) {
    auto alt_sum = [](long w1, long w2) {
        LaurentPoly2 p;
        for (const auto& t : alternant_exponents(w1, w2)) {
            p.add_term(t.e1, t.e2, t.sign);
            p.add_term(-t.e1, -t.e2, t.sign);
        }
        return p;
    };
    static const LaurentPoly2 denom = alt_sum(1, 1);
    return alt_sum(w.dynkin1() + 1, w.dynkin2() + 1).divide_exact(denom);
}

std::map<DominantWeight, long> fuse_with_fundamental(int j, const DominantWeight& w) {
    const long m1 = w.mu1, m2 = w.mu2;
    std::vector<DominantWeight> raw;
    if (j == 1) {
        if (m1 == m2) {
            raw = {{m1 + 1, m2}, {m1, m2 - 1}, {m1 + 1, m2 - 1}};
        } else {
            raw = {{m1, m2},     {m1 + 1, m2},     {m1 - 1, m2},    {m1, m2 - 1},
                   {m1, m2 + 1}, {m1 - 1, m2 + 1}, {m1 + 1, m2 - 1}};
        }
    } else if (j == 2) {
        if (m2 == 0) {
            if (m1 == 0) {
                raw = {{1, 1}};
            } else if (m1 == 1) {
                raw = {{1, 0}, {2, 0}, {2, 1}};
            } else {
                raw = {{m1, 0},     {m1 + 1, 0},     {m1 - 1, 0}, {m1, -1},
                       {m1, 1},     {m1 - 1, 1},     {m1 + 1, -1},
                       {m1 + 1, 1}, {m1 - 2, 1},     {m1 - 1, 2}};
            }
        } else if (m1 == m2) {
            raw = {{m1, m1},         {m1 - 1, m1 - 1}, {m1 + 1, m1 + 1},
                   {m1 + 1, m1 - 1}, {m1 + 1, m1 - 2}, {m1 + 2, m1 - 1}};
        } else if (m1 == m2 + 1) {
            raw = {{m1, m2},         {m1, m2},         {m1 - 1, m2 - 1}, {m1 + 1, m2 + 1},
                   {m1 + 1, m2 - 1}, {m1 + 1, m2 - 2}, {m1 + 2, m2 - 1}, {m1 + 1, m2},
                   {m1, m2 - 1}};
        } else {
            raw = {{m1, m2},         {m1 + 1, m2},     {m1 - 1, m2},     {m1, m2 - 1},
                   {m1, m2 + 1},     {m1 - 1, m2 + 1}, {m1 + 1, m2 - 1}, {m1, m2},
                   {m1 - 1, m2 - 1}, {m1 + 1, m2 + 1}, {m1 + 1, m2 - 2}, {m1 - 1, m2 + 2},
                   {m1 + 2, m2 - 1}, {m1 - 2, m2 + 1}};
        }
    } else {
        throw BadParameter("fuse_with_fundamental: j must be 1 or 2");
    }
    std::map<DominantWeight, long> out;
    for (const auto& v : raw)
        if (v.mu2 >= 0 && v.mu1 >= v.mu2) ++out[v];
    return out;
}

Int weyl_dimension(const DominantWeight& w) {
    Int h1 = w.dynkin1() + 1, h2 = w.dynkin2() + 1;
    Int num = h1 * (3 * h2) * (h1 + 3 * h2) * (2 * h1 + 3 * h2) * (3 * h1 + 3 * h2) *
              (3 * h1 + 6 * h2);
    return num / 3240;  // 1*3*4*5*6*9
}

}  // namespace g2lab

#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2lab/numbers.hpp"
#include "g2lab/torus_point.hpp"

namespace g2lab {

enum class Invariance { S3, D12 };

/// Finite weighted atom list on T^2 with exact rational atom positions.
/// Weights are real; negative weights occur only in the printed exceptional
/// theorems (subtracted Dirac terms) and are surfaced by the audit.
struct DiracMeasureT2 {
    std::string name;
    Invariance invariance = Invariance::D12;
    std::map<TorusPoint, double> atoms;

    double mass() const;
    size_t support_size() const { return atoms.size(); }
    /// weight(g p) == weight(p) for every group element, exact atom lookup.
    bool is_invariant(double tol = 1e-12) const;
    void add_atom(const TorusPoint& p, double w);
    void drop_null_atoms(double tol = 1e-14);
};

/// d^((n)): uniform Dirac measure on the S3-orbit of (tau,tau),
/// (conj(omega) conj(tau), omega), (omega, conj(omega) conj(tau)),
/// omega = e^{2 pi i/3}, tau = e^{2 pi i/n}; n rational >= 2.
DiracMeasureT2 measure_dn(const Rat& n);

/// d^((n,k)): uniform Dirac measure on the S3-orbit of the six listed seed
/// points; n rational > 2, 0 <= k <= 1/n.
DiracMeasureT2 measure_dnk(const Rat& n, const Rat& kk);

/// Uniform measure on F_k^W = {(q1/3(k+4), q2/3(k+4)) : q1+q2 = 0 mod 3},
/// 3(k+4)^2 atoms.
DiracMeasureT2 measure_fkw(int k);

/// Joint spectral measure of the level-k fusion graphs:
/// weight J(p)^2/(192 pi^4) times the uniform F_k^W weight.
DiracMeasureT2 measure_ak(int k);

enum class ExceptionalName { E3, E3M, E4, E4M, E4star };

ExceptionalName exceptional_by_name(const std::string& name);
std::string exceptional_name_str(ExceptionalName name);

/// The five exceptional-invariant measures. corrected=false builds exactly
/// the printed theorem formulas (including subtracted Dirac terms and the
/// printed supports); corrected=true applies the coefficient/support fixes
/// that restore total mass 1 and integer small moments. Every difference is
/// reported by audit_measure.
DiracMeasureT2 measure_exceptional(ExceptionalName name, bool corrected);

/// sum over atoms of weight * chi1^m * chi2^n.
double measure_moment(const DiracMeasureT2& mu, int m, int n);

struct AuditRow {
    std::string exponent;     // "(l1,l2)"
    TorusPoint theta;
    double printed_value;     // printed |J|/8pi^2 (or |psi*|^2 for zeta rows)
    double computed;
    double residual;
    std::string relation;
};

struct AuditFlag {
    std::string what;
    double printed_value;
    double computed;
};

struct AuditReport {
    std::string measure;
    double printed_mass = 0.0;
    double corrected_mass = 0.0;
    std::vector<AuditRow> table_rows;         // |J|/8pi^2 column checks
    std::vector<AuditRow> zeta_rows;          // |psi*|^2 = (2/21)|J|/8pi^2 + zeta
    std::vector<double> corrected_moments;    // (m,n) with m+n <= 3, row-major
    std::vector<std::string> moment_labels;
    double max_moment_integrality_residual = 0.0;
    bool corrected_moments_nonnegative = true;
    std::vector<AuditFlag> flags;
};

/// Exact rational zeta corrections of the E3-family relation
/// |psi*|^2 = (2/21)(|J|/8pi^2) + zeta_lambda.
const std::map<std::string, Rat>& zeta_table(ExceptionalName name);

AuditReport audit_measure(ExceptionalName name);

/// JSON export: {name, invariance, atoms:[{theta:[num1,num2,den],weight}], mass}
/// with weights at 17 significant digits.
std::string measure_to_json(const DiracMeasureT2& mu);

}  // namespace g2lab

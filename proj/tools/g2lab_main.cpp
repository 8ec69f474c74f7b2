#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "g2lab/characters.hpp"
#include "g2lab/elliptic.hpp"
#include "g2lab/errors.hpp"
#include "g2lab/measures.hpp"
#include "g2lab/modular.hpp"
#include "g2lab/verify.hpp"
#include "g2lab/walk_moments.hpp"

using nlohmann::json;

namespace {

std::string fmt(double v, int sig) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

int thread_cap() {
    if (const char* env = std::getenv("G2LAB_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 4;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

g2lab::Rat parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return g2lab::Rat(g2lab::Int(s));
    return g2lab::Rat(g2lab::Int(s.substr(0, slash)), g2lab::Int(s.substr(slash + 1)));
}

int cmd_moments(const std::string& kind, int m, int n, const std::string& route) {
    using g2lab::Int;
    using g2lab::WalkKind;
    if (m + n > 10) {
        std::cerr << "error: m+n must be <= 10\n";
        return 1;
    }
    const bool torus = kind == "torus";
    if (torus && route == "all") {
        const auto rep = g2lab::moment_report(m, n);
        std::cout << "walk " << rep.value_walk.str() << "\n"
                  << "formula " << rep.value_formula.str() << "\n"
                  << "ct " << rep.value_ct.str() << "\n";
        if (!rep.agree) {
            std::cerr << "route disagreement\n";
            return 2;
        }
        return 0;
    }
    std::vector<std::pair<std::string, Int>> rows;
    if (route == "walk" || route == "all")
        rows.emplace_back("walk",
                          moment_walk(torus ? WalkKind::TorusLattice : WalkKind::DominantCone,
                                      m, n));
    if (torus && route == "formula")
        rows.emplace_back("formula", g2lab::moment_formula_cross(m, n));
    if (torus && route == "ct") rows.emplace_back("ct", g2lab::moment_constant_term(m, n));
    if (rows.empty()) {
        std::cerr << "error: route '" << route << "' not applicable to kind '" << kind << "'\n";
        return 1;
    }
    bool agree = true;
    for (const auto& [name, value] : rows) {
        std::cout << name << " " << value.str() << "\n";
        if (value != rows.front().second) agree = false;
    }
    if (!agree) {
        std::cerr << "route disagreement\n";
        return 2;
    }
    return 0;
}

int cmd_density(const std::string& target, int grid, const std::string& out,
                const std::string& svg) {
    const auto prof = g2lab::profile_by_name(target);
    const auto [a, b] = prof.support();
    const double cap = 1e6;
    const double scale = 4.0 * M_PI * M_PI;
    std::ostringstream csv;
    csv << "t,density,scale,clipped\n";
    std::vector<std::pair<double, double>> pts;
    const double eta = (b - a) * 1e-9;  // endpoint rows carry the one-sided limit
    for (int i = 0; i < grid; ++i) {
        const double t = a + (b - a) * i / (grid - 1.0);
        const double te = std::min(std::max(t, a + eta), b - eta);
        double v;
        bool clipped = false;
        try {
            v = g2lab::density_eval(prof, te);
            if (!std::isfinite(v) || v > cap) {
                v = cap;
                clipped = true;
            }
        } catch (const std::exception&) {
            v = cap;
            clipped = true;
        }
        pts.emplace_back(t, v);
        csv << fmt(t, 12) << "," << fmt(v, 12) << "," << fmt(scale, 12) << ","
            << (clipped ? 1 : 0) << "\n";
    }
    write_file(out, csv.str());
    if (!svg.empty()) {
        double vmax = 0.0;
        for (const auto& [t, v] : pts) vmax = std::max(vmax, v);
        const double w = 640, h = 360, pad = 20;
        std::ostringstream sv;
        sv << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
           << "\"><polyline fill=\"none\" stroke=\"black\" points=\"";
        for (const auto& [t, v] : pts) {
            const double px = pad + (t - a) / (b - a) * (w - 2 * pad);
            const double py = h - pad - (vmax > 0 ? v / vmax : 0.0) * (h - 2 * pad);
            sv << fmt(px, 8) << "," << fmt(py, 8) << " ";
        }
        sv << "\"/></svg>\n";
        write_file(svg, sv.str());
    }
    return 0;
}

int cmd_modular(int k, const std::string& what, const std::string& out, bool as_json) {
    const auto lev = g2lab::build_level(k);
    std::ostringstream os;
    json j;
    auto exp_label = [&](int i) {
        return "(" + std::to_string(lev.exponents[i].first) + "," +
               std::to_string(lev.exponents[i].second) + ")";
    };
    if (what == "smatrix") {
        if (as_json) {
            j["k"] = k;
            for (int a = 0; a < lev.size(); ++a) {
                json row = json::array();
                for (int b = 0; b < lev.size(); ++b) row.push_back(lev.S(a, b));
                j["smatrix"].push_back(row);
            }
            for (int a = 0; a < lev.size(); ++a) j["exponents"].push_back(exp_label(a));
        } else {
            os << "exponent";
            for (int b = 0; b < lev.size(); ++b) os << "," << exp_label(b);
            os << "\n";
            for (int a = 0; a < lev.size(); ++a) {
                os << exp_label(a);
                for (int b = 0; b < lev.size(); ++b) os << "," << fmt(lev.S(a, b), 12);
                os << "\n";
            }
        }
    } else if (what == "nimrep") {
        for (int jj : {1, 2}) {
            const auto nim = g2lab::verlinde_nimrep(lev, jj);
            if (as_json) {
                j["nimrep_rho" + std::to_string(jj)] = nim;
            } else {
                os << "# nimrep rho" << jj << "\n";
                for (int a = 0; a < lev.size(); ++a) {
                    os << exp_label(a);
                    for (int b = 0; b < lev.size(); ++b) os << "," << nim[a][b];
                    os << "\n";
                }
            }
        }
    } else if (what == "psi") {
        double sumsq = 0.0;
        for (int a = 0; a < lev.size(); ++a) {
            const double p = g2lab::psi_star(lev, lev.exponents[a]);
            sumsq += p * p;
            if (as_json) {
                j["psi"].push_back({{"exponent", exp_label(a)}, {"value", p}});
            } else {
                os << exp_label(a) << "," << fmt(p, 12) << "\n";
            }
        }
        if (as_json)
            j["sum_of_squares"] = sumsq;
        else
            os << "# sum of squares," << fmt(sumsq, 12) << "\n";
    } else if (what == "theta") {
        for (int a = 0; a < lev.size(); ++a) {
            const auto th = g2lab::theta_of_exponent(lev, lev.exponents[a]);
            if (as_json) {
                j["theta"].push_back({{"exponent", exp_label(a)},
                                      {"num1", th.num1().str()},
                                      {"num2", th.num2().str()},
                                      {"den", th.den().str()}});
            } else {
                os << exp_label(a) << "," << th.num1().str() << "/" << th.den().str() << ","
                   << th.num2().str() << "/" << th.den().str() << "\n";
            }
        }
    } else {
        std::cerr << "error: unknown table '" << what << "'\n";
        return 1;
    }
    const std::string payload = as_json ? j.dump(2) + "\n" : os.str();
    if (out.empty())
        std::cout << payload;
    else
        write_file(out, payload);
    return 0;
}

int cmd_measure(const std::string& name, const std::string& n, const std::string& kk, int k,
                bool corrected, const std::string& out) {
    g2lab::DiracMeasureT2 mu;
    if (name == "dn") {
        mu = g2lab::measure_dn(parse_rational(n));
    } else if (name == "dnk") {
        mu = g2lab::measure_dnk(parse_rational(n), parse_rational(kk));
    } else if (name == "fkw") {
        mu = g2lab::measure_fkw(k);
    } else if (name == "ak") {
        mu = g2lab::measure_ak(k);
    } else {
        mu = g2lab::measure_exceptional(g2lab::exceptional_by_name(name), corrected);
    }
    const std::string payload = g2lab::measure_to_json(mu) + "\n";
    if (out.empty())
        std::cout << payload;
    else
        write_file(out, payload);
    return 0;
}

int cmd_verify(const std::string& scope, const std::string& json_out) {
    const auto results = g2lab::run_checks(scope, thread_cap());
    if (results.empty()) {
        std::cerr << "error: no checks match scope '" << scope << "'\n";
        return 1;
    }
    bool hard_fail = false;
    json report = json::array();
    double total = 0.0;
    for (const auto& r : results) {
        std::cout << "[" << g2lab::status_str(r.status) << "] " << r.id;
        if (r.residual > 0) std::cout << " residual=" << fmt(r.residual, 3);
        std::cout << " (" << fmt(r.seconds, 3) << "s)";
        if (!r.detail.empty()) std::cout << " " << r.detail;
        std::cout << "\n";
        total += r.seconds;
        if (r.status == g2lab::CheckStatus::Fail) hard_fail = true;
        report.push_back({{"id", r.id},
                          {"scope", r.scope},
                          {"status", g2lab::status_str(r.status)},
                          {"residual", r.residual},
                          {"seconds", r.seconds},
                          {"detail", r.detail}});
    }
    std::cout << "total check time " << fmt(total, 4) << "s over " << results.size()
              << " checks\n";
    if (!json_out.empty()) write_file(json_out, report.dump(2) + "\n");
    return hard_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"joint spectral measures of the G2 torus, Haar and fusion graphs"};
    app.require_subcommand(1);

    auto* mom = app.add_subcommand("moments", "exact walk moments by several routes");
    std::string kind = "torus", route = "all";
    int m = 0, n = 0;
    mom->add_option("--kind", kind, "torus|cone")
        ->capture_default_str()
        ->check(CLI::IsMember({"torus", "cone"}));
    mom->add_option("-m", m, "power of the first operator")->required();
    mom->add_option("-n", n, "power of the second operator")->required();
    mom->add_option("--route", route, "walk|formula|ct|all")
        ->capture_default_str()
        ->check(CLI::IsMember({"walk", "formula", "ct", "all"}));

    auto* den = app.add_subcommand("density", "export a spectral density as CSV");
    std::string target = "torus-v1", out = "density.csv", svg;
    int grid = 512;
    den->add_option("--target", target, "torus-v1|torus-v2|haar-v1|haar-v2")->capture_default_str();
    den->add_option("--grid", grid, "number of sample points")
        ->capture_default_str()
        ->check(CLI::Range(2, 100000));
    den->add_option("--out", out, "output CSV path")->capture_default_str();
    den->add_option("--svg", svg, "optional SVG polyline path");

    auto* mod = app.add_subcommand("modular", "dump level-k modular data");
    int k = 3;
    std::string what = "smatrix", mout;
    bool as_json = false;
    mod->add_option("-k", k, "level")->capture_default_str()->check(CLI::Range(1, 16));
    mod->add_option("--what", what, "smatrix|nimrep|psi|theta")->capture_default_str();
    mod->add_option("--out", mout, "output path (stdout if empty)");
    mod->add_flag("--json", as_json, "JSON instead of CSV");

    auto* mea = app.add_subcommand("measure", "export a discrete invariant measure as JSON");
    std::string mname = "ak", nstr = "6", kkstr = "0", meout;
    int mk = 4;
    bool corrected = false;
    mea->add_option("--name", mname, "dn|dnk|fkw|ak|E3|E3M|E4|E4M|E4star")->capture_default_str();
    mea->add_option("--n", nstr, "rational n for dn/dnk, e.g. 21/4")->capture_default_str();
    mea->add_option("--kk", kkstr, "rational k for dnk, e.g. 1/21")->capture_default_str();
    mea->add_option("-k", mk, "level for fkw/ak")->capture_default_str()->check(CLI::Range(1, 16));
    mea->add_flag("--corrected", corrected, "audit-corrected variant of exceptional measures");
    mea->add_option("--out", meout, "output path (stdout if empty)");

    auto* ver = app.add_subcommand("verify", "run the verification suite");
    std::string scope = "all", json_out;
    ver->add_option("--scope", scope, "all or a module name")->capture_default_str();
    ver->add_option("--json-out", json_out, "write a JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (mom->parsed()) return cmd_moments(kind, m, n, route);
        if (den->parsed()) return cmd_density(target, grid, out, svg);
        if (mod->parsed()) return cmd_modular(k, what, mout, as_json);
        if (mea->parsed()) return cmd_measure(mname, nstr, kkstr, mk, corrected, meout);
        if (ver->parsed()) return cmd_verify(scope, json_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

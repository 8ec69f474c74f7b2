#pragma once

#include <functional>
#include <string>
#include <vector>

namespace g2lab {

enum class CheckStatus { Pass, Fail, Flagged };

struct CheckResult {
    std::string id;
    std::string scope;  // owning module, or "acceptance"
    CheckStatus status = CheckStatus::Pass;
    double residual = 0.0;
    double seconds = 0.0;
    std::string detail;
};

struct Check {
    std::string id;
    std::string scope;
    std::function<CheckResult()> run;
};

/// All registered verification checks (module invariants plus the acceptance
/// criteria acc.1 .. acc.11).
const std::vector<Check>& check_registry();

/// Runs the checks whose scope matches (scope "all" runs everything),
/// possibly concurrently; results are sorted by id.
std::vector<CheckResult> run_checks(const std::string& scope, int max_threads);

std::string status_str(CheckStatus s);

}  // namespace g2lab

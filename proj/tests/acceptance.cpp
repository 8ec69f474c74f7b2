// Acceptance suite: runs every acceptance criterion and prints one pass/fail
// line per criterion. Exit status 0 iff all criteria pass.

#include <chrono>
#include <cstdio>
#include <string>

#include "g2lab/verify.hpp"

int main() {
    using namespace g2lab;
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = run_checks("acceptance", 4);
    int failures = 0;
    for (const auto& r : results) {
        const bool ok = r.status != CheckStatus::Fail;
        std::printf("[%s] %s (residual %.3g, %.2fs)%s%s\n", ok ? "PASS" : "FAIL", r.id.c_str(),
                    r.residual, r.seconds, r.detail.empty() ? "" : " -- ",
                    r.detail.c_str());
        if (!ok) ++failures;
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // criterion 1 carries a 10s budget, criterion 11 a 120s budget for the
    // whole verification run
    for (const auto& r : results) {
        if (r.id == "acc.01.moment_triple" && r.seconds > 10.0) {
            std::printf("[FAIL] acc.01 runtime budget exceeded: %.2fs > 10s\n", r.seconds);
            ++failures;
        }
    }
    if (wall > 120.0) {
        std::printf("[FAIL] acceptance wall time %.1fs exceeds the 120s budget\n", wall);
        ++failures;
    } else {
        std::printf("[PASS] acceptance wall time %.1fs within the 120s budget\n", wall);
    }
    std::printf("%d criteria, %d failure(s)\n", static_cast<int>(results.size()), failures);
    return failures == 0 ? 0 : 1;
}

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "sq/budget.hpp"

namespace sq {

/// One named invariant check, aggregated over a whole symmetric group.
struct SuiteItem {
    std::string name;
    bool passed = false;
    std::string detail; // first counterexample on failure, coverage note on success
};

struct SuiteReport {
    std::string suite;
    int window = 0;
    int q = 0;
    std::vector<SuiteItem> items;

    bool all_passed() const {
        for (const SuiteItem& item : items)
            if (!item.passed) return false;
        return true;
    }
};

/// Largest window the suite is allowed to run at (exhaustive enumeration
/// keeps runtimes sane).  Throws MalformedInput for an unknown suite name.
int suite_window_cap(const std::string& suite);

/// Runs one of the named invariant suites ("rank", "inclusions", "words",
/// "euler", "counts", or "all") exhaustively over the symmetric group of the
/// given window size.  q is only consulted by the counting checks.
SuiteReport run_verify_suite(const std::string& suite, int window, int q,
                             const Budget* budget = nullptr);

nlohmann::ordered_json suite_report_json(const SuiteReport& report);
std::string suite_report_text(const SuiteReport& report);

} // namespace sq

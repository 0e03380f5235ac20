#pragma once

#include <string>
#include <vector>

namespace addchow {

// Caps and knobs for the verification suites.  Defaults match the documented
// coverage: insertion identities on points up to max_n + 1 slots and on curves
// up to max_n slots, shuffle identities for r + s <= max_rs, the derivation
// identity on its five canonical shapes plus the (r1, r2) shape, and fixture
// counts for the randomized mixed-complex checks.
struct VerifyOptions {
    int max_n = 4;
    int max_rs = 6;
    int r1 = 1;
    int r2 = 1;
    int fixtures = 100;
    unsigned long long seed = 2026;
    int jobs = 0;  // 0: let the runtime pick the worker count
};

struct CheckResult {
    std::string id;
    std::string suite;
    bool pass = false;
    std::string detail;  // coverage summary on pass, first counterexample on fail
    double seconds = 0.0;
};

// Suite names accepted by run_suite, excluding the aggregate "all".
std::vector<std::string> verify_suites();

// Check identifiers contained in one suite ("all" for every suite, in order).
std::vector<std::string> check_ids(const std::string& suite);

// Run every check of the suite ("all" for the full registry).  Checks execute
// in parallel; results come back in registry order regardless of scheduling.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const VerifyOptions& opt = {});

// Run the named checks (exact ids) in the given order.
std::vector<CheckResult> run_checks(const std::vector<std::string>& ids,
                                    const VerifyOptions& opt = {});

bool all_passed(const std::vector<CheckResult>& results);

// Text report: one line per check; the structured variant emits
// `check-id status detail` records.
std::string results_text(const std::vector<CheckResult>& results,
                         bool structured = false);

} // namespace addchow

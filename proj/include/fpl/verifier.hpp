#pragma once

#include <string>
#include <vector>

#include "fpl/bei.hpp"
#include "fpl/graph.hpp"

// Brute-force re-verification of the computationally checkable identities.
// The expansion-based checks (switching, triangle) never touch the Groebner
// engine, so they stand as independent oracles for it.

namespace fpl {

enum class CheckOutcome { Pass, Fail, Skipped };

struct CheckResult {
    std::string check;
    std::string params;
    CheckOutcome outcome = CheckOutcome::Skipped;
    std::string detail;  // counterexample on fail, reason on skip
    double elapsed_ms = 0.0;

    bool passed() const { return outcome == CheckOutcome::Pass; }
    // probes are recorded, never fatal
    bool is_probe() const { return check.rfind("probe", 0) == 0; }
};

std::string check_result_json(const CheckResult& r);

CheckResult check_lucas(uint32_t p, uint64_t bound);
CheckResult check_alternating_binomials(uint32_t p);
CheckResult check_switching_identity(uint32_t p);
CheckResult check_triangle_lemma(uint32_t p);
CheckResult check_regular_sequence_intersection(int t, unsigned cap);
CheckResult check_char6_lemma_char2();
CheckResult probe_char6_lemma(uint32_t p);
CheckResult check_gallai_reduction(const std::vector<Graph>& corpus);
// family in {"anti-hole", "co-XF1", "co-XF6"}; n is the family parameter.
CheckResult check_coregular_structures(const std::string& family, int n,
                                       uint64_t budget = kDefaultBudget);

}  // namespace fpl

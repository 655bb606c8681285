#pragma once

#include <string>
#include <vector>

namespace poscodeg {

struct CriterionResult {
    std::string name;
    bool passed = false;
    /// Informational entries (the n = 7 probes) are reported but never gate
    /// the suite; they fail only on a certified contradiction, not on
    /// running out of budget.
    bool informational = false;
    std::string detail;  // one line of evidence
};

struct ReproduceOptions {
    /// Node cap for each level of the informational n = 7 probe searches.
    long long probe_budget = 2'000'000;
    int jobs = 1;
    bool probes = true;
};

/// Runs the full acceptance suite: every gating criterion in order, then the
/// informational probes.  Every gating result is deterministic (fixed
/// internal random seeds, no time dependence).
std::vector<CriterionResult> reproduce_all(const ReproduceOptions& opts = {});

/// True iff every non-informational criterion passed.
bool reproduce_passed(const std::vector<CriterionResult>& results);

}  // namespace poscodeg

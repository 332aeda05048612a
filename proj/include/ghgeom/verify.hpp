#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghgeom/common.hpp"

namespace ghgeom {

struct VerifyOptions {
    std::uint64_t seed = 7;
    double eps = kDefaultEps;
    int budget_cells = 30;
    /// > 0 caps the trial count of every randomized suite (for smoke runs);
    /// 0 keeps the pinned counts.
    int trials_override = 0;
};

/// One acceptance criterion. `worst` is the normalized residual: each
/// subcheck divides its raw residual by the tolerance pinned at the check
/// site, so pass requires worst <= 1 (and the runtime caps for the
/// performance criterion).
struct CriterionResult {
    std::string id;
    std::string name;
    int trials = 0;
    int failures = 0;
    double worst = 0.0;
    double runtime_ms = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::uint64_t seed = 0;
    double eps = 0.0;
    int trials_override = 0;
    std::vector<CriterionResult> criteria;
    double total_ms = 0.0;
    bool pass = false;
};

VerificationReport run_verification(const VerifyOptions& opts = {});

}  // namespace ghgeom

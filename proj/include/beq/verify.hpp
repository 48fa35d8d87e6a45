#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace beq {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, or a short summary of what was covered
};

/// Runs one of the eleven verification criteria (1-based id).
/// max_k / max_n = 0 keep the full default grids; positive values clamp them.
CriterionResult run_criterion(int id, int max_k = 0, int max_n = 0, std::uint64_t seed = 2026);

std::vector<CriterionResult> run_all_criteria(int max_k = 0, int max_n = 0,
                                              std::uint64_t seed = 2026);

} // namespace beq

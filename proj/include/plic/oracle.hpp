#pragma once

#include <optional>

#include "plic/kernel.hpp"

namespace plic {

struct OracleBudgetExceeded : std::runtime_error {
    OracleBudgetExceeded() : std::runtime_error("oracle enumeration budget exceeded") {}
};

/// Optional filters for constrained oracle counts.
struct OracleConstraints {
    Mask X = 0;                      // pattern part to place (default: all)
    bool whole_pattern = true;
    std::vector<std::pair<int, int>> pins;  // (pattern vertex, host vertex)
    std::vector<Monitor> hits;              // require |img ∩ set| == low for each (low==upp)
};

/// Ground-truth count by exhaustive enumeration of injective maps.
Count oracle_count(const Graph& pattern, const Graph& host, MapSemantics sem,
                   const std::optional<OracleConstraints>& cons = std::nullopt,
                   long long budget = 400000000LL);

/// Ground-truth full answer table for a subproblem, computed independently
/// of the production kernel (definition-level enumeration).
AnswerTable oracle_table(const PatternCtx& ctx, const Subproblem& pi, MapSemantics sem);

/// Number of k-vertex independent SETS (unordered) in a grid.
Count grid_independent_set_oracle(int rows, int cols, int k);
Count grid_independent_sets_enumerative(int rows, int cols, int k);

}  // namespace plic

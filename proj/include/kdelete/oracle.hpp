#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "kdelete/graph.hpp"

namespace kdelete {

struct OracleBudget {
    std::uint64_t max_states = 10'000'000;

    /// KDELETE_BUDGET if set to a positive integer, else the default.
    static OracleBudget from_env();
};

/// h(G,k) by branch and bound over labelings (vertex 0 in block 0, blocks
/// opened in first-appearance order). The pruning bound adds, for every
/// unlabeled vertex, its fewest edges into any one block. Throws
/// BudgetExceeded after budget.max_states search nodes.
std::uint64_t exact_h(const Graph& g, std::size_t k, OracleBudget budget = {});

/// Calls `visit` on every labeled graph on n vertices, edge subsets in
/// increasing bitmask order over the pairs (0,1), (0,2), ..., (n-2,n-1).
/// Throws CapabilityError for n > 7.
void enumerate_graphs(std::size_t n, const std::function<void(const Graph&)>& visit);

} // namespace kdelete

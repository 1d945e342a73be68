#pragma once

#include <cstddef>
#include <cstdint>

#include "kdelete/bound_report.hpp"
#include "kdelete/graph.hpp"

namespace kdelete {

/// n^2/(e k^2) partition of a triangle-free graph: k neighborhood sets
/// (independent when the graph is triangle-free) grown greedily.
/// Throws PreconditionViolation "TriangleFound" when verify is set.
BoundReport partition_triangle_free(const Graph& g, std::size_t k, bool verify = false);

/// (5/3) 4^(r-3) n^2 / k^((r-1)/(r-2)) for K_r-free graphs. For
/// k <= (2r)^(r-2) the partition comes from random+greedy (n^2/(2k));
/// otherwise k is rounded down to the largest even perfect (r-2)-th power
/// and the neighborhood recursion runs. Throws CapabilityError for r > 8.
BoundReport partition_clique_free(const Graph& g, std::size_t r, std::size_t k, bool verify = false,
                                  std::uint64_t seed = 0);

/// W_{2r+1}-free partitioner. Every neighborhood of such a graph is
/// C_{2r+1}-free, so the 2t even-part sets are each split by the odd-cycle
/// partitioner into s parts, where k is rounded down to l = 2 s^(r+1) and
/// t = s^r. Verification searches every
/// neighborhood for C_{2r+1} and throws PreconditionViolation "WheelFound".
BoundReport partition_wheel_free(const Graph& g, std::size_t r, std::size_t k, bool verify = false,
                                 std::uint64_t seed = 0);

/// (5 * 4^(r-3) - 2) / (3e)
Rational clique_lemma_constant(std::size_t r);
Rational clique_bound(std::size_t n, std::size_t r, std::size_t k);

} // namespace kdelete

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdelete/partition.hpp"
#include "kdelete/rational.hpp"

namespace kdelete {

/// Output of every guaranteed partitioner: the partition, how many edges it
/// leaves inside blocks, and the explicit bound that count is held to.
struct BoundReport {
    std::string method;
    std::size_t requested_k = 0;
    VertexPartition partition;
    /// Edges inside blocks of `partition` on the input graph.
    std::uint64_t deleted = 0;
    /// Deletions as the construction accounts for them (scrubbed edges plus
    /// partition deletions on the scrubbed graph). Never below `deleted`.
    std::uint64_t accounted_deletions = 0;
    Rational bound;
    std::string bound_formula;
    /// deleted <= bound
    bool guarantee_holds = false;
    bool precondition_checked = false;
    bool fallback = false;
    std::string fallback_reason;
    /// Secondary bounds that also apply to this run, e.g. the per-level
    /// lemma bound or D(S_{k+1})/k.
    std::vector<std::pair<std::string, Rational>> auxiliary_bounds;
    /// D(S_{k+1}) for the odd-girth partitioner.
    std::optional<std::uint64_t> leftover_degree_sum;
    /// delta_i = D(S_i)/n^2 for i = 1..k+1 (odd-girth partitioner).
    std::vector<Rational> trajectory;
    std::uint64_t scrub_removed = 0;
};

inline void settle(BoundReport& report) {
    report.deleted = report.partition.internal_edges();
    if (report.accounted_deletions < report.deleted) report.accounted_deletions = report.deleted;
    report.guarantee_holds = Rational(report.deleted) <= report.bound;
}

} // namespace kdelete

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kdelete/graph.hpp"

namespace kdelete {

using Label = std::uint32_t;

/// Labeling of every vertex into one of k blocks (blocks may be empty),
/// with the number of edges inside blocks cached. internal_edges() is the
/// number of deletions that make this labeling a proper k-coloring.
class VertexPartition {
public:
    VertexPartition() = default;
    /// Throws std::invalid_argument if labels.size() != g.n() or a label >= k.
    VertexPartition(const Graph& g, std::size_t k, std::vector<Label> labels);

    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return labels_.size(); }
    std::span<const Label> labels() const noexcept { return labels_; }
    Label label(Vertex v) const { return labels_.at(v); }
    std::uint64_t internal_edges() const noexcept { return internal_; }

    std::vector<VertexSet> blocks() const;

    /// Internal-edge count recomputed from scratch against g.
    std::uint64_t recount(const Graph& g) const;

private:
    std::size_t k_ = 0;
    std::vector<Label> labels_;
    std::uint64_t internal_ = 0;
};

/// Grows disjoint seed sets into a partition: seed i lies in block i and
/// every other vertex, in ascending index order, joins the block it has the
/// fewest edges to among already-placed vertices (ties to the lowest block).
/// The edges added inside blocks, beyond those inside seeds, number at most
/// (e(G) - e(union of seeds)) / seeds.size().
/// Throws std::invalid_argument on overlapping seeds or an empty seed list.
VertexPartition greedy_complete(const Graph& g, std::span<const VertexSet> seeds);

/// Refines each outer set by its inner partition (local indices ascending
/// within the set) and completes the s*t seed blocks greedily. Block i*s+j
/// holds block j of outer set i.
VertexPartition compose_partition(const Graph& g, std::span<const VertexSet> outer,
                                  std::span<const VertexPartition> inner);

/// Best of `trials` uniform labelings, then compared with the greedy
/// completion from empty seeds, which caps the result at m/k.
VertexPartition random_partition(const Graph& g, std::size_t k, std::size_t trials, std::uint64_t seed);

/// Labels 0..n-1 (requires k >= n); zero internal edges.
VertexPartition distinct_partition(const Graph& g, std::size_t k);

} // namespace kdelete

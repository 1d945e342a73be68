#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kdelete/vertex_set.hpp"

namespace kdelete {

/// Undirected edge with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is held both as bit-sets (for set algebra on neighborhoods)
/// and as sorted neighbor lists (for iteration). Edges are deduplicated
/// and stored sorted, so every traversal order is a function of the
/// vertex numbering only.
class Graph {
public:
    Graph() = default;
    /// Throws std::invalid_argument naming the first out-of-range pair
    /// or self-loop. Duplicate pairs (in either orientation) collapse.
    Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list);
    Graph(std::size_t n, std::span<const Edge> edge_list);

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::size_t degree(Vertex v) const { return neighbor_list_.at(v).size(); }
    const VertexSet& neighbors(Vertex v) const { return adjacency_.at(v); }
    std::span<const Vertex> neighbor_list(Vertex v) const { return neighbor_list_.at(v); }
    bool has_edge(Vertex u, Vertex v) const { return u < n_ && adjacency_[u].contains(v); }
    std::span<const VertexSet> adjacency() const noexcept { return adjacency_; }

    VertexSet all_vertices() const { return VertexSet::full(n_); }
    VertexSet empty_set() const { return VertexSet(n_); }

    /// Common degree if every vertex has the same degree.
    std::optional<std::size_t> regular_degree() const;

    /// G[S] with vertices renumbered in ascending order of S; the second
    /// member maps local index -> original vertex.
    std::pair<Graph, std::vector<Vertex>> induced(const VertexSet& subset) const;

    /// Same vertex set, listed edges removed (absent edges are ignored).
    Graph without_edges(std::span<const Edge> removed) const;

private:
    void build(std::vector<Edge> edges);

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adjacency_;
    std::vector<std::vector<Vertex>> neighbor_list_;
};

/// Layers N_0(v) .. N_depth(v): vertices at distance exactly i from v.
std::vector<VertexSet> bfs_layers(const Graph& g, Vertex v, std::size_t depth);

/// D(S): sum of degrees over S (edges inside S count twice).
std::uint64_t degree_sum(const Graph& g, const VertexSet& s);

/// e(S,T): ordered pairs (a,b) in S x T with ab an edge. e(S,S) = 2 e(G[S]).
std::uint64_t edges_between(const Graph& g, const VertexSet& s, const VertexSet& t);

/// e(G[S]).
std::uint64_t edges_within(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);

/// Length of the shortest odd cycle; nullopt when g is bipartite.
std::optional<std::size_t> odd_girth(const Graph& g);

/// Proper 2-coloring if one exists.
std::optional<std::vector<int>> two_coloring(const Graph& g);

/// Vertices of some K_r in g, lexicographically first in the search order.
/// Throws CapabilityError for r > 12.
std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t r);
bool contains_clique(const Graph& g, std::size_t r);

inline constexpr std::size_t kMaxCycleSearchLength = 15;

/// A simple cycle on exactly `length` vertices, listed in traversal order
/// starting at its smallest vertex. Throws CapabilityError when
/// length > kMaxCycleSearchLength and std::invalid_argument when length < 3.
std::optional<std::vector<Vertex>> find_cycle_of_length(const Graph& g, std::size_t length);

/// Edge-list text: "n m" header, then m lines "u v"; '#' lines are comments.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace kdelete

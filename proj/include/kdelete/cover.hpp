#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kdelete/graph.hpp"
#include "kdelete/rational.hpp"

namespace kdelete {

/// Centers v_1..v_k (repetition allowed) and disjoint sets V_i ⊆ N(v_i).
struct CoverSelection {
    std::vector<Vertex> centers;
    std::vector<VertexSet> disjoint_sets;
    /// e(G) - e(G[∪ disjoint_sets])
    std::uint64_t uncovered_edges = 0;
    /// n^2/(e k) for the number of centers used, recorded for reference.
    Rational bound;

    VertexSet covered() const;
};

/// n^2 / (e k), with e rounded down at 12 decimals.
Rational cover_bound(std::size_t n, std::size_t k);

/// e(G[N(c_1) ∪ ... ∪ N(c_k)]).
std::uint64_t covered_edges(const Graph& g, std::span<const Vertex> centers);

/// Best (fewest uncovered edges, earliest trial on ties) of `trials` uniform
/// k-selections with repetition.
CoverSelection select_cover_random(const Graph& g, std::size_t k, std::size_t trials, std::uint64_t seed);

/// Max-coverage greedy: each new center maximizes the edges inside the grown
/// union of neighborhoods; ties go to the larger degree sum of the union,
/// then the lowest index.
CoverSelection select_cover_greedy(const Graph& g, std::size_t k);

/// Conditional-expectation walk over the uniform random selection: each
/// center minimizes the expected uncovered count given the remaining draws,
/// so the result never exceeds the random-selection expectation (<= n^2/(ek)).
CoverSelection select_cover_derandomized(const Graph& g, std::size_t k);

/// Greedy selection, replaced by the derandomized one if greedy misses the
/// n^2/(ek) bound. This is the selection the partitioners build on.
CoverSelection select_cover_certified(const Graph& g, std::size_t k);

/// u(G,k) by enumerating unordered center tuples with repetition.
/// Throws CapabilityError when n^k > 1e7.
std::uint64_t exact_u(const Graph& g, std::size_t k);

/// V_1 = N(c_1), V_i = N(c_i) minus earlier neighborhoods.
CoverSelection disjointify(const Graph& g, std::span<const Vertex> centers);

enum class CoverStrategy { Random, Greedy };

/// Exactly 2t disjoint sets, each inside one center's neighborhood and of
/// size at most floor(n/t), padded with empty sets. The t-center selection
/// leaves at most n^2/(et) edges uncovered.
CoverSelection even_parts(const Graph& g, std::size_t t, CoverStrategy strategy, std::uint64_t seed);

} // namespace kdelete

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "kdelete/bound_report.hpp"
#include "kdelete/graph.hpp"

namespace kdelete {

/// Independent BFS-layer set B = N_i(v) ∩ S with D(B) >= D(N(B) ∩ S)/(x+1),
/// x = (|S| n / D(S))^(1/r).
struct ExpansionWitness {
    VertexSet set;
    Vertex center = 0;
    std::size_t layer_index = 0;
    double x = 0.0;
    std::uint64_t lhs = 0;                ///< D(B)
    std::uint64_t neighborhood_degree = 0; ///< D(N(B) ∩ S)
    double rhs = 0.0;                      ///< neighborhood_degree / (x+1)
    /// False when the layer picked by the growth-chain case analysis failed
    /// the inequality and a scan over other layers/centers supplied B.
    bool from_growth_chain = true;
};

/// Requires odd girth > 2r+1 (not checked). Throws PreconditionViolation
/// "EmptyWorkingSet" when D(S) = 0.
ExpansionWitness find_poor_expansion_set(const Graph& g, const VertexSet& s, std::size_t r);

struct IndependentSetExtraction {
    VertexSet set;                        ///< A, independent
    std::vector<ExpansionWitness> steps;  ///< one witness per B_i
    double x = 0.0;
    std::uint64_t input_degree_sum = 0;   ///< D(S)
    std::uint64_t degree_sum = 0;         ///< D(A)
    /// D(A) >= D(S)/(8x), up to 1e-9 relative tolerance.
    bool meets_bound = false;
};

/// Unions witnesses B_1, B_2, ... while D(S_i) >= D(S)/2, where
/// S_{i+1} = S_i minus (B_i ∪ N(B_i)). All degree sums are taken in g.
IndependentSetExtraction extract_independent_set(const Graph& g, const VertexSet& s, std::size_t r);

/// 4 (12 r)^r n^2 / k^(r+1)
Rational odd_girth_bound(std::size_t n, std::size_t r, std::size_t k);
/// 100 r^4 n^(3/2), rounded up.
Rational scrub_bound(std::size_t n, std::size_t r);
Rational scrub_bound(const Rational& n, std::size_t r);

/// k rounds of independent-set extraction from S_i = V minus earlier sets,
/// then greedy completion of the leftover. Throws PreconditionViolation
/// "OddGirthTooSmall" when verify is set and odd girth <= 2r+1.
BoundReport partition_odd_girth(const Graph& g, std::size_t r, std::size_t k, bool verify = false);

/// delta_{i+1} <= delta_i (1 - delta_i^(1/r) / 8) at every step (1e-9 slack).
bool trajectory_satisfies_recursion(const std::vector<Rational>& trajectory, std::size_t r);

struct ScrubReport {
    std::vector<Edge> removed_edges;
    /// odd length -> number of edge-disjoint cycles deleted
    std::map<std::size_t, std::size_t> per_length;
    Graph result;
    bool precondition_checked = false;
    Rational bound;   ///< 100 r^4 n^(3/2)
    bool bound_holds = false;
};

/// Deletes every edge of a maximal edge-disjoint family of C_l for each odd
/// l = 3, 5, ..., 2r-1 in turn. Throws PreconditionViolation
/// "ForbiddenCyclePresent" when verify is set and g contains C_{2r+1}.
ScrubReport scrub_short_odd_cycles(const Graph& g, std::size_t r, bool verify = false);

/// Scrub, then partition the scrubbed graph by odd girth.
BoundReport partition_odd_cycle_free(const Graph& g, std::size_t r, std::size_t k, bool verify = false);

} // namespace kdelete

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdelete/graph.hpp"
#include "kdelete/partition.hpp"
#include "kdelete/rational.hpp"

namespace kdelete {

enum class Provenance { Exact, LocalSearch, Coarsened, Driver };

std::string to_string(Provenance p);

/// Filled by the drivers; empty for plain cuts.
struct CutDiagnostics {
    std::string branch;
    std::optional<std::size_t> driver_k;
    bool clamped = false;
    /// m_0: edges inside blocks of the driver's k-partition
    std::optional<std::uint64_t> realized_deletions;
    /// m/2 + m/(4(k-1)), claimed only when m_0 <= m/(2k)
    std::optional<Rational> conditional_bound;
    bool conditional_applies = false;
    bool conditional_holds = false;
    /// surplus / m^(1 - 1/(r+4))
    std::optional<double> surplus_ratio;
    /// sum over v of sqrt(d(v))
    std::optional<double> sqrt_degree_sum;
};

struct CutResult {
    VertexPartition partition;
    std::size_t l = 0;
    std::uint64_t crossing = 0;
    /// crossing / m (0 when m = 0)
    Rational fraction;
    /// crossing - (1 - 1/l) m
    Rational surplus;
    Provenance provenance = Provenance::Exact;
    CutDiagnostics diagnostics;
};

/// Wraps an l-partition as a cut.
CutResult make_cut(const Graph& g, VertexPartition partition, Provenance provenance);

/// Exhaustive over labelings with vertex 0 in block 0. Throws
/// CapabilityError unless n <= 16 (l = 2) or l^(n-1) <= 3^11.
CutResult max_k_cut_exact(const Graph& g, std::size_t l);

/// Single-vertex moves to a strictly better block until none applies,
/// from the greedy completion and from `restarts` uniform labelings.
/// Ties between starts go to the earliest.
CutResult local_search_cut(const Graph& g, std::size_t l, std::size_t restarts, std::uint64_t seed);

/// Max-l-Cut(K_k) / C(k,2) via balanced blocks; 2 <= l <= k.
Rational d_l_complete(std::size_t k, std::size_t l);

/// Groups the k blocks of `fine` into l groups. Tries a deterministic
/// conditional-expectation equitable grouping, `trials` random equitable
/// groupings, and every grouping when at most 1e5 exist. The result has
/// crossing >= d_l(K_k) * fine.crossing.
CutResult coarsen_cut(const Graph& g, const CutResult& fine, std::size_t l, std::size_t trials, std::uint64_t seed);

/// Global l-cut from cuts of G[V_i] (local indices ascending in V_i).
/// Blocks are placed in order; each block's labels are permuted by an
/// optimal assignment against the vertices already placed, so
/// crossing >= (1 - 1/l)(m - sum m_i) + sum crossing_i.
CutResult surplus_compose(const Graph& g, const std::vector<VertexSet>& blocks, const std::vector<CutResult>& cuts);

/// 4 (12 r)^r
BigInt driver_constant(std::size_t r);

/// Smallest even k >= 2 with k^r >= 2 c_r n^2 / m.
std::size_t driver_k(std::size_t n, std::size_t m, std::size_t r);

/// k-partition of a C_{2r+1}-free graph, coarsened to a 2-cut and polished
/// by local moves. Falls back to local search when k > n (flagged).
CutResult maxcut_dense_driver(const Graph& g, std::size_t r, std::size_t restarts = 8, std::uint64_t seed = 0);

/// Dense branch on U = {v : d(v)^(r+4) >= m^2} when e(G[U]) >= m/2,
/// composed with a local-search cut of the rest; local search otherwise.
CutResult maxcut_odd_cycle_free(const Graph& g, std::size_t r, std::size_t restarts = 8, std::uint64_t seed = 0);

} // namespace kdelete

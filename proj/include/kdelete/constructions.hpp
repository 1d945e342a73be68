#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kdelete/graph.hpp"
#include "kdelete/rational.hpp"

namespace kdelete {

Graph empty_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_multipartite(const std::vector<std::size_t>& parts);
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram i+5 -- (i+2)%5+5.
Graph petersen_graph();
/// Rim 0..rim-1 as a cycle, hub = rim.
Graph wheel_graph(std::size_t rim);

/// G(n,p): pairs u < v visited in lexicographic order, each kept when the
/// next uniform01() draw of SplitMix64(seed) is < p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);
/// Sides 0..a-1 and a..a+b-1, same draw order over (u, v) with u < a <= v.
Graph random_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed);

/// Vertex (v, i) of G[t] is v*t + i.
Graph blow_up(const Graph& g, std::size_t t);
/// b's vertices shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Dispatch on a construction spec {"kind": ..., "params": {...}, "seed": ...}.
/// Kinds: empty, cycle, path, complete (n), complete_multipartite (parts),
/// petersen, wheel (rim), random (n, p), random_bipartite (a, b, p), and
/// blow_up (base: nested spec, t). Throws std::invalid_argument.
Graph generate(const nlohmann::json& spec);

struct SpectralProfile {
    std::size_t n = 0;
    std::optional<std::size_t> d;  ///< set only for regular graphs
    double lambda = 0.0;           ///< max(|mu_2|, |mu_min|)
    double mu2 = 0.0;
    double mu_min = 0.0;
    /// Largest ||Mx - theta x|| over the two runs.
    double residual = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Power iteration deflated against the top eigenvector (all-ones for
/// regular graphs, itself estimated otherwise), run on A + dI and dI - A.
/// Tolerance 1e-9 on the residual, at most `iterations` steps per run.
SpectralProfile second_eigenvalue(const Graph& g, std::size_t iterations = 100000, std::uint64_t seed = 0);

struct MixingReport {
    double lambda = 0.0;
    /// min over checked pairs of lambda sqrt(|A||B|) - |e(A,B) - d|A||B|/n|
    double min_slack = 0.0;
    VertexSet worst_a;
    VertexSet worst_b;
    std::size_t pairs_checked = 0;
    bool exhaustive = false;
};

/// Expander mixing check on a regular graph: `samples` random pairs plus
/// singletons, halves and the full set; every pair of subsets when
/// `exhaustive` is set (n <= 10). Throws std::invalid_argument on a
/// non-regular graph.
MixingReport mixing_check(const Graph& g, double lambda, std::size_t samples, std::uint64_t seed,
                          bool exhaustive = false);

struct LowerBoundCertificate {
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t d = 0;
    /// lambda + residual rounded up on the 1e-12 grid
    Rational lambda;
    /// max(0, (d n / k - lambda n) / 2)
    Rational value;
    std::string derivation;
};

/// Lower bound on h(G,k) for a regular graph, sound when profile.lambda +
/// profile.residual bounds the true second eigenvalue.
LowerBoundCertificate spectral_lower_bound(const Graph& g, const SpectralProfile& profile, std::size_t k);

} // namespace kdelete

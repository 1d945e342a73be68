#include "kdelete/cover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kdelete/error.hpp"
#include "kdelete/rng.hpp"

namespace kdelete {

namespace {

std::uint64_t union_edges(const Graph& g, const VertexSet& u) { return edges_within(g, u); }

void require_k(std::size_t k) {
    if (k == 0) throw std::invalid_argument("number of centers must be positive");
}

CoverSelection finish(const Graph& g, std::span<const Vertex> centers, std::size_t k_for_bound) {
    CoverSelection sel = disjointify(g, centers);
    sel.bound = cover_bound(g.n(), k_for_bound);
    return sel;
}

} // namespace

VertexSet CoverSelection::covered() const {
    if (disjoint_sets.empty()) return {};
    VertexSet all(disjoint_sets.front().universe());
    for (const auto& s : disjoint_sets) all |= s;
    return all;
}

Rational cover_bound(std::size_t n, std::size_t k) {
    require_k(k);
    return Rational(BigInt(n) * n) / (e_lower() * k);
}

std::uint64_t covered_edges(const Graph& g, std::span<const Vertex> centers) {
    VertexSet u(g.n());
    for (Vertex c : centers) u |= g.neighbors(c);
    return union_edges(g, u);
}

CoverSelection select_cover_random(const Graph& g, std::size_t k, std::size_t trials, std::uint64_t seed) {
    require_k(k);
    if (g.n() == 0) return finish(g, {}, k);
    SplitMix64 rng(seed);
    std::vector<Vertex> best;
    std::uint64_t best_covered = 0;
    for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1); ++t) {
        std::vector<Vertex> centers(k);
        for (auto& c : centers) c = static_cast<Vertex>(rng.below(g.n()));
        const std::uint64_t covered = covered_edges(g, centers);
        if (best.empty() || covered > best_covered) {
            best = std::move(centers);
            best_covered = covered;
        }
    }
    return finish(g, best, k);
}

CoverSelection select_cover_greedy(const Graph& g, std::size_t k) {
    require_k(k);
    if (g.n() == 0) return finish(g, {}, k);
    std::vector<Vertex> centers;
    VertexSet u(g.n());
    std::uint64_t inside = 0;
    std::uint64_t reach = 0;
    for (std::size_t step = 0; step < k; ++step) {
        Vertex best_v = 0;
        std::uint64_t best_inside = 0;
        std::uint64_t best_reach = 0;
        bool have = false;
        for (Vertex v = 0; v < g.n(); ++v) {
            const VertexSet fresh = g.neighbors(v) - u;
            // e(U ∪ F) = e(U) + e(F, U) + e(F)
            std::uint64_t grown = inside;
            std::uint64_t within_fresh = 0;
            std::uint64_t grown_reach = reach;
            for (Vertex w : fresh) {
                grown += g.neighbors(w).intersection_count(u);
                within_fresh += g.neighbors(w).intersection_count(fresh);
                grown_reach += g.degree(w);
            }
            grown += within_fresh / 2;
            // ties on e(U ∪ F) go to the larger D(U ∪ F)
            if (!have || grown > best_inside || (grown == best_inside && grown_reach > best_reach)) {
                have = true;
                best_v = v;
                best_inside = grown;
                best_reach = grown_reach;
            }
        }
        centers.push_back(best_v);
        u |= g.neighbors(best_v);
        inside = best_inside;
        reach = best_reach;
    }
    return finish(g, centers, k);
}

CoverSelection select_cover_derandomized(const Graph& g, std::size_t k) {
    require_k(k);
    const std::size_t n = g.n();
    if (n == 0) return finish(g, {}, k);
    const double dn = static_cast<double>(n);
    // probability that one uniform center misses vertex a / misses both ends
    std::vector<double> miss(n);
    for (Vertex a = 0; a < n; ++a) miss[a] = 1.0 - static_cast<double>(g.degree(a)) / dn;
    std::vector<double> miss_pair(g.m());
    for (std::size_t i = 0; i < g.m(); ++i) {
        const auto& e = g.edges()[i];
        const auto joint = (g.neighbors(e.u) | g.neighbors(e.v)).count();
        miss_pair[i] = 1.0 - static_cast<double>(joint) / dn;
    }

    auto expected_uncovered = [&](const VertexSet& u, std::size_t remaining) {
        const double rem = static_cast<double>(remaining);
        double total = 0.0;
        for (std::size_t i = 0; i < g.m(); ++i) {
            const auto& e = g.edges()[i];
            const bool a_in = u.contains(e.u), b_in = u.contains(e.v);
            if (a_in && b_in) continue;
            if (remaining == 0) {
                total += 1.0;
            } else if (a_in) {
                total += std::pow(miss[e.v], rem);
            } else if (b_in) {
                total += std::pow(miss[e.u], rem);
            } else {
                total += std::pow(miss[e.u], rem) + std::pow(miss[e.v], rem) - std::pow(miss_pair[i], rem);
            }
        }
        return total;
    };

    std::vector<Vertex> centers;
    VertexSet u(n);
    for (std::size_t step = 0; step < k; ++step) {
        const std::size_t remaining = k - step - 1;
        Vertex best_v = 0;
        double best_value = 0.0;
        for (Vertex v = 0; v < n; ++v) {
            const double value = expected_uncovered(u | g.neighbors(v), remaining);
            if (v == 0 || value < best_value) {
                best_v = v;
                best_value = value;
            }
        }
        centers.push_back(best_v);
        u |= g.neighbors(best_v);
    }
    return finish(g, centers, k);
}

CoverSelection select_cover_certified(const Graph& g, std::size_t k) {
    CoverSelection sel = select_cover_greedy(g, k);
    if (Rational(sel.uncovered_edges) <= sel.bound) return sel;
    CoverSelection alt = select_cover_derandomized(g, k);
    return alt.uncovered_edges < sel.uncovered_edges ? alt : sel;
}

std::uint64_t exact_u(const Graph& g, std::size_t k) {
    require_k(k);
    const double states = std::pow(static_cast<double>(g.n()), static_cast<double>(k));
    if (states > 1e7)
        throw CapabilityError("exact u(G,k) enumeration refused: n^k = " + std::to_string(states) + " > 1e7");
    if (g.n() == 0) return 0;
    std::uint64_t best = 0;
    // unordered tuples with repetition: non-decreasing center sequences
    auto recurse = [&](auto&& self, Vertex from, std::size_t left, const VertexSet& u) -> void {
        if (left == 0) {
            best = std::max(best, union_edges(g, u));
            return;
        }
        for (Vertex v = from; v < g.n(); ++v) self(self, v, left - 1, u | g.neighbors(v));
    };
    recurse(recurse, 0, k, VertexSet(g.n()));
    return best;
}

CoverSelection disjointify(const Graph& g, std::span<const Vertex> centers) {
    CoverSelection sel;
    sel.centers.assign(centers.begin(), centers.end());
    VertexSet seen(g.n());
    for (Vertex c : centers) {
        sel.disjoint_sets.push_back(g.neighbors(c) - seen);
        seen |= g.neighbors(c);
    }
    sel.uncovered_edges = g.m() - union_edges(g, seen);
    if (!centers.empty()) sel.bound = cover_bound(g.n(), centers.size());
    return sel;
}

CoverSelection even_parts(const Graph& g, std::size_t t, CoverStrategy strategy, std::uint64_t seed) {
    const std::size_t n = g.n();
    if (t == 0 || t > n)
        throw std::invalid_argument("even_parts needs 1 <= t <= n, got t=" + std::to_string(t) +
                                    ", n=" + std::to_string(n));
    CoverSelection base;
    if (strategy == CoverStrategy::Random) {
        base = select_cover_random(g, t, 64 * t, seed);
        if (Rational(base.uncovered_edges) > base.bound) base = select_cover_certified(g, t);
    } else {
        base = select_cover_certified(g, t);
    }

    const std::size_t chunk = n / t;
    CoverSelection out;
    out.uncovered_edges = base.uncovered_edges;
    out.bound = base.bound;
    for (std::size_t i = 0; i < base.disjoint_sets.size(); ++i) {
        VertexSet block(n);
        std::size_t filled = 0;
        for (Vertex v : base.disjoint_sets[i]) {
            block.insert(v);
            if (++filled == chunk) {
                out.disjoint_sets.push_back(block);
                out.centers.push_back(base.centers[i]);
                block = VertexSet(n);
                filled = 0;
            }
        }
        if (filled > 0) {
            out.disjoint_sets.push_back(block);
            out.centers.push_back(base.centers[i]);
        }
    }
    if (out.disjoint_sets.size() > 2 * t)
        throw std::logic_error("even_parts produced more than 2t sets");
    // padding sets are empty; their nominal center is the last real one
    const Vertex pad_center = out.centers.empty() ? base.centers.front() : out.centers.back();
    while (out.disjoint_sets.size() < 2 * t) {
        out.disjoint_sets.emplace_back(n);
        out.centers.push_back(pad_center);
    }
    return out;
}

} // namespace kdelete

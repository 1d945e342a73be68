#include "kdelete/clique_wheel.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "kdelete/cover.hpp"
#include "kdelete/error.hpp"
#include "kdelete/oddgirth.hpp"

namespace kdelete {

namespace {

constexpr std::size_t kRandomTrials = 16;

std::string vertex_list(const std::vector<Vertex>& vs) {
    std::string out;
    for (Vertex v : vs) out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

Rational half_bound(std::size_t n, std::size_t k) { return Rational(BigInt(n) * n, BigInt(2 * k)); }

VertexPartition triangle_core(const Graph& g, std::size_t k) {
    if (k >= g.n()) return distinct_partition(g, k);
    CoverSelection sel = select_cover_certified(g, k);
    return greedy_complete(g, sel.disjoint_sets);
}

// T^(r-2) blocks for a K_r-free graph, T even.
VertexPartition cliquet(const Graph& g, std::size_t r, std::size_t T) {
    if (r == 3) return triangle_core(g, T);
    const std::size_t blocks = static_cast<std::size_t>(ipow(BigInt(T), static_cast<unsigned>(r - 2)));
    if (blocks >= g.n()) return distinct_partition(g, blocks);
    CoverSelection parts = even_parts(g, T / 2, CoverStrategy::Greedy, 0);
    std::vector<VertexPartition> inner;
    inner.reserve(parts.disjoint_sets.size());
    for (const auto& u : parts.disjoint_sets) {
        auto [sub, local] = g.induced(u);
        inner.push_back(cliquet(sub, r - 1, T));
    }
    return compose_partition(g, parts.disjoint_sets, inner);
}

Rational inner_wheel_bound(const Rational& size, std::size_t r, std::size_t s) {
    const auto ur = static_cast<unsigned>(r);
    return Rational(4 * ipow(BigInt(12 * r), ur)) * size * size / Rational(ipow(BigInt(s), ur + 1)) +
           scrub_bound(size, r);
}

} // namespace

Rational clique_lemma_constant(std::size_t r) {
    if (r < 3) throw std::invalid_argument("r must be at least 3");
    return Rational(5 * ipow(BigInt(4), static_cast<unsigned>(r - 3)) - 2) / (3 * e_lower());
}

Rational clique_bound(std::size_t n, std::size_t r, std::size_t k) {
    if (r < 3) throw std::invalid_argument("r must be at least 3");
    if (k == 0) throw std::invalid_argument("k must be positive");
    const auto q = static_cast<unsigned>(r - 2);
    const Rational kpow = q == 1 ? Rational(BigInt(k) * k) : root_lower(Rational(ipow(BigInt(k), q + 1)), q);
    return Rational(5 * ipow(BigInt(4), static_cast<unsigned>(r - 3)), 3) * Rational(BigInt(n) * n) / kpow;
}

BoundReport partition_triangle_free(const Graph& g, std::size_t k, bool verify) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (verify) {
        if (auto t = find_clique(g, 3)) throw PreconditionViolation("TriangleFound", "triangle " + vertex_list(*t));
    }
    BoundReport report;
    report.method = "trianglefree";
    report.requested_k = k;
    report.precondition_checked = verify;
    report.partition = triangle_core(g, k);
    report.bound = Rational(BigInt(g.n()) * g.n()) / (e_lower() * BigInt(k) * k);
    report.bound_formula = "n^2/(e*k^2)";
    settle(report);
    return report;
}

BoundReport partition_clique_free(const Graph& g, std::size_t r, std::size_t k, bool verify, std::uint64_t seed) {
    if (r < 3) throw std::invalid_argument("r must be at least 3");
    if (r > 8) throw CapabilityError("clique partitioner supports r <= 8, got r=" + std::to_string(r));
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (r == 3) {
        BoundReport report = partition_triangle_free(g, k, verify);
        report.method = "clique";
        return report;
    }
    if (verify) {
        if (auto c = find_clique(g, r))
            throw PreconditionViolation("CliqueFound", "K_" + std::to_string(r) + " on " + vertex_list(*c));
    }
    BoundReport report;
    report.method = "clique";
    report.requested_k = k;
    report.precondition_checked = verify;
    report.bound = clique_bound(g.n(), r, k);
    report.bound_formula = "(5/3)*4^(r-3)*n^2/k^((r-1)/(r-2))";
    const auto q = static_cast<unsigned>(r - 2);
    if (BigInt(k) <= ipow(BigInt(2 * r), q)) {
        report.partition = random_partition(g, k, kRandomTrials, seed);
        report.fallback = true;
        report.fallback_reason = "k <= (2r)^(r-2); random partition with greedy pass";
        report.auxiliary_bounds.emplace_back("n^2/(2k)", half_bound(g.n(), k));
    } else {
        const std::size_t root = static_cast<std::size_t>(iroot_floor(BigInt(k), q));
        const std::size_t T = 2 * (root / 2);
        report.partition = cliquet(g, r, T);
        const BigInt l = ipow(BigInt(T), q);
        report.auxiliary_bounds.emplace_back(
            "alpha_r*n^2/T^(r-1)",
            clique_lemma_constant(r) * Rational(BigInt(g.n()) * g.n()) / Rational(ipow(BigInt(T), q + 1)));
        report.auxiliary_bounds.emplace_back("l", Rational(l));
    }
    settle(report);
    return report;
}

BoundReport partition_wheel_free(const Graph& g, std::size_t r, std::size_t k, bool verify, std::uint64_t seed) {
    if (r == 0) throw std::invalid_argument("r must be positive");
    if (k == 0) throw std::invalid_argument("k must be positive");
    const std::size_t cycle = 2 * r + 1;
    if (verify) {
        for (Vertex v = 0; v < g.n(); ++v) {
            if (g.degree(v) < cycle) continue;
            auto [sub, local] = g.induced(g.neighbors(v));
            if (auto c = find_cycle_of_length(sub, cycle)) {
                std::vector<Vertex> rim;
                for (Vertex w : *c) rim.push_back(local[w]);
                throw PreconditionViolation("WheelFound", "hub " + std::to_string(v) + ", rim " + vertex_list(rim));
            }
        }
    }
    BoundReport report;
    report.method = "wheel";
    report.requested_k = k;
    report.precondition_checked = verify;
    const BigInt n2 = BigInt(g.n()) * g.n();
    if (k < 2) {
        report.partition = random_partition(g, k, kRandomTrials, seed);
        report.bound = half_bound(g.n(), k);
        report.bound_formula = "n^2/(2k)";
        report.fallback = true;
        report.fallback_reason = "k < 2";
        settle(report);
        return report;
    }
    const auto ur = static_cast<unsigned>(r);
    const auto s = static_cast<std::size_t>(iroot_floor(BigInt(k / 2), ur + 1));
    const auto t = static_cast<std::size_t>(ipow(BigInt(s), ur));
    const std::size_t l = 2 * s * t;
    const Rational part(BigInt(2 * g.n()), BigInt(t));
    report.bound = Rational(2 * n2) / (e_lower() * BigInt(s) * t * t) + Rational(t) * inner_wheel_bound(part, r, s);
    report.bound_formula = "2n^2/(e*s*t^2) + t*[4(12r)^r(2n/t)^2/s^(r+1) + 100r^4(2n/t)^(3/2)]";
    report.auxiliary_bounds.emplace_back(
        "n^2/(2e*s*t^2) + 2t*inner(n/t)",
        Rational(n2) / (2 * e_lower() * BigInt(s) * t * t) +
            Rational(2 * t) * inner_wheel_bound(Rational(BigInt(g.n()), BigInt(t)), r, s));
    report.auxiliary_bounds.emplace_back("l", Rational(l));
    if (l >= g.n()) {
        report.partition = distinct_partition(g, l);
    } else {
        CoverSelection parts = even_parts(g, t, CoverStrategy::Greedy, seed);
        std::vector<VertexPartition> inner;
        inner.reserve(parts.disjoint_sets.size());
        for (const auto& u : parts.disjoint_sets) {
            auto [sub, local] = g.induced(u);
            inner.push_back(partition_odd_cycle_free(sub, r, s).partition);
        }
        report.partition = compose_partition(g, parts.disjoint_sets, inner);
    }
    settle(report);
    return report;
}

} // namespace kdelete

#include "kdelete/maxcut.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kdelete/error.hpp"
#include "kdelete/oddgirth.hpp"
#include "kdelete/rng.hpp"

namespace kdelete {

namespace {

constexpr std::uint64_t kGroupingEnumLimit = 100000;

void require_l(std::size_t l) {
    if (l < 2) throw std::invalid_argument("a cut needs l >= 2 blocks");
}

// Moves single vertices to a block with strictly fewer neighbors until stable.
void improve(const Graph& g, std::vector<Label>& labels, std::size_t l) {
    std::vector<std::uint64_t> to_block(l);
    bool moved = true;
    while (moved) {
        moved = false;
        for (Vertex v = 0; v < g.n(); ++v) {
            std::fill(to_block.begin(), to_block.end(), 0);
            for (Vertex w : g.neighbor_list(v)) ++to_block[labels[w]];
            Label best = labels[v];
            for (Label b = 0; b < l; ++b)
                if (to_block[b] < to_block[best]) best = b;
            if (best != labels[v]) {
                labels[v] = best;
                moved = true;
            }
        }
    }
}

std::vector<Label> copy_labels(const VertexPartition& p) { return {p.labels().begin(), p.labels().end()}; }

// Minimum-cost perfect assignment, rows to columns; returns column per row.
std::vector<std::size_t> hungarian(const std::vector<std::vector<std::int64_t>>& cost) {
    const std::size_t n = cost.size();
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<std::int64_t> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = p[j0];
            std::int64_t delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> assignment(n);
    for (std::size_t j = 1; j <= n; ++j) assignment[p[j] - 1] = j - 1;
    return assignment;
}

using Weights = std::vector<std::vector<std::uint64_t>>;

std::uint64_t grouping_crossing(const Weights& w, const std::vector<Label>& group) {
    std::uint64_t total = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (group[a] != group[b]) total += w[a][b];
    return total;
}

std::vector<std::size_t> balanced_capacities(std::size_t k, std::size_t l) {
    std::vector<std::size_t> cap(l, k / l);
    for (std::size_t g = 0; g < k % l; ++g) ++cap[g];
    return cap;
}

// Walks the uniform equitable grouping, fixing each block to the group that
// keeps the conditional expected crossing highest.
std::vector<Label> conditional_grouping(const Weights& w, std::size_t l) {
    const std::size_t k = w.size();
    std::vector<std::size_t> cap = balanced_capacities(k, l);
    std::vector<Label> group(k, 0);
    std::vector<double> toward(l, 0.0);  // weight from each group to unassigned blocks
    double fixed = 0.0;
    double among_unassigned = 0.0;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) among_unassigned += static_cast<double>(w[a][b]);

    auto expected = [&](const std::vector<double>& tw, const std::vector<std::size_t>& c, double fx, double uu,
                        std::size_t remaining) {
        double e = fx;
        if (remaining == 0) return e;
        const double rem = static_cast<double>(remaining);
        double same = 0.0;
        for (std::size_t g = 0; g < l; ++g) {
            e += tw[g] * (1.0 - static_cast<double>(c[g]) / rem);
            same += static_cast<double>(c[g]) * (static_cast<double>(c[g]) - 1.0);
        }
        if (remaining >= 2) e += uu * (1.0 - same / (rem * (rem - 1.0)));
        return e;
    };

    for (std::size_t x = 0; x < k; ++x) {
        std::vector<double> from_group(l, 0.0);
        for (std::size_t a = 0; a < x; ++a) from_group[group[a]] += static_cast<double>(w[a][x]);
        double ahead = 0.0;
        for (std::size_t b = x + 1; b < k; ++b) ahead += static_cast<double>(w[x][b]);
        const double assigned_total = std::accumulate(from_group.begin(), from_group.end(), 0.0);
        std::size_t best = l;
        double best_value = 0.0;
        for (std::size_t h = 0; h < l; ++h) {
            if (cap[h] == 0) continue;
            std::vector<double> tw = toward;
            for (std::size_t g = 0; g < l; ++g) tw[g] -= from_group[g];
            tw[h] += ahead;
            std::vector<std::size_t> c = cap;
            --c[h];
            const double value =
                expected(tw, c, fixed + assigned_total - from_group[h], among_unassigned - ahead, k - x - 1);
            if (best == l || value > best_value) {
                best = h;
                best_value = value;
            }
        }
        group[x] = static_cast<Label>(best);
        for (std::size_t g = 0; g < l; ++g) toward[g] -= from_group[g];
        toward[best] += ahead;
        fixed += assigned_total - from_group[best];
        among_unassigned -= ahead;
        --cap[best];
    }
    return group;
}

// Number of groupings of k blocks into at most l unlabeled groups, capped.
std::uint64_t grouping_count(std::size_t k, std::size_t l, std::uint64_t cap) {
    // S(i, j) rows, saturating at cap + 1
    std::vector<std::uint64_t> row(l + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        std::vector<std::uint64_t> next(l + 1, 0);
        for (std::size_t j = 1; j <= l; ++j) {
            const long double v = static_cast<long double>(j) * row[j] + row[j - 1];
            next[j] = v > cap ? cap + 1 : static_cast<std::uint64_t>(v);
        }
        row = std::move(next);
    }
    std::uint64_t total = 0;
    for (std::size_t j = 1; j <= l; ++j) total = std::min<std::uint64_t>(cap + 1, total + row[j]);
    return total;
}

} // namespace

std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::Exact: return "exact";
    case Provenance::LocalSearch: return "local_search";
    case Provenance::Coarsened: return "coarsened";
    case Provenance::Driver: return "driver";
    }
    return "unknown";
}

CutResult make_cut(const Graph& g, VertexPartition partition, Provenance provenance) {
    CutResult cut;
    cut.l = partition.k();
    cut.crossing = g.m() - partition.internal_edges();
    cut.partition = std::move(partition);
    cut.fraction = g.m() == 0 ? Rational(0) : Rational(BigInt(cut.crossing), BigInt(g.m()));
    cut.surplus = Rational(cut.crossing) - (Rational(1) - Rational(1, cut.l)) * Rational(g.m());
    cut.provenance = provenance;
    return cut;
}

CutResult max_k_cut_exact(const Graph& g, std::size_t l) {
    require_l(l);
    const std::size_t n = g.n();
    const bool ok = l == 2 ? n <= 16 : (n == 0 || std::pow(static_cast<double>(l), static_cast<double>(n - 1)) <= 177147.0);
    if (!ok)
        throw CapabilityError("exact Max-" + std::to_string(l) + "-Cut refused for n=" + std::to_string(n));
    std::vector<Label> labels(n, 0), best(n, 0);
    std::uint64_t best_internal = g.m() + 1;
    while (true) {
        std::uint64_t internal = 0;
        for (const auto& e : g.edges())
            if (labels[e.u] == labels[e.v]) ++internal;
        if (internal < best_internal) {
            best_internal = internal;
            best = labels;
        }
        std::size_t i = 1;
        while (i < n && labels[i] + 1 == l) labels[i++] = 0;
        if (i >= n) break;
        ++labels[i];
    }
    return make_cut(g, VertexPartition(g, l, std::move(best)), Provenance::Exact);
}

CutResult local_search_cut(const Graph& g, std::size_t l, std::size_t restarts, std::uint64_t seed) {
    require_l(l);
    std::vector<VertexSet> empty(l, VertexSet(g.n()));
    std::vector<Label> best = copy_labels(greedy_complete(g, empty));
    improve(g, best, l);
    VertexPartition best_partition(g, l, best);
    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < restarts; ++t) {
        std::vector<Label> labels(g.n());
        for (auto& x : labels) x = static_cast<Label>(rng.below(l));
        improve(g, labels, l);
        VertexPartition candidate(g, l, std::move(labels));
        if (candidate.internal_edges() < best_partition.internal_edges()) best_partition = std::move(candidate);
    }
    return make_cut(g, std::move(best_partition), Provenance::LocalSearch);
}

Rational d_l_complete(std::size_t k, std::size_t l) {
    if (l < 2 || l > k) throw std::invalid_argument("d_l(K_k) needs 2 <= l <= k");
    const BigInt pairs = BigInt(k) * (k - 1) / 2;
    BigInt inside = 0;
    for (std::size_t size : balanced_capacities(k, l)) inside += BigInt(size) * (size == 0 ? 0 : size - 1) / 2;
    return Rational(pairs - inside, pairs);
}

CutResult coarsen_cut(const Graph& g, const CutResult& fine, std::size_t l, std::size_t trials, std::uint64_t seed) {
    require_l(l);
    const std::size_t k = fine.partition.k();
    if (l > k) throw std::invalid_argument("coarsening needs l <= k");
    const auto labels = fine.partition.labels();
    if (l == k) {
        CutResult same = make_cut(g, VertexPartition(g, l, {labels.begin(), labels.end()}), Provenance::Coarsened);
        return same;
    }
    Weights w(k, std::vector<std::uint64_t>(k, 0));
    for (const auto& e : g.edges()) {
        const Label a = labels[e.u], b = labels[e.v];
        if (a == b) continue;
        ++w[std::min(a, b)][std::max(a, b)];
    }

    std::vector<Label> best = conditional_grouping(w, l);
    std::uint64_t best_value = grouping_crossing(w, best);
    auto consider = [&](const std::vector<Label>& grp) {
        const std::uint64_t v = grouping_crossing(w, grp);
        if (v > best_value) {
            best_value = v;
            best = grp;
        }
    };

    SplitMix64 rng(seed);
    std::vector<std::size_t> order(k);
    std::vector<Label> grp(k);
    for (std::size_t t = 0; t < trials; ++t) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t i = k; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
        for (std::size_t pos = 0; pos < k; ++pos) grp[order[pos]] = static_cast<Label>(pos % l);
        consider(grp);
    }

    if (grouping_count(k, l, kGroupingEnumLimit) <= kGroupingEnumLimit) {
        // restricted growth strings with at most l distinct values
        std::vector<Label> rgs(k, 0);
        auto recurse = [&](auto&& self, std::size_t i, Label used) -> void {
            if (i == k) {
                consider(rgs);
                return;
            }
            const Label top = std::min<Label>(used + 1, static_cast<Label>(l));
            for (Label c = 0; c < top; ++c) {
                rgs[i] = c;
                self(self, i + 1, std::max<Label>(used, c + 1));
            }
        };
        recurse(recurse, 0, 0);
    }

    std::vector<Label> coarse(g.n());
    for (Vertex v = 0; v < g.n(); ++v) coarse[v] = best[labels[v]];
    return make_cut(g, VertexPartition(g, l, std::move(coarse)), Provenance::Coarsened);
}

CutResult surplus_compose(const Graph& g, const std::vector<VertexSet>& blocks, const std::vector<CutResult>& cuts) {
    if (blocks.size() != cuts.size()) throw std::invalid_argument("one cut per block required");
    if (blocks.empty()) throw std::invalid_argument("surplus_compose needs at least one block");
    const std::size_t l = cuts.front().l;
    constexpr Label kUnplaced = std::numeric_limits<Label>::max();
    std::vector<Label> global(g.n(), kUnplaced);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (cuts[i].l != l)
            throw std::invalid_argument("block " + std::to_string(i) + " uses l=" + std::to_string(cuts[i].l) +
                                        ", expected " + std::to_string(l));
        const std::vector<Vertex> members = blocks[i].members();
        if (cuts[i].partition.n() != members.size())
            throw std::invalid_argument("cut " + std::to_string(i) + " does not match its block");
        std::vector<std::vector<std::int64_t>> cost(l, std::vector<std::int64_t>(l, 0));
        for (std::size_t local = 0; local < members.size(); ++local) {
            const Vertex v = members[local];
            if (global[v] != kUnplaced) throw std::invalid_argument("blocks overlap at vertex " + std::to_string(v));
            const Label a = cuts[i].partition.label(static_cast<Vertex>(local));
            for (Vertex w : g.neighbor_list(v))
                if (global[w] != kUnplaced) ++cost[a][global[w]];
        }
        const std::vector<std::size_t> perm = hungarian(cost);
        for (std::size_t local = 0; local < members.size(); ++local)
            global[members[local]] = static_cast<Label>(perm[cuts[i].partition.label(static_cast<Vertex>(local))]);
    }
    for (Vertex v = 0; v < g.n(); ++v)
        if (global[v] == kUnplaced) throw std::invalid_argument("blocks do not cover vertex " + std::to_string(v));
    return make_cut(g, VertexPartition(g, l, std::move(global)), Provenance::Driver);
}

BigInt driver_constant(std::size_t r) { return 4 * ipow(BigInt(12 * r), static_cast<unsigned>(r)); }

std::size_t driver_k(std::size_t n, std::size_t m, std::size_t r) {
    if (m == 0) throw std::invalid_argument("driver needs m >= 1");
    if (r == 0) throw std::invalid_argument("r must be positive");
    const auto ur = static_cast<unsigned>(r);
    const BigInt num = 2 * driver_constant(r) * BigInt(n) * n;
    // k^r * m >= num
    BigInt k = iroot_floor(num / m, ur);
    while (ipow(k, ur) * m < num) ++k;
    if (k % 2 != 0) ++k;
    if (k < 2) k = 2;
    const BigInt cap(std::numeric_limits<std::uint32_t>::max());
    return static_cast<std::size_t>(k > cap ? cap : k);
}

CutResult maxcut_dense_driver(const Graph& g, std::size_t r, std::size_t restarts, std::uint64_t seed) {
    const std::size_t k = driver_k(g.n(), g.m(), r);
    if (k > g.n()) {
        CutResult cut = local_search_cut(g, 2, restarts, seed);
        cut.provenance = Provenance::Driver;
        cut.diagnostics.branch = "clamped";
        cut.diagnostics.driver_k = k;
        cut.diagnostics.clamped = true;
        return cut;
    }
    BoundReport rep = partition_odd_cycle_free(g, r, k);
    const CutResult fine = make_cut(g, rep.partition, Provenance::Driver);
    const CutResult coarse = coarsen_cut(g, fine, 2, 32, seed);
    std::vector<Label> labels = copy_labels(coarse.partition);
    improve(g, labels, 2);
    CutResult cut = make_cut(g, VertexPartition(g, 2, std::move(labels)), Provenance::Driver);
    cut.diagnostics.branch = "partition";
    cut.diagnostics.driver_k = k;
    cut.diagnostics.realized_deletions = rep.deleted;
    const Rational m(g.m());
    cut.diagnostics.conditional_bound = m / 2 + m / Rational(4 * (k - 1));
    cut.diagnostics.conditional_applies = BigInt(rep.deleted) * 2 * k <= BigInt(g.m());
    cut.diagnostics.conditional_holds = Rational(cut.crossing) >= *cut.diagnostics.conditional_bound;
    return cut;
}

CutResult maxcut_odd_cycle_free(const Graph& g, std::size_t r, std::size_t restarts, std::uint64_t seed) {
    if (r == 0) throw std::invalid_argument("r must be positive");
    const std::size_t m = g.m();
    double sqrt_sum = 0.0;
    for (Vertex v = 0; v < g.n(); ++v) sqrt_sum += std::sqrt(static_cast<double>(g.degree(v)));
    CutResult cut;
    std::string branch;
    if (m == 0) {
        cut = local_search_cut(g, 2, 0, seed);
        branch = "empty";
    } else {
        const auto exponent = static_cast<unsigned>(r + 4);
        const BigInt m2 = BigInt(m) * m;
        VertexSet high(g.n());
        for (Vertex v = 0; v < g.n(); ++v)
            if (ipow(BigInt(g.degree(v)), exponent) >= m2) high.insert(v);
        if (2 * edges_within(g, high) >= m) {
            const VertexSet low = g.all_vertices() - high;
            const Graph dense_part = g.induced(high).first;
            const Graph sparse_part = g.induced(low).first;
            CutResult dense = maxcut_dense_driver(dense_part, r, restarts, seed);
            CutResult rest = local_search_cut(sparse_part, 2, restarts, seed);
            const CutDiagnostics inner = dense.diagnostics;
            cut = surplus_compose(g, {high, low}, {dense, rest});
            std::vector<Label> labels = copy_labels(cut.partition);
            improve(g, labels, 2);
            cut = make_cut(g, VertexPartition(g, 2, std::move(labels)), Provenance::Driver);
            cut.diagnostics = inner;
            branch = "dense";
        } else {
            cut = local_search_cut(g, 2, restarts, seed);
            branch = "sparse";
        }
    }
    cut.provenance = Provenance::Driver;
    cut.diagnostics.branch = branch;
    cut.diagnostics.sqrt_degree_sum = sqrt_sum;
    if (m > 0)
        cut.diagnostics.surplus_ratio =
            to_double(cut.surplus) / std::pow(static_cast<double>(m), 1.0 - 1.0 / static_cast<double>(r + 4));
    return cut;
}

} // namespace kdelete

#include "kdelete/oddgirth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "kdelete/detail/cycle_search.hpp"
#include "kdelete/error.hpp"

namespace kdelete {

namespace {

constexpr double kRelTol = 1e-9;

struct LayerProbe {
    std::vector<VertexSet> layers;        // index i holds N_i(v) ∩ S, i = 0..r
    std::vector<std::uint64_t> degree;    // D of each
};

LayerProbe probe(const Graph& g, const VertexSet& s, Vertex v, std::size_t r) {
    LayerProbe p;
    p.layers = bfs_layers(g, v, r);
    for (auto& layer : p.layers) {
        layer &= s;
        p.degree.push_back(degree_sum(g, layer));
    }
    return p;
}

std::optional<ExpansionWitness> evaluate(const Graph& g, const VertexSet& s, const VertexSet& b, Vertex center,
                                         std::size_t layer, double x, bool* saw_dependent) {
    if (b.empty()) return std::nullopt;
    if (!is_independent(g, b)) {
        *saw_dependent = true;
        return std::nullopt;
    }
    VertexSet boundary(g.n());
    for (Vertex u : b) boundary |= g.neighbors(u);
    boundary &= s;
    boundary -= b;
    ExpansionWitness w;
    w.set = b;
    w.center = center;
    w.layer_index = layer;
    w.x = x;
    w.lhs = degree_sum(g, b);
    w.neighborhood_degree = degree_sum(g, boundary);
    w.rhs = static_cast<double>(w.neighborhood_degree) / (x + 1.0);
    const double scaled = static_cast<double>(w.lhs) * (x + 1.0);
    if (scaled < static_cast<double>(w.neighborhood_degree) * (1.0 - kRelTol)) return std::nullopt;
    return w;
}

} // namespace

ExpansionWitness find_poor_expansion_set(const Graph& g, const VertexSet& s, std::size_t r) {
    if (r == 0) throw std::invalid_argument("r must be positive");
    const std::uint64_t ds = degree_sum(g, s);
    if (ds == 0) throw PreconditionViolation("EmptyWorkingSet", "D(S) = 0");
    const double x = std::pow(static_cast<double>(s.count()) * static_cast<double>(g.n()) / static_cast<double>(ds),
                              1.0 / static_cast<double>(r));

    // D(N_1(v) ∩ S) for every v
    std::vector<std::uint64_t> reach(g.n(), 0);
    for (Vertex u : s)
        for (Vertex v : g.neighbor_list(u)) reach[v] += g.degree(u);
    const Vertex center = static_cast<Vertex>(std::max_element(reach.begin(), reach.end()) - reach.begin());

    bool saw_dependent = false;
    LayerProbe p = probe(g, s, center, r);
    // First layer where growth by a factor x stops; N_r if it never does.
    std::size_t pick = r;
    for (std::size_t i = 1; i < r; ++i) {
        if (static_cast<double>(p.degree[i + 1]) < x * static_cast<double>(p.degree[i])) {
            pick = i;
            break;
        }
    }
    if (auto w = evaluate(g, s, p.layers[pick], center, pick, x, &saw_dependent)) return *w;

    // The chain argument bounds D(N_0 ∩ S) by |N_1|, which can fail when the
    // center lies in S; scan the remaining layers, then other centers.
    for (std::size_t i = 1; i <= r; ++i) {
        if (i == pick) continue;
        if (auto w = evaluate(g, s, p.layers[i], center, i, x, &saw_dependent)) {
            w->from_growth_chain = false;
            return *w;
        }
    }
    std::vector<Vertex> others(g.n());
    std::iota(others.begin(), others.end(), Vertex{0});
    std::stable_sort(others.begin(), others.end(), [&](Vertex a, Vertex b) { return reach[a] > reach[b]; });
    for (Vertex v : others) {
        if (v == center || reach[v] == 0) continue;
        LayerProbe q = probe(g, s, v, r);
        for (std::size_t i = 1; i <= r; ++i) {
            if (auto w = evaluate(g, s, q.layers[i], v, i, x, &saw_dependent)) {
                w->from_growth_chain = false;
                return *w;
            }
        }
    }
    if (saw_dependent)
        throw PreconditionViolation("OddGirthTooSmall",
                                    "a BFS layer within distance r contains an edge (odd girth <= 2r+1)");
    throw std::logic_error("no expansion witness found");
}

IndependentSetExtraction extract_independent_set(const Graph& g, const VertexSet& s, std::size_t r) {
    IndependentSetExtraction out;
    out.input_degree_sum = degree_sum(g, s);
    if (out.input_degree_sum == 0) throw PreconditionViolation("EmptyWorkingSet", "D(S) = 0");
    out.x = std::pow(static_cast<double>(s.count()) * static_cast<double>(g.n()) /
                         static_cast<double>(out.input_degree_sum),
                     1.0 / static_cast<double>(r));
    out.set = VertexSet(g.n());
    VertexSet working = s;
    std::uint64_t working_degree = out.input_degree_sum;
    while (2 * working_degree >= out.input_degree_sum) {
        ExpansionWitness w = find_poor_expansion_set(g, working, r);
        out.set |= w.set;
        VertexSet removed = w.set;
        for (Vertex u : w.set) removed |= g.neighbors(u);
        working -= removed;
        working_degree = degree_sum(g, working);
        out.steps.push_back(std::move(w));
    }
    out.degree_sum = degree_sum(g, out.set);
    out.meets_bound = 8.0 * out.x * static_cast<double>(out.degree_sum) >=
                      static_cast<double>(out.input_degree_sum) * (1.0 - kRelTol);
    return out;
}

Rational odd_girth_bound(std::size_t n, std::size_t r, std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    const auto ur = static_cast<unsigned>(r);
    return Rational(4 * ipow(BigInt(12 * r), ur) * BigInt(n) * n, ipow(BigInt(k), ur + 1));
}

Rational scrub_bound(const Rational& n, std::size_t r) {
    return Rational(100 * ipow(BigInt(r), 4)) * root_upper(rpow(n, 3), 2);
}

Rational scrub_bound(std::size_t n, std::size_t r) { return scrub_bound(Rational(n), r); }

BoundReport partition_odd_girth(const Graph& g, std::size_t r, std::size_t k, bool verify) {
    if (r == 0) throw std::invalid_argument("r must be positive");
    if (k == 0) throw std::invalid_argument("k must be positive");
    BoundReport report;
    report.method = "oddgirth";
    report.requested_k = k;
    report.precondition_checked = verify;
    if (verify) {
        if (auto og = odd_girth(g); og && *og <= 2 * r + 1)
            throw PreconditionViolation("OddGirthTooSmall", "odd girth " + std::to_string(*og) +
                                                                " <= 2r+1 = " + std::to_string(2 * r + 1));
    }
    const BigInt n2 = BigInt(g.n()) * g.n();
    VertexSet remaining = g.all_vertices();
    std::uint64_t remaining_degree = 2 * static_cast<std::uint64_t>(g.m());
    std::vector<VertexSet> seeds;
    for (std::size_t i = 0; i < k; ++i) {
        if (n2 > 0) report.trajectory.emplace_back(BigInt(remaining_degree), n2);
        if (remaining_degree == 0) {
            seeds.emplace_back(g.n());
            continue;
        }
        IndependentSetExtraction a = extract_independent_set(g, remaining, r);
        remaining -= a.set;
        remaining_degree -= a.degree_sum;
        seeds.push_back(std::move(a.set));
    }
    if (n2 > 0) report.trajectory.emplace_back(BigInt(remaining_degree), n2);
    report.leftover_degree_sum = remaining_degree;
    report.partition = greedy_complete(g, seeds);
    report.bound = odd_girth_bound(g.n(), r, k);
    report.bound_formula = "4*(12r)^r*n^2/k^(r+1)";
    report.auxiliary_bounds.emplace_back("D(S_{k+1})/k", Rational(BigInt(remaining_degree), BigInt(k)));
    settle(report);
    return report;
}

bool trajectory_satisfies_recursion(const std::vector<Rational>& trajectory, std::size_t r) {
    for (std::size_t i = 0; i + 1 < trajectory.size(); ++i) {
        const double d = to_double(trajectory[i]);
        const double next = to_double(trajectory[i + 1]);
        const double cap = d * (1.0 - std::pow(d, 1.0 / static_cast<double>(r)) / 8.0);
        if (next > cap + kRelTol * d) return false;
    }
    return true;
}

ScrubReport scrub_short_odd_cycles(const Graph& g, std::size_t r, bool verify) {
    if (r == 0) throw std::invalid_argument("r must be positive");
    ScrubReport report;
    report.precondition_checked = verify;
    if (verify) {
        if (auto c = find_cycle_of_length(g, 2 * r + 1)) {
            std::string listed;
            for (Vertex v : *c) listed += (listed.empty() ? "" : " ") + std::to_string(v);
            throw PreconditionViolation("ForbiddenCyclePresent",
                                        "C_" + std::to_string(2 * r + 1) + " on vertices " + listed);
        }
    }
    std::vector<VertexSet> adjacency(g.adjacency().begin(), g.adjacency().end());
    for (std::size_t len = 3; len + 2 <= 2 * r + 1; len += 2) {
        std::size_t copies = 0;
        Vertex anchor = 0;
        while (auto cycle = detail::find_cycle(adjacency, len, &anchor)) {
            for (std::size_t i = 0; i < cycle->size(); ++i) {
                Vertex a = (*cycle)[i], b = (*cycle)[(i + 1) % cycle->size()];
                adjacency[a].erase(b);
                adjacency[b].erase(a);
                report.removed_edges.push_back({std::min(a, b), std::max(a, b)});
            }
            ++copies;
        }
        report.per_length[len] = copies;
    }
    report.result = g.without_edges(report.removed_edges);
    report.bound = scrub_bound(g.n(), r);
    report.bound_holds = Rational(report.removed_edges.size()) <= report.bound;
    return report;
}

BoundReport partition_odd_cycle_free(const Graph& g, std::size_t r, std::size_t k, bool verify) {
    ScrubReport scrub = scrub_short_odd_cycles(g, r, verify);
    BoundReport inner = partition_odd_girth(scrub.result, r, k, false);
    BoundReport report = inner;
    report.method = "oddcycle";
    report.precondition_checked = verify;
    report.partition =
        VertexPartition(g, inner.partition.k(),
                        std::vector<Label>(inner.partition.labels().begin(), inner.partition.labels().end()));
    report.scrub_removed = scrub.removed_edges.size();
    report.accounted_deletions = report.scrub_removed + inner.deleted;
    report.bound = odd_girth_bound(g.n(), r, k) + scrub_bound(g.n(), r);
    report.bound_formula = "4*(12r)^r*n^2/k^(r+1) + 100*r^4*n^(3/2)";
    report.auxiliary_bounds.emplace_back("100*r^4*n^(3/2)", scrub.bound);
    settle(report);
    return report;
}

} // namespace kdelete

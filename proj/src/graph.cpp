#include "kdelete/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "kdelete/detail/cycle_search.hpp"
#include "kdelete/error.hpp"

namespace kdelete {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::string pair_text(std::uint64_t u, std::uint64_t v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

} // namespace

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list) : n_(n) {
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (auto [a, b] : edge_list) edges.push_back({a, b});
    build(std::move(edges));
}

Graph::Graph(std::size_t n, std::span<const Edge> edge_list) : n_(n) {
    build({edge_list.begin(), edge_list.end()});
}

void Graph::build(std::vector<Edge> edges) {
    for (auto& e : edges) {
        if (e.u >= n_ || e.v >= n_)
            throw std::invalid_argument("edge " + pair_text(e.u, e.v) + " has an endpoint outside 0.." +
                                        std::to_string(n_ == 0 ? 0 : n_ - 1));
        if (e.u == e.v) throw std::invalid_argument("self-loop " + pair_text(e.u, e.v));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adjacency_.assign(n_, VertexSet(n_));
    neighbor_list_.assign(n_, {});
    for (const auto& e : edges_) {
        adjacency_[e.u].insert(e.v);
        adjacency_[e.v].insert(e.u);
    }
    for (std::size_t v = 0; v < n_; ++v) neighbor_list_[v] = adjacency_[v].members();
}

std::optional<std::size_t> Graph::regular_degree() const {
    if (n_ == 0) return 0;
    const std::size_t d = degree(0);
    for (Vertex v = 1; v < n_; ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

std::pair<Graph, std::vector<Vertex>> Graph::induced(const VertexSet& subset) const {
    std::vector<Vertex> to_global = subset.members();
    std::vector<Vertex> to_local(n_, std::numeric_limits<Vertex>::max());
    for (std::size_t i = 0; i < to_global.size(); ++i) to_local[to_global[i]] = static_cast<Vertex>(i);
    std::vector<Edge> local;
    for (Vertex a : to_global)
        for (Vertex b : neighbor_list_[a])
            if (b > a && subset.contains(b)) local.push_back({to_local[a], to_local[b]});
    return {Graph(to_global.size(), std::span<const Edge>(local)), std::move(to_global)};
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
    std::vector<Edge> gone(removed.begin(), removed.end());
    for (auto& e : gone)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(gone.begin(), gone.end());
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    std::set_difference(edges_.begin(), edges_.end(), gone.begin(), gone.end(), std::back_inserter(kept));
    return Graph(n_, std::span<const Edge>(kept));
}

std::vector<VertexSet> bfs_layers(const Graph& g, Vertex v, std::size_t depth) {
    if (v >= g.n()) throw std::out_of_range("bfs root outside graph");
    std::vector<VertexSet> layers;
    layers.reserve(depth + 1);
    VertexSet seen(g.n());
    VertexSet frontier(g.n(), {v});
    seen.insert(v);
    layers.push_back(frontier);
    for (std::size_t i = 1; i <= depth; ++i) {
        VertexSet next(g.n());
        for (Vertex u : frontier) next |= g.neighbors(u);
        next -= seen;
        seen |= next;
        layers.push_back(next);
        frontier = std::move(next);
    }
    return layers;
}

std::uint64_t degree_sum(const Graph& g, const VertexSet& s) {
    std::uint64_t total = 0;
    for (Vertex v : s) total += g.degree(v);
    return total;
}

std::uint64_t edges_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
    std::uint64_t total = 0;
    for (Vertex v : s) total += g.neighbors(v).intersection_count(t);
    return total;
}

std::uint64_t edges_within(const Graph& g, const VertexSet& s) { return edges_between(g, s, s) / 2; }

bool is_independent(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

std::optional<std::size_t> odd_girth(const Graph& g) {
    // A same-level edge at BFS depth d closes an odd walk of length 2d+1;
    // rooting at the vertex opposite an edge of a shortest odd cycle
    // attains the minimum.
    std::size_t best = kUnreached;
    std::vector<std::size_t> dist(g.n());
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < g.n(); ++root) {
        std::fill(dist.begin(), dist.end(), kUnreached);
        dist[root] = 0;
        queue.assign(1, root);
        while (!queue.empty()) {
            Vertex a = queue.front();
            queue.pop_front();
            if (2 * dist[a] + 1 >= best) break;
            for (Vertex b : g.neighbor_list(a)) {
                if (dist[b] == kUnreached) {
                    dist[b] = dist[a] + 1;
                    queue.push_back(b);
                } else if (dist[b] == dist[a]) {
                    best = std::min(best, 2 * dist[a] + 1);
                }
            }
        }
    }
    if (best == kUnreached) return std::nullopt;
    return best;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            Vertex a = queue.front();
            queue.pop_front();
            for (Vertex b : g.neighbor_list(a)) {
                if (color[b] < 0) {
                    color[b] = 1 - color[a];
                    queue.push_back(b);
                } else if (color[b] == color[a]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

namespace {

bool extend_clique(const Graph& g, const VertexSet& candidates, std::size_t need, std::vector<Vertex>& clique) {
    if (need == 0) return true;
    if (candidates.count() < need) return false;
    for (Vertex v : candidates) {
        clique.push_back(v);
        if (need == 1) return true;
        VertexSet next = candidates & g.neighbors(v);
        // only larger vertices, so each clique is visited once
        for (std::size_t u = next.next(0); u < next.universe() && u <= v; u = next.next(u + 1))
            next.erase(static_cast<Vertex>(u));
        if (extend_clique(g, next, need - 1, clique)) return true;
        clique.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t r) {
    if (r > 12) throw CapabilityError("clique search limited to r <= 12, got r=" + std::to_string(r));
    if (r == 0) return std::vector<Vertex>{};
    VertexSet candidates(g.n());
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) + 1 >= r) candidates.insert(v);
    std::vector<Vertex> clique;
    if (extend_clique(g, candidates, r, clique)) return clique;
    return std::nullopt;
}

bool contains_clique(const Graph& g, std::size_t r) { return find_clique(g, r).has_value(); }

std::optional<std::vector<Vertex>> find_cycle_of_length(const Graph& g, std::size_t length) {
    Vertex anchor = 0;
    return detail::find_cycle(g.adjacency(), length, &anchor);
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            return true;
        }
        return false;
    };
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": " + what);
    };

    if (!next_line()) throw std::invalid_argument("edge list is empty: expected header \"n m\"");
    std::int64_t n = -1, m = -1;
    {
        std::istringstream hs(line);
        std::string rest;
        if (!(hs >> n >> m) || n < 0 || m < 0 || (hs >> rest)) fail("expected header \"n m\"");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        if (!next_line()) fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        std::istringstream es(line);
        std::int64_t u = -1, v = -1;
        std::string rest;
        if (!(es >> u >> v) || (es >> rest)) fail("expected \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n) fail("edge " + pair_text(u, v) + " out of range");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (next_line()) fail("unexpected content after " + std::to_string(m) + " edges");
    return Graph(static_cast<std::size_t>(n), std::span<const Edge>(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

namespace detail {

namespace {

struct CycleDfs {
    std::span<const VertexSet> adjacency;
    std::size_t length = 0;
    Vertex anchor = 0;
    // shortest walk length from the anchor by parity, within vertices >= anchor
    std::vector<std::size_t> dist[2];
    std::vector<Vertex> path;
    VertexSet used;

    void parity_distances() {
        const std::size_t n = adjacency.size();
        for (auto& d : dist) d.assign(n, kUnreached);
        std::deque<std::pair<Vertex, int>> queue;
        dist[0][anchor] = 0;
        queue.emplace_back(anchor, 0);
        while (!queue.empty()) {
            auto [a, p] = queue.front();
            queue.pop_front();
            const std::size_t da = dist[p][a];
            if (da >= length) continue;
            const VertexSet& nb = adjacency[a];
            for (std::size_t b = nb.next(anchor); b < n; b = nb.next(b + 1)) {
                auto& slot = dist[1 - p][b];
                if (slot == kUnreached) {
                    slot = da + 1;
                    queue.emplace_back(static_cast<Vertex>(b), 1 - p);
                }
            }
        }
    }

    bool feasible(Vertex x, std::size_t remaining) const {
        return dist[remaining & 1][x] <= remaining;
    }

    bool extend(Vertex x) {
        const std::size_t steps = path.size() - 1;
        if (path.size() == length) return adjacency[x].contains(anchor);
        const std::size_t remaining_after = length - steps - 1;
        const VertexSet& nb = adjacency[x];
        for (std::size_t y = nb.next(anchor + 1); y < adjacency.size(); y = nb.next(y + 1)) {
            auto yv = static_cast<Vertex>(y);
            if (used.contains(yv) || !feasible(yv, remaining_after)) continue;
            path.push_back(yv);
            used.insert(yv);
            if (extend(yv)) return true;
            used.erase(yv);
            path.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<Vertex>> find_cycle(std::span<const VertexSet> adjacency, std::size_t length,
                                              Vertex* anchor) {
    if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
    if (length > kMaxCycleSearchLength)
        throw CapabilityError("cycle search limited to length <= " + std::to_string(kMaxCycleSearchLength) +
                              ", got " + std::to_string(length));
    const std::size_t n = adjacency.size();
    if (length > n) return std::nullopt;
    CycleDfs dfs;
    dfs.adjacency = adjacency;
    dfs.length = length;
    dfs.used = VertexSet(n);
    for (Vertex s = *anchor; s + length <= n; ++s) {
        if (adjacency[s].next(s + 1) >= n) continue;
        dfs.anchor = s;
        dfs.parity_distances();
        // the anchor must lie on a closed walk of the right length and parity
        if (dfs.dist[length & 1][s] > length) continue;
        dfs.path.assign(1, s);
        dfs.used.insert(s);
        bool found = dfs.extend(s);
        for (Vertex v : dfs.path) dfs.used.erase(v);
        if (found) {
            *anchor = s;
            return dfs.path;
        }
    }
    *anchor = static_cast<Vertex>(n);
    return std::nullopt;
}

} // namespace detail

} // namespace kdelete

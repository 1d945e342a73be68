#include "kdelete/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "kdelete/error.hpp"
#include "kdelete/partition.hpp"

namespace kdelete {

OracleBudget OracleBudget::from_env() {
    OracleBudget budget;
    if (const char* raw = std::getenv("KDELETE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(raw, &end, 10);
        if (end != raw && *end == '\0' && v > 0) budget.max_states = v;
    }
    return budget;
}

namespace {

class BranchAndBound {
public:
    BranchAndBound(const Graph& g, std::size_t k, OracleBudget budget)
        : g_(g), k_(k), budget_(budget), toward_(g.n(), std::vector<std::uint64_t>(k, 0)) {}

    std::uint64_t solve() {
        std::vector<VertexSet> empty(k_, VertexSet(g_.n()));
        best_ = greedy_complete(g_, empty).internal_edges();
        search(0, 0, 0);
        return best_;
    }

private:
    std::uint64_t lower_bound(Vertex next) const {
        std::uint64_t extra = 0;
        for (Vertex v = next; v < g_.n(); ++v)
            extra += *std::min_element(toward_[v].begin(), toward_[v].end());
        return extra;
    }

    void search(Vertex v, std::size_t used, std::uint64_t internal) {
        if (++states_ > budget_.max_states)
            throw BudgetExceeded("exact h search exceeded " + std::to_string(budget_.max_states) + " states");
        if (internal + lower_bound(v) >= best_) return;
        if (v == g_.n()) {
            best_ = internal;
            return;
        }
        const std::size_t open = std::min(used + 1, k_);
        for (std::size_t b = 0; b < open; ++b) {
            const std::uint64_t cost = toward_[v][b];
            if (internal + cost >= best_) continue;
            for (Vertex w : g_.neighbor_list(v))
                if (w > v) ++toward_[w][b];
            search(v + 1, std::max(used, b + 1), internal + cost);
            for (Vertex w : g_.neighbor_list(v))
                if (w > v) --toward_[w][b];
        }
    }

    const Graph& g_;
    std::size_t k_;
    OracleBudget budget_;
    std::vector<std::vector<std::uint64_t>> toward_;
    std::uint64_t best_ = 0;
    std::uint64_t states_ = 0;
};

} // namespace

std::uint64_t exact_h(const Graph& g, std::size_t k, OracleBudget budget) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (k >= g.n() || g.m() == 0) return 0;
    return BranchAndBound(g, k, budget).solve();
}

void enumerate_graphs(std::size_t n, const std::function<void(const Graph&)>& visit) {
    if (n > 7) throw CapabilityError("graph enumeration limited to n <= 7, got n=" + std::to_string(n));
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<Edge> chosen;
    chosen.reserve(pairs.size());
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        chosen.clear();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) chosen.push_back(pairs[i]);
        visit(Graph(n, chosen));
    }
}

} // namespace kdelete

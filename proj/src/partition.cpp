#include "kdelete/partition.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "kdelete/rng.hpp"

namespace kdelete {

namespace {

constexpr Label kUnlabeled = std::numeric_limits<Label>::max();

std::uint64_t count_internal(const Graph& g, std::span<const Label> labels) {
    std::uint64_t internal = 0;
    for (const auto& e : g.edges())
        if (labels[e.u] == labels[e.v]) ++internal;
    return internal;
}

} // namespace

VertexPartition::VertexPartition(const Graph& g, std::size_t k, std::vector<Label> labels)
    : k_(k), labels_(std::move(labels)) {
    if (labels_.size() != g.n())
        throw std::invalid_argument("partition has " + std::to_string(labels_.size()) + " labels for " +
                                    std::to_string(g.n()) + " vertices");
    for (Label l : labels_)
        if (l >= k_) throw std::invalid_argument("label " + std::to_string(l) + " >= k=" + std::to_string(k_));
    internal_ = count_internal(g, labels_);
}

std::vector<VertexSet> VertexPartition::blocks() const {
    std::vector<VertexSet> out(k_, VertexSet(labels_.size()));
    for (Vertex v = 0; v < labels_.size(); ++v) out[labels_[v]].insert(v);
    return out;
}

std::uint64_t VertexPartition::recount(const Graph& g) const { return count_internal(g, labels_); }

VertexPartition greedy_complete(const Graph& g, std::span<const VertexSet> seeds) {
    if (seeds.empty()) throw std::invalid_argument("greedy completion needs at least one seed set");
    const std::size_t r = seeds.size();
    std::vector<Label> labels(g.n(), kUnlabeled);
    for (std::size_t i = 0; i < r; ++i) {
        for (Vertex v : seeds[i]) {
            if (v >= g.n()) throw std::invalid_argument("seed vertex outside graph");
            if (labels[v] != kUnlabeled)
                throw std::invalid_argument("seed sets " + std::to_string(labels[v]) + " and " + std::to_string(i) +
                                            " overlap at vertex " + std::to_string(v));
            labels[v] = static_cast<Label>(i);
        }
    }
    std::vector<std::uint64_t> to_block(r);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (labels[v] != kUnlabeled) continue;
        std::fill(to_block.begin(), to_block.end(), 0);
        for (Vertex w : g.neighbor_list(v))
            if (labels[w] != kUnlabeled) ++to_block[labels[w]];
        Label best = 0;
        for (Label b = 1; b < r; ++b)
            if (to_block[b] < to_block[best]) best = b;
        labels[v] = best;
    }
    return VertexPartition(g, r, std::move(labels));
}

VertexPartition compose_partition(const Graph& g, std::span<const VertexSet> outer,
                                  std::span<const VertexPartition> inner) {
    if (outer.size() != inner.size()) throw std::invalid_argument("one inner partition per outer set required");
    if (outer.empty()) throw std::invalid_argument("compose_partition needs at least one outer set");
    const std::size_t s = inner.front().k();
    std::vector<VertexSet> seeds;
    seeds.reserve(s * outer.size());
    for (std::size_t i = 0; i < outer.size(); ++i) {
        if (inner[i].k() != s)
            throw std::invalid_argument("inner partition " + std::to_string(i) + " has " +
                                        std::to_string(inner[i].k()) + " blocks, expected " + std::to_string(s));
        const std::vector<Vertex> members = outer[i].members();
        if (inner[i].n() != members.size())
            throw std::invalid_argument("inner partition " + std::to_string(i) + " does not cover its outer set");
        for (std::size_t j = 0; j < s; ++j) seeds.emplace_back(g.n());
        for (std::size_t local = 0; local < members.size(); ++local)
            seeds[i * s + inner[i].label(static_cast<Vertex>(local))].insert(members[local]);
    }
    return greedy_complete(g, seeds);
}

VertexPartition random_partition(const Graph& g, std::size_t k, std::size_t trials, std::uint64_t seed) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    std::vector<VertexSet> empty(k, VertexSet(g.n()));
    VertexPartition best = greedy_complete(g, empty);
    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Label> labels(g.n());
        for (auto& l : labels) l = static_cast<Label>(rng.below(k));
        VertexPartition candidate(g, k, std::move(labels));
        if (candidate.internal_edges() < best.internal_edges()) best = std::move(candidate);
    }
    return best;
}

VertexPartition distinct_partition(const Graph& g, std::size_t k) {
    if (k < g.n()) throw std::invalid_argument("distinct labels need k >= n");
    std::vector<Label> labels(g.n());
    for (Vertex v = 0; v < g.n(); ++v) labels[v] = v;
    return VertexPartition(g, k, std::move(labels));
}

} // namespace kdelete

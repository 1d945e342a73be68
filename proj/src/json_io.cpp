#include "kdelete/json_io.hpp"

#include <stdexcept>

namespace kdelete {

using nlohmann::json;

json rational_json(const Rational& x) { return {{"exact", to_fraction_string(x)}, {"decimal", to_double(x)}}; }

json vertex_set_json(const VertexSet& s) { return s.members(); }

json to_json(const VertexPartition& p) {
    return {{"k", p.k()},
            {"labels", std::vector<Label>(p.labels().begin(), p.labels().end())},
            {"internal_edges", p.internal_edges()}};
}

json to_json(const BoundReport& r) {
    json j{{"method", r.method},
           {"requested_k", r.requested_k},
           {"partition", to_json(r.partition)},
           {"deleted", r.deleted},
           {"accounted_deletions", r.accounted_deletions},
           {"bound", rational_json(r.bound)},
           {"bound_formula", r.bound_formula},
           {"guarantee_holds", r.guarantee_holds},
           {"precondition_checked", r.precondition_checked},
           {"fallback", r.fallback}};
    if (r.fallback) j["fallback_reason"] = r.fallback_reason;
    json aux = json::object();
    for (const auto& [name, value] : r.auxiliary_bounds) aux[name] = rational_json(value);
    j["auxiliary_bounds"] = aux;
    if (r.leftover_degree_sum) j["leftover_degree_sum"] = *r.leftover_degree_sum;
    if (!r.trajectory.empty()) {
        json t = json::array();
        for (const auto& d : r.trajectory) t.push_back(to_fraction_string(d));
        j["trajectory"] = t;
    }
    if (r.method == "oddcycle") j["scrub_removed"] = r.scrub_removed;
    return j;
}

json to_json(const CoverSelection& c) {
    json sets = json::array();
    for (const auto& s : c.disjoint_sets) sets.push_back(vertex_set_json(s));
    return {{"centers", c.centers},
            {"disjoint_sets", sets},
            {"uncovered_edges", c.uncovered_edges},
            {"bound", rational_json(c.bound)},
            {"within_bound", Rational(c.uncovered_edges) <= c.bound}};
}

json to_json(const ScrubReport& s) {
    json removed = json::array();
    for (const auto& e : s.removed_edges) removed.push_back({e.u, e.v});
    json per = json::object();
    for (const auto& [len, count] : s.per_length) per[std::to_string(len)] = count;
    return {{"removed_edges", removed},
            {"removed_count", s.removed_edges.size()},
            {"per_length", per},
            {"result_m", s.result.m()},
            {"bound", rational_json(s.bound)},
            {"bound_holds", s.bound_holds},
            {"precondition_checked", s.precondition_checked}};
}

json to_json(const CutResult& c) {
    json j{{"l", c.l},
           {"partition", to_json(c.partition)},
           {"crossing", c.crossing},
           {"fraction", rational_json(c.fraction)},
           {"surplus", rational_json(c.surplus)},
           {"provenance", to_string(c.provenance)}};
    const auto& d = c.diagnostics;
    if (!d.branch.empty()) {
        json diag{{"branch", d.branch}, {"clamped", d.clamped}};
        if (d.driver_k) diag["driver_k"] = *d.driver_k;
        if (d.realized_deletions) diag["realized_deletions"] = *d.realized_deletions;
        if (d.conditional_bound) {
            diag["conditional_bound"] = rational_json(*d.conditional_bound);
            diag["conditional_applies"] = d.conditional_applies;
            diag["conditional_holds"] = d.conditional_holds;
        }
        if (d.surplus_ratio) diag["surplus_ratio"] = *d.surplus_ratio;
        if (d.sqrt_degree_sum) diag["sqrt_degree_sum"] = *d.sqrt_degree_sum;
        j["diagnostics"] = diag;
    }
    return j;
}

json to_json(const SpectralProfile& p) {
    json j{{"n", p.n},
           {"lambda", p.lambda},
           {"mu2", p.mu2},
           {"mu_min", p.mu_min},
           {"residual", p.residual},
           {"iterations", p.iterations},
           {"converged", p.converged},
           {"regular", p.d.has_value()}};
    if (p.d) j["d"] = *p.d;
    return j;
}

json to_json(const MixingReport& m) {
    return {{"lambda", m.lambda},
            {"min_slack", m.min_slack},
            {"worst_a", vertex_set_json(m.worst_a)},
            {"worst_b", vertex_set_json(m.worst_b)},
            {"pairs_checked", m.pairs_checked},
            {"exhaustive", m.exhaustive}};
}

json to_json(const LowerBoundCertificate& c) {
    return {{"k", c.k},       {"n", c.n},
            {"d", c.d},       {"lambda", rational_json(c.lambda)},
            {"value", rational_json(c.value)}, {"derivation", c.derivation}};
}

VertexPartition partition_from_json(const Graph& g, const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("labels"))
        throw std::invalid_argument("partition JSON needs 'k' and 'labels'");
    VertexPartition p(g, j.at("k").get<std::size_t>(), j.at("labels").get<std::vector<Label>>());
    if (j.contains("internal_edges") && j.at("internal_edges").get<std::uint64_t>() != p.internal_edges())
        throw std::invalid_argument("partition JSON internal_edges does not match the graph");
    return p;
}

} // namespace kdelete

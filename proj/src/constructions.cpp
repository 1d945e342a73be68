#include "kdelete/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kdelete/rng.hpp"

namespace kdelete {

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0,1]");
}

std::size_t count_param(const nlohmann::json& params, const char* key) {
    if (!params.contains(key)) throw std::invalid_argument(std::string("missing parameter '") + key + "'");
    const auto& v = params.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw std::invalid_argument(std::string("parameter '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

double prob_param(const nlohmann::json& params) {
    if (!params.contains("p") || !params.at("p").is_number())
        throw std::invalid_argument("missing numeric parameter 'p'");
    return params.at("p").get<double>();
}

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void project_out(Vec& x, const std::vector<Vec>& basis) {
    for (const auto& b : basis) {
        const double c = dot(x, b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * b[i];
    }
}

bool normalize(Vec& x) {
    const double norm = std::sqrt(dot(x, x));
    if (norm == 0.0) return false;
    for (double& v : x) v /= norm;
    return true;
}

struct PowerRun {
    double theta = 0.0;
    double residual = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    Vec vector;
};

// Top eigenpair of shift*I + sign*A restricted to the complement of `deflate`.
PowerRun power_iterate(const Graph& g, double shift, double sign, const std::vector<Vec>& deflate,
                       std::size_t max_iterations, SplitMix64& rng) {
    const std::size_t n = g.n();
    PowerRun run;
    Vec x(n);
    for (double& v : x) v = rng.uniform01() - 0.5;
    project_out(x, deflate);
    if (!normalize(x)) {
        run.converged = true;
        return run;
    }
    Vec y(n);
    const double tol = 1e-9 * std::max(1.0, shift);
    for (run.iterations = 1; run.iterations <= max_iterations; ++run.iterations) {
        for (Vertex v = 0; v < n; ++v) {
            double acc = 0.0;
            for (Vertex w : g.neighbor_list(v)) acc += x[w];
            y[v] = shift * x[v] + sign * acc;
        }
        project_out(y, deflate);
        run.theta = dot(x, y);
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) res += (y[i] - run.theta * x[i]) * (y[i] - run.theta * x[i]);
        run.residual = std::sqrt(res);
        if (run.residual < tol) {
            run.converged = true;
            break;
        }
        x = y;
        if (!normalize(x)) {
            run.theta = 0.0;
            run.residual = 0.0;
            run.converged = true;
            break;
        }
    }
    run.iterations = std::min(run.iterations, max_iterations);
    run.vector = std::move(x);
    return run;
}

} // namespace

Graph empty_graph(std::size_t n) { return Graph(n, Pairs{}); }

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    Pairs e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, e);
}

Graph path_graph(std::size_t n) {
    Pairs e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph complete_graph(std::size_t n) {
    Pairs e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph complete_multipartite(const std::vector<std::size_t>& parts) {
    std::vector<std::size_t> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], i);
    Pairs e;
    for (Vertex u = 0; u < part_of.size(); ++u)
        for (Vertex v = u + 1; v < part_of.size(); ++v)
            if (part_of[u] != part_of[v]) e.emplace_back(u, v);
    return Graph(part_of.size(), e);
}

Graph petersen_graph() {
    Pairs e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, e);
}

Graph wheel_graph(std::size_t rim) {
    if (rim < 3) throw std::invalid_argument("a wheel needs a rim of at least 3 vertices");
    Pairs e;
    const auto hub = static_cast<Vertex>(rim);
    for (Vertex i = 0; i < rim; ++i) {
        e.emplace_back(i, static_cast<Vertex>((i + 1) % rim));
        e.emplace_back(i, hub);
    }
    return Graph(rim + 1, e);
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    check_probability(p);
    SplitMix64 rng(seed);
    Pairs e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph random_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed) {
    check_probability(p);
    SplitMix64 rng(seed);
    Pairs e;
    for (Vertex u = 0; u < a; ++u)
        for (auto v = static_cast<Vertex>(a); v < a + b; ++v)
            if (rng.uniform01() < p) e.emplace_back(u, v);
    return Graph(a + b, e);
}

Graph blow_up(const Graph& g, std::size_t t) {
    if (t == 0) throw std::invalid_argument("blow-up factor must be positive");
    Pairs e;
    e.reserve(g.m() * t * t);
    for (const auto& edge : g.edges())
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j)
                e.emplace_back(static_cast<Vertex>(edge.u * t + i), static_cast<Vertex>(edge.v * t + j));
    return Graph(g.n() * t, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e(a.edges().begin(), a.edges().end());
    const auto shift = static_cast<Vertex>(a.n());
    for (const auto& edge : b.edges()) e.push_back({edge.u + shift, edge.v + shift});
    return Graph(a.n() + b.n(), e);
}

Graph generate(const nlohmann::json& spec) {
    if (!spec.is_object() || !spec.contains("kind") || !spec.at("kind").is_string())
        throw std::invalid_argument("construction spec needs a string 'kind'");
    const std::string kind = spec.at("kind").get<std::string>();
    const nlohmann::json params = spec.value("params", nlohmann::json::object());
    const std::uint64_t seed = spec.value("seed", std::uint64_t{0});
    if (kind == "empty") return empty_graph(count_param(params, "n"));
    if (kind == "cycle") return cycle_graph(count_param(params, "n"));
    if (kind == "path") return path_graph(count_param(params, "n"));
    if (kind == "complete") return complete_graph(count_param(params, "n"));
    if (kind == "petersen") return petersen_graph();
    if (kind == "wheel") return wheel_graph(count_param(params, "rim"));
    if (kind == "complete_multipartite") {
        if (!params.contains("parts") || !params.at("parts").is_array())
            throw std::invalid_argument("complete_multipartite needs an array 'parts'");
        return complete_multipartite(params.at("parts").get<std::vector<std::size_t>>());
    }
    if (kind == "random") return random_graph(count_param(params, "n"), prob_param(params), seed);
    if (kind == "random_bipartite")
        return random_bipartite(count_param(params, "a"), count_param(params, "b"), prob_param(params), seed);
    if (kind == "blow_up") {
        if (!params.contains("base")) throw std::invalid_argument("blow_up needs a nested 'base' spec");
        return blow_up(generate(params.at("base")), count_param(params, "t"));
    }
    throw std::invalid_argument("unknown graph kind '" + kind + "'");
}

SpectralProfile second_eigenvalue(const Graph& g, std::size_t iterations, std::uint64_t seed) {
    SpectralProfile profile;
    profile.n = g.n();
    profile.d = g.regular_degree();
    const std::size_t n = g.n();
    if (n <= 1) {
        profile.converged = true;
        return profile;
    }
    SplitMix64 rng(seed);
    std::vector<Vec> deflate;
    double shift = 0.0;
    for (Vertex v = 0; v < n; ++v) shift = std::max(shift, static_cast<double>(g.degree(v)));
    if (profile.d) {
        deflate.emplace_back(n, 1.0 / std::sqrt(static_cast<double>(n)));
    } else {
        PowerRun top = power_iterate(g, shift, 1.0, {}, iterations, rng);
        profile.residual = top.residual;
        profile.iterations = top.iterations;
        deflate.push_back(std::move(top.vector));
    }
    PowerRun upper = power_iterate(g, shift, 1.0, deflate, iterations, rng);
    PowerRun lower = power_iterate(g, shift, -1.0, deflate, iterations, rng);
    profile.mu2 = upper.theta - shift;
    profile.mu_min = shift - lower.theta;
    profile.lambda = std::max(std::fabs(profile.mu2), std::fabs(profile.mu_min));
    profile.residual = std::max({profile.residual, upper.residual, lower.residual});
    profile.iterations = std::max({profile.iterations, upper.iterations, lower.iterations});
    profile.converged = upper.converged && lower.converged;
    return profile;
}

MixingReport mixing_check(const Graph& g, double lambda, std::size_t samples, std::uint64_t seed, bool exhaustive) {
    const auto d = g.regular_degree();
    if (!d) throw std::invalid_argument("mixing check needs a regular graph");
    const std::size_t n = g.n();
    if (exhaustive && n > 10) throw std::invalid_argument("exhaustive mixing check limited to n <= 10");
    MixingReport report;
    report.lambda = lambda;
    report.exhaustive = exhaustive;
    report.min_slack = INFINITY;
    auto check = [&](const VertexSet& a, const VertexSet& b) {
        const double sa = static_cast<double>(a.count()), sb = static_cast<double>(b.count());
        const double dev = std::fabs(static_cast<double>(edges_between(g, a, b)) -
                                     static_cast<double>(*d) * sa * sb / static_cast<double>(n));
        const double slack = lambda * std::sqrt(sa * sb) - dev;
        ++report.pairs_checked;
        if (slack < report.min_slack) {
            report.min_slack = slack;
            report.worst_a = a;
            report.worst_b = b;
        }
    };
    const VertexSet all = g.all_vertices();
    if (n == 0) {
        report.min_slack = 0.0;
        return report;
    }
    check(all, all);
    VertexSet half(n);
    for (Vertex v = 0; v < n / 2; ++v) half.insert(v);
    check(half, all - half);
    check(half, half);
    check(all - half, all - half);
    for (Vertex v = 0; v < n; ++v) {
        const VertexSet single(n, {v});
        check(single, all);
        check(single, g.neighbors(v));
    }
    SplitMix64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        VertexSet a(n), b(n);
        for (Vertex v = 0; v < n; ++v) {
            if (rng.next() & 1) a.insert(v);
            if (rng.next() & 1) b.insert(v);
        }
        check(a, b);
    }
    if (exhaustive) {
        const std::uint64_t subsets = std::uint64_t{1} << n;
        std::vector<VertexSet> all_sets;
        all_sets.reserve(subsets);
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            VertexSet s(n);
            for (Vertex v = 0; v < n; ++v)
                if (mask >> v & 1) s.insert(v);
            all_sets.push_back(std::move(s));
        }
        for (const auto& a : all_sets)
            for (const auto& b : all_sets) check(a, b);
    }
    return report;
}

LowerBoundCertificate spectral_lower_bound(const Graph& g, const SpectralProfile& profile, std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    const auto d = g.regular_degree();
    if (!d) throw std::invalid_argument("spectral lower bound needs a regular graph");
    LowerBoundCertificate cert;
    cert.k = k;
    cert.n = g.n();
    cert.d = *d;
    cert.lambda = round_up_12(profile.lambda + profile.residual);
    const Rational n(g.n());
    const Rational raw = (Rational(*d) * n / Rational(k) - cert.lambda * n) / 2;
    cert.value = raw > 0 ? raw : Rational(0);
    cert.derivation = "sum e(V_i) >= (1/2) sum (d|V_i|^2/n - lambda|V_i|) >= (d n/k - lambda n)/2 with d=" +
                      std::to_string(*d) + ", n=" + std::to_string(g.n()) + ", k=" + std::to_string(k) +
                      ", lambda<=" + to_fraction_string(cert.lambda);
    return cert;
}

} // namespace kdelete

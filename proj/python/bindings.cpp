#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kdelete/clique_wheel.hpp"
#include "kdelete/constructions.hpp"
#include "kdelete/cover.hpp"
#include "kdelete/error.hpp"
#include "kdelete/json_io.hpp"
#include "kdelete/maxcut.hpp"
#include "kdelete/oddgirth.hpp"
#include "kdelete/oracle.hpp"

namespace py = pybind11;
using namespace kdelete;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string partition_json(const Graph& g, const std::string& method, std::size_t k, std::size_t r, bool verify,
                           std::uint64_t seed) {
    BoundReport rep;
    if (method == "trianglefree") rep = partition_triangle_free(g, k, verify);
    else if (method == "clique") rep = partition_clique_free(g, r, k, verify, seed);
    else if (method == "wheel") rep = partition_wheel_free(g, r, k, verify, seed);
    else if (method == "oddgirth") rep = partition_odd_girth(g, r, k, verify);
    else if (method == "oddcycle") rep = partition_odd_cycle_free(g, r, k, verify);
    else throw std::invalid_argument("unknown method '" + method + "'");
    return to_json(rep).dump();
}

std::string maxcut_json(const Graph& g, const std::string& method, std::size_t l, std::size_t r,
                        std::size_t restarts, std::uint64_t seed) {
    CutResult cut;
    if (method == "exact") cut = max_k_cut_exact(g, l);
    else if (method == "local") cut = local_search_cut(g, l, restarts, seed);
    else if (method == "driver") cut = maxcut_dense_driver(g, r, restarts, seed);
    else if (method == "split") cut = maxcut_odd_cycle_free(g, r, restarts, seed);
    else throw std::invalid_argument("unknown method '" + method + "'");
    return to_json(cut).dump();
}

std::string cover_json(const Graph& g, std::size_t k, const std::string& method, std::size_t trials,
                       std::uint64_t seed) {
    CoverSelection sel;
    if (method == "greedy") sel = select_cover_greedy(g, k);
    else if (method == "random") sel = select_cover_random(g, k, trials == 0 ? 64 * k : trials, seed);
    else if (method == "certified") sel = select_cover_certified(g, k);
    else if (method == "even") sel = even_parts(g, k, CoverStrategy::Greedy, seed);
    else throw std::invalid_argument("unknown method '" + method + "'");
    return to_json(sel).dump();
}

std::string spectral_json(const Graph& g, std::size_t k, std::uint64_t seed) {
    const SpectralProfile p = second_eigenvalue(g, 100000, seed);
    nlohmann::json j{{"profile", to_json(p)}};
    if (p.d) j["certificate"] = to_json(spectral_lower_bound(g, p, k));
    return j.dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Edge-deletion k-partitioning core";

    py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);
    py::register_exception<PreconditionViolation>(m, "PreconditionViolation", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
                 return Graph(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<Vertex, Vertex>> out;
                 for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbors(v).members(); })
        .def("has_edge", &Graph::has_edge)
        .def("to_edge_list",
             [](const Graph& g) {
                 std::ostringstream out;
                 write_edge_list(out, g);
                 return out.str();
             })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + ">";
        });

    m.def("parse_edge_list", [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
    });
    m.def("generate_json", [](const std::string& spec) { return generate(nlohmann::json::parse(spec)); });
    m.def("blow_up", &blow_up, py::arg("g"), py::arg("t"));
    m.def("odd_girth", &odd_girth);
    m.def("contains_clique", &contains_clique, py::arg("g"), py::arg("r"));

    m.def("partition_json", &partition_json, py::arg("g"), py::arg("method"), py::arg("k"), py::arg("r") = 2,
          py::arg("verify") = false, py::arg("seed") = 0);
    m.def("maxcut_json", &maxcut_json, py::arg("g"), py::arg("method") = "local", py::arg("l") = 2,
          py::arg("r") = 2, py::arg("restarts") = 8, py::arg("seed") = 0);
    m.def("cover_json", &cover_json, py::arg("g"), py::arg("k"), py::arg("method") = "greedy",
          py::arg("trials") = 0, py::arg("seed") = 0);
    m.def("scrub_json", [](const Graph& g, std::size_t r, bool verify) {
        return to_json(scrub_short_odd_cycles(g, r, verify)).dump();
    }, py::arg("g"), py::arg("r"), py::arg("verify") = false);
    m.def("spectral_json", &spectral_json, py::arg("g"), py::arg("k") = 2, py::arg("seed") = 0);
    m.def("exact_h", [](const Graph& g, std::size_t k, std::uint64_t max_states) {
        return exact_h(g, k, OracleBudget{max_states});
    }, py::arg("g"), py::arg("k"), py::arg("max_states") = 10'000'000);
}

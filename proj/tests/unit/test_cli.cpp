#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "kdelete/constructions.hpp"

using namespace kdelete;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::cli_main(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string edge_list(const Graph& g) {
    std::ostringstream s;
    write_edge_list(s, g);
    return s.str();
}

} // namespace

TEST_CASE("gen writes an edge list") {
    const Outcome o = run({"gen", "--kind", "cycle", "--n", "5"});
    CHECK(o.code == 0);
    CHECK(o.out == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    const Outcome spec = run({"gen", "--spec", R"({"kind":"petersen"})"});
    CHECK(spec.out == edge_list(petersen_graph()));
    CHECK(run({"gen", "--kind", "random", "--n", "12", "--p", "0.3", "--seed", "5"}).out ==
          edge_list(random_graph(12, 0.3, 5)));
}

TEST_CASE("partition on Petersen") {
    const Outcome o = run({"partition", "--method", "trianglefree", "--k", "2"}, edge_list(petersen_graph()));
    REQUIRE(o.code == 0);
    const json j = json::parse(o.out);
    CHECK(j.at("command") == "partition");
    CHECK(j.at("result").at("deleted").get<int>() <= 9);
    CHECK(j.at("result").at("bound").at("decimal").get<double>() == doctest::Approx(100.0 / (4 * 2.718281828459)));
    CHECK(j.at("input_digest").get<std::string>().rfind("fnv1a64:", 0) == 0);
    CHECK_FALSE(j.contains("wall_seconds"));
}

TEST_CASE("output is byte-stable") {
    const std::string el = edge_list(blow_up(cycle_graph(7), 3));
    const std::vector<std::string> args{"partition", "--method", "oddcycle", "--r", "2", "--k", "3", "--seed", "9"};
    CHECK(run(args, el).out == run(args, el).out);
    const std::vector<std::string> cut{"maxcut", "--method", "local", "--seed", "3"};
    CHECK(run(cut, el).out == run(cut, el).out);
}

TEST_CASE("oracle prints integers") {
    CHECK(run({"oracle", "h", "--k", "2"}, edge_list(petersen_graph())).out == "3\n");
    CHECK(run({"oracle", "maxcut", "--k", "2"}, edge_list(petersen_graph())).out == "12\n");
    CHECK(run({"oracle", "u", "--k", "2"}, edge_list(cycle_graph(5))).out == "3\n");
}

TEST_CASE("other subcommands emit JSON") {
    const std::string c5 = edge_list(cycle_graph(5));
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"maxcut", "--method", "exact", "--l", "2"},
             {"cover", "--k", "2"},
             {"scrub", "--r", "2"},
             {"spectral", "--k", "2"},
         }) {
        const Outcome o = run(args, c5);
        CHECK_MESSAGE(o.code == 0, args[0] << ": " << o.err);
        CHECK(json::accept(o.out));
    }
    const json cut = json::parse(run({"maxcut", "--method", "exact", "--l", "2"}, c5).out);
    CHECK(cut.at("result").at("crossing") == 4);
}

TEST_CASE("timing flag adds wall time") {
    const Outcome o = run({"--timing", "cover", "--k", "1"}, edge_list(cycle_graph(5)));
    REQUIRE(o.code == 0);
    CHECK(json::parse(o.out).contains("wall_seconds"));
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"partition"}, "3 0\n").code == 2);
    CHECK(run({"partition", "--k", "2"}, "3 1\n0 7\n").code == 1);
    CHECK(run({"partition", "--k", "2", "--verify-preconditions"}, edge_list(complete_graph(3))).code == 1);
    CHECK(run({"gen", "--spec", "{not json"}).code == 2);
    CHECK(run({"oracle", "maxcut", "--k", "2"}, edge_list(empty_graph(20))).code == 3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify subset and bench") {
    const Outcome v = run({"verify", "--tier", "tiny", "--only", "1,6"});
    CHECK(v.code == 0);
    const json j = json::parse(v.out);
    CHECK(j.at("result").at("checks").size() == 2);
    const Outcome b = run({"bench", "--n", "35", "--k", "2", "--method", "trianglefree"});
    CHECK(b.code == 0);
    CHECK(b.out.rfind("n,k,r,method", 0) == 0);
}

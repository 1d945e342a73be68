#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kdelete/graph.hpp"

namespace kdelete::checks {

enum class Tier { Tiny, Small, Desk };

Tier parse_tier(const std::string& name);
std::string to_string(Tier tier);

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool passed = false;
    /// Informational checks report numbers but never fail a run.
    bool informational = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the invariant suite (numbered 1..12) at the given size tier.
/// `only` restricts to the listed numbers when non-empty.
std::vector<CheckResult> run_checks(Tier tier, std::uint64_t seed, const std::vector<int>& only = {});

struct BenchPoint {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t r = 0;
    std::string method;
};

struct BenchRow {
    BenchPoint point;
    std::size_t actual_n = 0;
    std::uint64_t deleted = 0;
    double bound = 0.0;
    /// deleted / bound
    double ratio = 0.0;
    double seconds = 0.0;
    std::string error;
};

/// Bench graph for a method at roughly n vertices: a blow-up of C_5
/// (trianglefree, clique, wheel) or of C_(2r+3) (oddgirth, oddcycle).
Graph bench_graph(const BenchPoint& p);

/// Runs the grid on up to `jobs` threads; rows come back in grid order.
std::vector<BenchRow> run_bench(const std::vector<BenchPoint>& grid, std::size_t jobs, std::uint64_t seed);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);

} // namespace kdelete::checks

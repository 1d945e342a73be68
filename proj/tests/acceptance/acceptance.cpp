// One PASS/FAIL line per acceptance criterion, run at desk scale.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "verify.hpp"

namespace {

// Runtime budget per criterion in seconds; 0 means no limit.
constexpr double kLimit[13] = {0, 120, 60, 120, 300, 120, 120, 180, 0, 180, 0, 120, 0};

} // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    int failed = 0;
    for (const auto& c : kdelete::checks::run_checks(kdelete::checks::Tier::Desk, seed)) {
        const double limit = kLimit[c.criterion];
        const bool in_time = limit == 0 || c.seconds <= limit;
        const bool ok = c.passed && in_time;
        if (!ok) ++failed;
        std::printf("%s %d %s [%.2fs%s] %s\n", ok ? "PASS" : "FAIL", c.criterion, c.name.c_str(), c.seconds,
                    in_time ? "" : " over limit", c.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}

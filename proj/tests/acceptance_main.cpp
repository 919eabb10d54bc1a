// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure. The same report is reachable through `wittlab suite`.

#include <chrono>
#include <cstdio>

#include "wittlab/acceptance.hpp"

using namespace wittlab;

int main(int argc, char** argv) {
    SuiteConfig cfg;
    cfg.echo_progress = argc > 1 && std::string(argv[1]) == "-v";

    using Clock = std::chrono::steady_clock;
    auto t0 = Clock::now();
    json rep = suite_report(cfg);
    double total = std::chrono::duration<double>(Clock::now() - t0).count();

    bool all = true;
    for (const auto& c : rep["criteria"]) {
        bool pass = c["status"] == "pass";
        all = all && pass;
        std::printf("criterion %2d %-28s %s\n", c["id"].get<int>(),
                    c["name"].get<std::string>().c_str(), pass ? "PASS" : "FAIL");
    }
    std::printf("acceptance: %s (%.1fs)\n", all ? "ALL PASS" : "FAILURES", total);
    return all ? 0 : 1;
}

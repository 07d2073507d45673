// Standalone property runner: one line per suite, nonzero exit on failure.
//   property_suite [--seed N] [--max-v N]

#include "../oracles/suites.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>

using namespace gorenstein;

int main(int argc, char** argv) {
    CLI::App app{"Property suites"};
    std::uint64_t seed = 20240611;
    std::int64_t max_v = 24;
    app.add_option("--seed", seed, "Seed for the randomized suites");
    app.add_option("--max-v", max_v, "Largest group order for the exhaustive suites")->check(CLI::Range(2, 200));
    CLI11_PARSE(app, argc, argv);

    std::cout << "seed: " << seed << std::endl;
    bool ok = true;
    auto report = [&](const suites::SuiteResult& r, double secs) {
        std::cout << (r.ok ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, " << secs << "s)";
        if (!r.ok) std::cout << ": " << r.detail;
        std::cout << std::endl;
        ok = ok && r.ok;
    };
    auto timed = [&](auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = fn();
        report(r, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    };

    timed([] { return suites::shift_sum(12); });
    timed([&] { return suites::cyclic_walk(seed, 1000); });
    timed([&] { return suites::coordinate_multiplicities(max_v, 2); });
    timed([&] { return suites::coset_blocks(max_v, 1); });
    return ok ? 0 : 1;
}

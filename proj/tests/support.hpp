#pragma once

#include <cstdint>

namespace gorenstein::testing {

/// Seed for randomized tests; set with --seed=N, printed at startup.
std::uint64_t seed();

}  // namespace gorenstein::testing

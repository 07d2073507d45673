#pragma once

// Exhaustive and seeded property sweeps shared by the standalone property
// runner and the acceptance binary.

#include <cstdint>
#include <string>

namespace gorenstein::suites {

struct SuiteResult {
    std::string name;
    bool ok = true;
    std::size_t cases = 0;
    std::string detail;  ///< first failure, if any
};

/// shift_sum_delta(d,n,s) = (s mod n)/n for all d,n <= max_dn, checked
/// against the integer oracle as well.
SuiteResult shift_sum(std::int64_t max_dn = 12);

/// Distinct integer cyclic sequences with steps <= +1 form a consecutive block.
SuiteResult cyclic_walk(std::uint64_t seed, std::size_t instances = 1000);

/// Each coordinate of every classified group takes each value j/d_i exactly
/// |G|/d_i times.
SuiteResult coordinate_multiplicities(std::int64_t max_v = 24, std::int64_t max_k = 2);

/// Every tower stage G_{i-1} < G_i has the coset block structure of an
/// extension of type (M_i, k).
SuiteResult coset_blocks(std::int64_t max_v = 24, std::int64_t k = 1);

/// For every built pair (G, L(G)), the admissible elements are exactly the
/// 2^|L| subset sums, each with a unique representing subset.
SuiteResult subset_sums(std::int64_t max_v = 24, std::int64_t k = 1);

}  // namespace gorenstein::suites

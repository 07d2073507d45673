#pragma once

// Strict divisor chains 1 = M_0 < M_1 < ... < M_s = v and the class count
// N(v) = sum_s c_s(D_v) s!.

#include "gorenstein/rational.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace gorenstein {

struct DivisorChain {
    std::vector<std::int64_t> terms;

    std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }

    friend bool operator==(const DivisorChain&, const DivisorChain&) = default;
    friend auto operator<=>(const DivisorChain&, const DivisorChain&) = default;
};

struct ChainCensus {
    std::int64_t v = 0;
    std::map<std::size_t, BigInt> counts;  ///< s -> c_s(D_v)
};

/// Divisors of v in increasing order. Throws std::invalid_argument for v < 1.
std::vector<std::int64_t> divisors(std::int64_t v);

/// Prime factorization as (p, exponent) pairs, increasing p.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t v);

/// All strict divisor chains from 1 to v in lexicographic order of terms.
std::vector<DivisorChain> strict_chains(std::int64_t v);

/// c_s(D_v) by dynamic programming over the divisors (no enumeration).
ChainCensus chain_census(std::int64_t v);

BigInt factorial(unsigned s);
BigInt binomial(unsigned n, unsigned r);
BigInt stirling2(unsigned n, unsigned k);

/// sum_s c_s(D_v) s!; independent of k.
BigInt count_classes(std::int64_t v);

/// sum_{s=1}^{l} C(l-1, s-1) s!
BigInt prime_power_count(unsigned exponent);

/// sum_{s=1}^{l} (s!)^2 S(l, s)
BigInt squarefree_count(unsigned prime_factors);

}  // namespace gorenstein

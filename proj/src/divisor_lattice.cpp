#include "gorenstein/divisor_lattice.hpp"

#include <stdexcept>
#include <string>

namespace gorenstein {

namespace {

void require_v(std::int64_t v) {
    if (v < 2) throw std::invalid_argument("v must be at least 2, got " + std::to_string(v));
}

void chains_from(std::int64_t v, const std::vector<std::int64_t>& divs, std::vector<std::int64_t>& prefix,
                 std::vector<DivisorChain>& out) {
    const std::int64_t last = prefix.back();
    if (last == v) {
        out.push_back({prefix});
        return;
    }
    for (std::int64_t d : divs) {
        if (d > last && d % last == 0) {
            prefix.push_back(d);
            chains_from(v, divs, prefix, out);
            prefix.pop_back();
        }
    }
}

}  // namespace

std::vector<std::int64_t> divisors(std::int64_t v) {
    if (v < 1) throw std::invalid_argument("divisors: v must be positive");
    std::vector<std::int64_t> small;
    std::vector<std::int64_t> large;
    for (std::int64_t d = 1; d * d <= v; ++d) {
        if (v % d != 0) continue;
        small.push_back(d);
        if (d != v / d) large.push_back(v / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t v) {
    if (v < 1) throw std::invalid_argument("factorize: v must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= v; ++p) {
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

std::vector<DivisorChain> strict_chains(std::int64_t v) {
    require_v(v);
    const auto divs = divisors(v);
    std::vector<DivisorChain> out;
    std::vector<std::int64_t> prefix{1};
    chains_from(v, divs, prefix, out);
    return out;
}

ChainCensus chain_census(std::int64_t v) {
    require_v(v);
    const auto divs = divisors(v);
    // ways[i][s] = number of strict chains 1 = M_0 < ... < M_s = divs[i]
    std::vector<std::vector<BigInt>> ways(divs.size());
    ways[0] = {BigInt(1)};
    for (std::size_t i = 1; i < divs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (divs[i] % divs[j] != 0) continue;
            auto& target = ways[i];
            if (target.size() < ways[j].size() + 1) target.resize(ways[j].size() + 1);
            for (std::size_t s = 0; s < ways[j].size(); ++s) target[s + 1] += ways[j][s];
        }
    }
    ChainCensus census;
    census.v = v;
    const auto& top = ways.back();
    for (std::size_t s = 1; s < top.size(); ++s) {
        if (top[s] != 0) census.counts[s] = top[s];
    }
    return census;
}

BigInt factorial(unsigned s) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), s);
    return out;
}

BigInt binomial(unsigned n, unsigned r) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, r);
    return out;
}

BigInt stirling2(unsigned n, unsigned k) {
    // S(n,k) = k S(n-1,k) + S(n-1,k-1), row by row.
    std::vector<BigInt> row(k + 1, BigInt(0));
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(i, k); j >= 1; --j) row[j] = BigInt(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

BigInt count_classes(std::int64_t v) {
    BigInt total(0);
    for (const auto& [s, c] : chain_census(v).counts) total += c * factorial(static_cast<unsigned>(s));
    return total;
}

BigInt prime_power_count(unsigned exponent) {
    if (exponent < 1) throw std::invalid_argument("prime_power_count: exponent must be positive");
    BigInt total(0);
    for (unsigned s = 1; s <= exponent; ++s) total += binomial(exponent - 1, s - 1) * factorial(s);
    return total;
}

BigInt squarefree_count(unsigned prime_factors) {
    if (prime_factors < 1) throw std::invalid_argument("squarefree_count: need at least one prime factor");
    BigInt total(0);
    for (unsigned s = 1; s <= prime_factors; ++s) {
        const BigInt f = factorial(s);
        total += f * f * stirling2(prime_factors, s);
    }
    return total;
}

}  // namespace gorenstein

#pragma once

/*
 * Classification of type-(v,k) groups with no zero coordinate.
 *
 * Every strict divisor chain of D_v together with every legal sequence of
 * marker subsets (J_1, ..., J_s) yields one class. Distinct data must give
 * distinct canonical keys; a collision is reported as an error, never
 * merged.
 */

#include "gorenstein/builder.hpp"
#include "gorenstein/divisor_lattice.hpp"
#include "gorenstein/group.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gorenstein {

inline constexpr std::size_t kDefaultMaxGroupOrder = 512;

struct ClassifyOptions {
    std::size_t workers = 1;
    std::size_t max_group_order = kDefaultMaxGroupOrder;
};

struct ClassRecord {
    ClassData data;
    HeightedGroup group;
    CanonicalKey key;
    std::vector<std::int64_t> hstar;
    std::int64_t dimension = 0;
};

struct ClassificationResult {
    std::int64_t v = 0;
    std::int64_t k = 0;
    std::vector<ClassRecord> classes;
    ChainCensus census;
    BigInt total;
};

/// An invariant of the classification failed for the named datum.
class ClassificationError : public std::runtime_error {
public:
    ClassificationError(const std::string& what, ClassData offending)
        : std::runtime_error(what), offending_(std::move(offending)) {}
    const ClassData& offending() const { return offending_; }

private:
    ClassData offending_;
};

/// Legal subset sequences for a chain of length s, as creation-step lists.
/// Sequences are ordered lexicographically by the bitmask of each J_i over
/// the alive symbols sorted by creation step.
std::vector<std::vector<std::vector<int>>> subset_sequences(std::size_t length);

/// counts[r] = number of legal partial sequences (J_1..J_t) with |L_t| = r.
std::vector<std::uint64_t> alive_size_distribution(std::size_t steps);

/// All classification data for (v,k): chains in lexicographic order, then
/// subset sequences as above.
std::vector<ClassData> enumerate_data(std::int64_t v, std::int64_t k);

/// Characteristic vector of {0, k, ..., (v-1)k} of length (v-1)k + 1,
/// zero-padded to `length` if longer.
std::vector<std::int64_t> expected_hstar(std::int64_t v, std::int64_t k, std::size_t length);

/// Builds one class and checks its per-class invariants; throws
/// ClassificationError on a breach.
ClassRecord build_class(const ClassData& data);

/// Streams class records in enumeration order. Building fans out over
/// `options.workers` threads; the key-collision check and the callback run
/// on the calling thread. Throws std::invalid_argument for bad (v,k) and
/// ClassificationError on any invariant breach.
void for_each_class(std::int64_t v, std::int64_t k, const ClassifyOptions& options,
                    const std::function<void(const ClassRecord&)>& sink);

ClassificationResult classify(std::int64_t v, std::int64_t k, const ClassifyOptions& options = {});

struct BijectionReport {
    std::int64_t v = 0;
    std::int64_t k = 0;
    std::size_t checked = 0;
    std::size_t permuted_checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// extract_data(build_from_data(D)) == D for every datum, and likewise for a
/// coordinate-permuted copy of each group when `permuted_copies` is set.
BijectionReport verify_bijection(std::int64_t v, std::int64_t k, bool permuted_copies = true,
                                 std::uint64_t seed = 0x5eed);

}  // namespace gorenstein

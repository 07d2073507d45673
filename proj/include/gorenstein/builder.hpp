#pragma once

/*
 * Recursive construction of height-graded groups from classification data.
 *
 * A build is a sequence of pairs (G, L(G)). The marker set L(G) holds the
 * distinguished elements whose subset sums are exactly the admissible
 * elements of G; each marker remembers the step that created it, which is
 * the identity of the formal symbol it realizes. Step 1 is the cyclic
 * group <(1/m)^[mk]>, and step i adjoins c with n*c = sum of the chosen
 * markers J_i, then replaces J_i by c in the marker set.
 */

#include "gorenstein/group.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gorenstein {

struct Marker {
    int step = 0;
    ModOneVector element;

    friend bool operator==(const Marker&, const Marker&) = default;
};

/// Markers sorted by creation step.
class MarkerSet {
public:
    MarkerSet() = default;
    explicit MarkerSet(std::vector<Marker> markers);

    const std::vector<Marker>& markers() const { return markers_; }
    std::size_t size() const { return markers_.size(); }
    bool empty() const { return markers_.empty(); }
    std::vector<int> steps() const;
    bool contains_step(int step) const;
    const Marker& by_step(int step) const;

    /// Sum of the markers whose steps are listed; throws std::invalid_argument
    /// if a step is not present.
    ModOneVector subset_sum(std::span<const int> steps, std::size_t width) const;

    /// Disjoint supports and u_i = 1/d_i(G) on the support of every marker.
    /// Throws ConsistencyError naming the violated condition.
    void validate(const HeightedGroup& g) const;

    friend bool operator==(const MarkerSet&, const MarkerSet&) = default;

private:
    std::vector<Marker> markers_;
};

struct GroupPair {
    HeightedGroup group;
    MarkerSet markers;
};

/// Formal classification data: k, a strict divisor chain 1 = M_0 < ... < M_s
/// = v, and the subsets J_1, ..., J_s of creation steps (J_1 = {}).
struct ClassData {
    std::int64_t k = 1;
    std::vector<std::int64_t> chain;
    std::vector<std::vector<int>> subsets;

    std::int64_t v() const { return chain.empty() ? 0 : chain.back(); }
    std::size_t length() const { return chain.empty() ? 0 : chain.size() - 1; }
    std::string to_string() const;

    friend bool operator==(const ClassData&, const ClassData&) = default;
    friend auto operator<=>(const ClassData&, const ClassData&) = default;
};

/// Throws std::invalid_argument describing the first violated invariant.
void validate_class_data(const ClassData& data);

GroupPair init_pair(std::int64_t m, std::int64_t k);

/// One recursive step with subset `subset` of creation steps and quotient
/// order n; the new marker gets id `step_index`.
GroupPair step_pair(const GroupPair& pair, std::span<const int> subset, std::int64_t n, int step_index);

/// The unique J with h = sum of J. Throws ConsistencyError if h is not a
/// subset sum of the markers.
std::vector<int> subset_sum_decompose(const MarkerSet& markers, const ModOneVector& h);

/// All intermediate pairs (G_1, L_1), ..., (G_s, L_s).
std::vector<GroupPair> build_pairs_from_data(const ClassData& data);

/// G_s of the construction; of type (v,k) with no zero coordinate.
HeightedGroup build_from_data(const ClassData& data);

}  // namespace gorenstein

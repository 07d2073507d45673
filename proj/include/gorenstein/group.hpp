#pragma once

/*
 * Finite subgroups of [0,1)^N whose elements all have integer height.
 *
 * A HeightedGroup materializes its full element table, sorted by increasing
 * height (ties broken lexicographically), together with the coordinate
 * orders d_i = |image of the i-th coordinate projection|. Instances are
 * immutable once built.
 */

#include "gorenstein/mod_one.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace gorenstein {

inline constexpr std::size_t kDefaultClosureCap = 10'000;

struct TypeProfile {
    std::int64_t v = 2;
    std::int64_t k = 1;
};

class HeightedGroup {
public:
    /// Builds a group from a complete element table. Verifies that the table
    /// contains zero and is closed under adding each generator; throws
    /// InvalidGroup otherwise and NonIntegerHeight for fractional heights.
    static HeightedGroup from_table(std::size_t width, std::vector<ModOneVector> generators,
                                    std::vector<ModOneVector> elements);

    /// Same as from_table but skips the closure check. Only for tables that
    /// are closed by construction (images, cosets of a known subgroup, BFS
    /// closures); zero, duplicates and heights are still checked.
    static HeightedGroup from_closed_table(std::size_t width, std::vector<ModOneVector> generators,
                                           std::vector<ModOneVector> elements);

    std::size_t width() const { return width_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<ModOneVector>& elements() const { return elements_; }
    const std::vector<std::int64_t>& heights() const { return heights_; }
    const std::vector<std::uint64_t>& coord_orders() const { return coord_orders_; }
    const std::vector<ModOneVector>& generators() const { return generators_; }

    const ModOneVector& element(std::size_t i) const { return elements_[i]; }
    std::int64_t height_of(std::size_t i) const { return heights_[i]; }

    std::optional<std::size_t> index_of(const ModOneVector& x) const;
    bool contains(const ModOneVector& x) const { return index_of(x).has_value(); }

    bool has_distinct_heights() const;

private:
    HeightedGroup() = default;

    std::size_t width_ = 0;
    std::vector<ModOneVector> generators_;
    std::vector<ModOneVector> elements_;
    std::vector<std::int64_t> heights_;
    std::vector<std::uint64_t> coord_orders_;
    std::unordered_map<ModOneVector, std::size_t, ModOneVectorHash> index_;
};

/// Closure of the subgroup generated by `generators` inside [0,1)^width.
/// Throws std::invalid_argument for generators of the wrong length,
/// NonIntegerHeight for a fractional height, and std::length_error when the
/// closure exceeds `cap` elements.
HeightedGroup close_generators(std::span<const ModOneVector> generators, std::size_t width,
                               std::size_t cap = kDefaultClosureCap);

/// |G| = v and the heights are exactly 0, k, ..., (v-1)k.
bool is_type(const HeightedGroup& g, const TypeProfile& profile);

/// Coordinates on which every element vanishes.
std::vector<std::size_t> zero_coordinates(const HeightedGroup& g);

/// Restriction of every element (and generator) to `keep`, in that order.
/// The caller guarantees that the dropped coordinates are zero on G or that
/// a projected image is what is wanted; heights are recomputed.
HeightedGroup project(const HeightedGroup& g, std::span<const std::size_t> keep);

/// Deletes the zero coordinates. Heights are unchanged.
HeightedGroup reduce(const HeightedGroup& g);

/// Coordinate i of the result is coordinate perm[i] of the input.
HeightedGroup permute_coordinates(const HeightedGroup& g, std::span<const std::size_t> perm);

/// Rows are the elements in height order, columns the coordinates sorted
/// lexicographically as column vectors.
struct CanonicalKey {
    std::vector<std::vector<Rational>> rows;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
        return std::lexicographical_compare_three_way(a.rows.begin(), a.rows.end(), b.rows.begin(), b.rows.end());
    }
};

/// Throws InvalidGroup if two elements share a height.
CanonicalKey canonical_key(const HeightedGroup& g);

/// Equality of canonical keys, i.e. equality up to a coordinate permutation.
bool equivalent(const HeightedGroup& a, const HeightedGroup& b);

/// h*_i = number of elements of height i, for i = 0..dim_hint. Throws
/// std::invalid_argument if some element is higher than dim_hint.
std::vector<std::int64_t> hstar_vector(const HeightedGroup& g, std::int64_t dim_hint);

/// Every coordinate i takes each value j/d_i exactly |G|/d_i times.
bool coordinate_values_uniform(const HeightedGroup& g);

}  // namespace gorenstein

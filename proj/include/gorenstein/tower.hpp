#pragma once

/*
 * Canonical quotient tower of a type-(v,k) group, realized inside the group
 * as a kernel chain 0 = G_0 < G_1 < ... < G_s = G.
 *
 * Quotients are never materialized. The quotient height of a coset of G_i
 * is its minimum height divided by M_i = |G_i|, so every tower step is a
 * coset computation over the explicit element table: G_i = G_{i-1} + <c_i>
 * where c_i is the element of height M_{i-1}k, which must be the lowest
 * element of its G_{i-1}-coset.
 */

#include "gorenstein/builder.hpp"
#include "gorenstein/group.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gorenstein {

struct TowerStage {
    int index = 0;
    std::vector<std::size_t> members;  ///< indices of G_i in the ambient element table, increasing
    std::int64_t order = 0;            ///< M_i
    std::int64_t quotient_order = 0;   ///< n_i
    ModOneVector lift;                 ///< c_i
    ModOneVector multiple;             ///< h_i = n_i c_i, an element of G_{i-1}
};

/// The only element of height k; checks that it equals (1/m)^[mk] on its
/// support with m its order. Throws InvalidGroup if the element is missing
/// or not unique, ConsistencyError if the shape check fails.
ModOneVector unique_height_k_element(const HeightedGroup& g, std::int64_t k);

/// Cosets of the subgroup given by `members` (indices into g), each listed
/// in increasing height, ordered by their lowest element.
std::vector<std::vector<std::size_t>> coset_decomposition(const HeightedGroup& g,
                                                          std::span<const std::size_t> members);

/// Throws InvalidGroup unless g is of type (|g|,k) with no zero coordinate.
std::vector<TowerStage> quotient_tower(const HeightedGroup& g, std::int64_t k);

/// G_i as a group in the ambient coordinates, generated by c_1..c_i.
HeightedGroup stage_subgroup(const HeightedGroup& g, std::span<const TowerStage> stages, std::size_t i);

/// Inverse of build_from_data up to coordinate permutation.
ClassData extract_data(const HeightedGroup& g, std::int64_t k);

/// The values are pairwise distinct and form {L, L+1, ..., L+m-1}.
bool is_consecutive_block(std::span<const std::int64_t> values);

/// Pairwise distinct with r_{t+1} - r_t <= 1 cyclically.
bool satisfies_cyclic_walk_hypothesis(std::span<const std::int64_t> values);

}  // namespace gorenstein

#pragma once

// One-step cyclic extensions G -> G' = G + <c> of height-graded groups.

#include "gorenstein/group.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gorenstein {

struct ExtensionResult {
    HeightedGroup group;  ///< G' in the enlarged ambient space
    ModOneVector c;       ///< the adjoined generator, n*c = h (zero-padded)
    std::size_t added = 0;  ///< number of new coordinates L
};

/// True iff every coordinate of h is 0 or 1/d_i(G).
bool is_admissible(const HeightedGroup& g, const ModOneVector& h);

/// All admissible elements of G, in the order of G's element table.
std::vector<ModOneVector> admissible_elements(const HeightedGroup& g);

/// Infers k for a group of type (|G|, k), |G| >= 2. Throws InvalidGroup if
/// G is not of any such type.
std::int64_t infer_k(const HeightedGroup& g);

/// Appends L = n|G|k - ht(h) coordinates and adjoins c with c_i = h_i/n on
/// old coordinates and 1/n on new ones. G must be of type (|G|,k) with no
/// zero coordinate, h an admissible element of G and n >= 2; violations
/// throw std::invalid_argument (InvalidGroup for a bad G).
ExtensionResult extend(const HeightedGroup& g, const ModOneVector& h, std::int64_t n);

/// Checks that G = Gsub + <c> where G/Gsub is cyclic of order n generated
/// by c, |Gsub| = M, G is of type (Mn,k), each coset rc + Gsub carries the
/// heights rMk, rMk + k, ..., rMk + (M-1)k, and c is the lowest element of
/// c + Gsub. Never throws.
bool verify_block_structure(const HeightedGroup& g, const HeightedGroup& gsub, const ModOneVector& c,
                            std::int64_t n, std::int64_t m, std::int64_t k);

}  // namespace gorenstein

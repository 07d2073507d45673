#pragma once

/*
 * Dictionary between lattice simplices and finite subgroups of [0,1)^{d+1}.
 *
 * For Delta = conv(v_0, ..., v_d) the group is
 *   Lambda = { x in [0,1)^{d+1} : sum_i x_i (v_i, 1) in Z^{d+1} },
 * its order is the normalized volume and h*_i counts its elements of height
 * i. group_to_simplex realizes the inverse direction through the lattice
 * Z^N + G and the kernel of the coordinate-sum functional on it.
 */

#include "gorenstein/group.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gorenstein {

inline constexpr std::size_t kDefaultEhrhartDimCap = 7;

class SimplexModel {
public:
    /// Translates the vertices so that the first one is the origin. Throws
    /// std::invalid_argument unless there are d+1 vertices in Z^d, d >= 1,
    /// and they are affinely independent.
    static SimplexModel from_vertices(std::vector<std::vector<std::int64_t>> vertices);

    std::size_t dimension() const { return dimension_; }
    const std::vector<std::vector<std::int64_t>>& vertices() const { return vertices_; }

    /// |det(v_1 - v_0, ..., v_d - v_0)|
    BigInt normalized_volume() const;

private:
    SimplexModel() = default;
    std::size_t dimension_ = 0;
    std::vector<std::vector<std::int64_t>> vertices_;
};

/// G must have no zero coordinate and width >= 2. The result's group is G
/// itself, coordinate for coordinate.
SimplexModel group_to_simplex(const HeightedGroup& g);

/// The group Lambda_S, enumerated from a diagonal normal form of the vertex
/// matrix.
HeightedGroup simplex_to_group(const SimplexModel& s);

/// h*_0..h*_d from the heights of Lambda_S.
std::vector<std::int64_t> hstar_of_simplex(const SimplexModel& s);

/// |mS cap Z^d| by direct lattice-point enumeration. Throws std::length_error
/// if the dimension exceeds `dim_cap`, std::invalid_argument for m < 1.
std::uint64_t ehrhart_count(const SimplexModel& s, std::int64_t m, std::size_t dim_cap = kDefaultEhrhartDimCap);

/// sum_i h*_i C(m + d - i, d)
BigInt ehrhart_from_hstar(const std::vector<std::int64_t>& hstar, std::int64_t m);

bool is_lattice_pyramid(const SimplexModel& s);

}  // namespace gorenstein

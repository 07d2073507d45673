#pragma once

// Vectors in [0,1)^N under coordinatewise addition modulo 1.

#include "gorenstein/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gorenstein {

class ModOneVector {
public:
    ModOneVector() = default;
    /// Throws std::invalid_argument if some entry lies outside [0,1).
    explicit ModOneVector(std::vector<Rational> entries);
    ModOneVector(std::initializer_list<Rational> entries);

    static ModOneVector zero(std::size_t width);
    /// Reduces every entry modulo 1 instead of rejecting it.
    static ModOneVector from_reals(std::span<const Rational> values);
    /// Parses fraction strings such as {"1/2", "0", "3/4"}.
    static ModOneVector parse(std::span<const std::string> values);

    std::size_t size() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Rational> entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_zero() const;
    /// Indices with a nonzero entry, increasing.
    std::vector<std::size_t> support() const;

    /// Appends `count` zero coordinates.
    ModOneVector padded(std::size_t count) const;
    /// Keeps the listed coordinates in the listed order.
    ModOneVector select(std::span<const std::size_t> indices) const;

    std::vector<std::string> to_strings() const;
    std::string to_string() const;

    std::size_t hash() const;

    friend bool operator==(const ModOneVector&, const ModOneVector&) = default;
    friend std::strong_ordering operator<=>(const ModOneVector& a, const ModOneVector& b);

private:
    std::vector<Rational> entries_;
};

struct ModOneVectorHash {
    std::size_t operator()(const ModOneVector& v) const { return v.hash(); }
};

/// Entrywise {a_i + b_i}. Throws std::invalid_argument on length mismatch.
ModOneVector add_mod1(const ModOneVector& a, const ModOneVector& b);

/// Entrywise {a_i - b_i}.
ModOneVector sub_mod1(const ModOneVector& a, const ModOneVector& b);

/// t-fold sum of `a`; the zero vector for t = 0.
ModOneVector scale_mod1(const ModOneVector& a, std::uint64_t t);

/// Sum of the entries as an exact rational.
Rational coordinate_sum(const ModOneVector& a);

/// Integer coordinate sum. Throws NonIntegerHeight if the sum is fractional.
std::int64_t height(const ModOneVector& a);

/// Order of `a` in (Q/Z)^N: the lcm of the entry denominators.
std::uint64_t order_of(const ModOneVector& a);

/// Literal evaluation of sum_j {j/d + s/(nd)} - sum_j j/d over j < d.
/// Throws std::out_of_range unless 0 <= s < n*d.
Rational shift_sum_delta(std::int64_t d, std::int64_t n, std::int64_t s);

/// Builds a vector from (value, multiplicity) blocks, e.g. {{1/4, 2}, {1/2, 3}}.
ModOneVector blocks(std::initializer_list<std::pair<Rational, std::size_t>> parts);

}  // namespace gorenstein

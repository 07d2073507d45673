#include "gorenstein/extension.hpp"

#include "gorenstein/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gorenstein {

bool is_admissible(const HeightedGroup& g, const ModOneVector& h) {
    if (h.size() != g.width()) return false;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i].is_zero()) continue;
        if (h[i] != Rational(1, static_cast<std::int64_t>(g.coord_orders()[i]))) return false;
    }
    return true;
}

std::vector<ModOneVector> admissible_elements(const HeightedGroup& g) {
    std::vector<ModOneVector> out;
    for (const auto& x : g.elements()) {
        if (is_admissible(g, x)) out.push_back(x);
    }
    return out;
}

std::int64_t infer_k(const HeightedGroup& g) {
    if (g.order() < 2) throw InvalidGroup("cannot infer k for a group of order " + std::to_string(g.order()));
    const std::int64_t k = g.height_of(1);
    if (k < 1 || !is_type(g, {static_cast<std::int64_t>(g.order()), k})) {
        throw InvalidGroup("group of order " + std::to_string(g.order()) + " is not of type (v,k) for any k");
    }
    return k;
}

ExtensionResult extend(const HeightedGroup& g, const ModOneVector& h, std::int64_t n) {
    if (n < 2) throw std::invalid_argument("extend: n must be at least 2, got " + std::to_string(n));
    const std::int64_t k = infer_k(g);
    if (!zero_coordinates(g).empty()) throw InvalidGroup("extend: base group has a zero coordinate");
    if (!g.contains(h)) throw std::invalid_argument("extend: h = " + h.to_string() + " is not in G");
    if (!is_admissible(g, h)) {
        throw std::invalid_argument("extend: h = " + h.to_string() + " is not admissible (coordinates must be 0 or 1/d_i)");
    }

    const auto m = static_cast<std::int64_t>(g.order());
    const std::int64_t added = n * m * k - height(h);
    if (added <= 0) throw ConsistencyError("extend: non-positive number of new coordinates");
    const auto extra = static_cast<std::size_t>(added);
    const std::size_t width = g.width() + extra;

    std::vector<Rational> entries;
    entries.reserve(width);
    const Rational scale(1, n);
    for (const auto& x : h) entries.push_back(x * scale);
    entries.insert(entries.end(), extra, scale);
    ModOneVector c(std::move(entries));

    // G' is the disjoint union of the cosets r*c + G for r < n; the new
    // coordinates (all equal to r/n) tell the cosets apart.
    std::vector<ModOneVector> padded_base;
    padded_base.reserve(g.order());
    for (const auto& x : g.elements()) padded_base.push_back(x.padded(extra));

    std::vector<ModOneVector> table;
    table.reserve(g.order() * static_cast<std::size_t>(n));
    ModOneVector shift = ModOneVector::zero(width);
    for (std::int64_t r = 0; r < n; ++r) {
        for (const auto& x : padded_base) table.push_back(add_mod1(x, shift));
        shift = add_mod1(shift, c);
    }

    std::vector<ModOneVector> gens;
    gens.reserve(g.generators().size() + 1);
    for (const auto& x : g.generators()) gens.push_back(x.padded(extra));
    gens.push_back(c);

    HeightedGroup extended = HeightedGroup::from_closed_table(width, std::move(gens), std::move(table));
    if (!is_type(extended, {m * n, k})) {
        throw ConsistencyError("extend: result is not of type (" + std::to_string(m * n) + "," + std::to_string(k) + ")");
    }
    return {std::move(extended), std::move(c), extra};
}

bool verify_block_structure(const HeightedGroup& g, const HeightedGroup& gsub, const ModOneVector& c,
                            std::int64_t n, std::int64_t m, std::int64_t k) {
    try {
        if (n < 1 || m < 1 || k < 1) return false;
        if (gsub.width() != g.width() || c.size() != g.width()) return false;
        if (gsub.order() != static_cast<std::size_t>(m)) return false;
        if (g.order() != static_cast<std::size_t>(m * n)) return false;
        if (!is_type(g, {m * n, k})) return false;
        for (const auto& x : gsub.elements()) {
            if (!g.contains(x)) return false;
        }
        if (!g.contains(c)) return false;

        std::vector<bool> covered(g.order(), false);
        ModOneVector shift = ModOneVector::zero(g.width());
        for (std::int64_t r = 0; r < n; ++r) {
            if (r > 0 && gsub.contains(shift)) return false;  // order of c modulo Gsub is below n
            std::vector<std::int64_t> coset_heights;
            for (const auto& x : gsub.elements()) {
                const auto idx = g.index_of(add_mod1(x, shift));
                if (!idx || covered[*idx]) return false;
                covered[*idx] = true;
                coset_heights.push_back(g.height_of(*idx));
            }
            std::sort(coset_heights.begin(), coset_heights.end());
            for (std::int64_t j = 0; j < m; ++j) {
                if (coset_heights[static_cast<std::size_t>(j)] != r * m * k + j * k) return false;
            }
            if (r == 1 && height(c) != coset_heights.front()) return false;
            shift = add_mod1(shift, c);
        }
        if (!gsub.contains(shift)) return false;  // n*c must return to Gsub
        return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace gorenstein

#include "gorenstein/group.hpp"

#include "gorenstein/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace gorenstein {

HeightedGroup HeightedGroup::from_table(std::size_t width, std::vector<ModOneVector> generators,
                                        std::vector<ModOneVector> elements) {
    HeightedGroup g = from_closed_table(width, std::move(generators), std::move(elements));
    for (const auto& x : g.elements_) {
        for (const auto& gen : g.generators_) {
            if (!g.contains(add_mod1(x, gen))) {
                throw InvalidGroup("group table is not closed under generator " + gen.to_string());
            }
        }
    }
    return g;
}

HeightedGroup HeightedGroup::from_closed_table(std::size_t width, std::vector<ModOneVector> generators,
                                               std::vector<ModOneVector> elements) {
    for (const auto& x : elements) {
        if (x.size() != width) throw InvalidGroup("element width does not match ambient width");
    }
    for (const auto& x : generators) {
        if (x.size() != width) throw InvalidGroup("generator width does not match ambient width");
    }

    std::vector<std::pair<std::int64_t, std::size_t>> order;
    order.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) order.emplace_back(height(elements[i]), i);
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return elements[a.second] < elements[b.second];
    });

    HeightedGroup g;
    g.width_ = width;
    g.generators_ = std::move(generators);
    g.elements_.reserve(elements.size());
    g.heights_.reserve(elements.size());
    for (const auto& [h, i] : order) {
        g.heights_.push_back(h);
        g.elements_.push_back(std::move(elements[i]));
    }
    g.index_.reserve(g.elements_.size());
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
        if (!g.index_.emplace(g.elements_[i], i).second) {
            throw InvalidGroup("duplicate element " + g.elements_[i].to_string() + " in group table");
        }
    }
    if (g.elements_.empty() || !g.elements_.front().is_zero()) {
        throw InvalidGroup("group table does not contain the zero vector");
    }
    g.coord_orders_.assign(width, 0);
    for (std::size_t i = 0; i < width; ++i) {
        std::set<Rational> values;
        for (const auto& x : g.elements_) values.insert(x[i]);
        g.coord_orders_[i] = values.size();
    }
    return g;
}

std::optional<std::size_t> HeightedGroup::index_of(const ModOneVector& x) const {
    const auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool HeightedGroup::has_distinct_heights() const {
    return std::adjacent_find(heights_.begin(), heights_.end()) == heights_.end();
}

HeightedGroup close_generators(std::span<const ModOneVector> generators, std::size_t width, std::size_t cap) {
    for (const auto& gen : generators) {
        if (gen.size() != width) {
            throw std::invalid_argument("generator " + gen.to_string() + " has length " +
                                        std::to_string(gen.size()) + ", expected " + std::to_string(width));
        }
    }
    std::unordered_set<ModOneVector, ModOneVectorHash> seen;
    std::vector<ModOneVector> table;
    std::deque<std::size_t> queue;
    auto visit = [&](ModOneVector x) {
        if (seen.contains(x)) return;
        height(x);  // rejects fractional heights as soon as they appear
        if (table.size() >= cap) {
            throw std::length_error("subgroup closure exceeds the safety cap of " + std::to_string(cap) +
                                    " elements");
        }
        seen.insert(x);
        table.push_back(std::move(x));
        queue.push_back(table.size() - 1);
    };
    visit(ModOneVector::zero(width));
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (const auto& gen : generators) visit(add_mod1(table[i], gen));
    }
    return HeightedGroup::from_closed_table(width, {generators.begin(), generators.end()}, std::move(table));
}

bool is_type(const HeightedGroup& g, const TypeProfile& profile) {
    if (profile.v < 1 || profile.k < 1) return false;
    if (g.order() != static_cast<std::size_t>(profile.v)) return false;
    // heights() is sorted, so the multiset matches iff it is exactly 0, k, 2k, ...
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (g.height_of(i) != static_cast<std::int64_t>(i) * profile.k) return false;
    }
    return true;
}

std::vector<std::size_t> zero_coordinates(const HeightedGroup& g) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.width(); ++i) {
        if (g.coord_orders()[i] == 1) out.push_back(i);
    }
    return out;
}

HeightedGroup project(const HeightedGroup& g, std::span<const std::size_t> keep) {
    std::vector<ModOneVector> gens;
    gens.reserve(g.generators().size());
    for (const auto& x : g.generators()) gens.push_back(x.select(keep));
    std::vector<ModOneVector> elems;
    elems.reserve(g.order());
    for (const auto& x : g.elements()) elems.push_back(x.select(keep));
    return HeightedGroup::from_closed_table(keep.size(), std::move(gens), std::move(elems));
}

HeightedGroup reduce(const HeightedGroup& g) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g.width(); ++i) {
        if (g.coord_orders()[i] != 1) keep.push_back(i);
    }
    if (keep.size() == g.width()) return g;
    return project(g, keep);
}

HeightedGroup permute_coordinates(const HeightedGroup& g, std::span<const std::size_t> perm) {
    if (perm.size() != g.width()) throw std::invalid_argument("permutation length does not match width");
    std::vector<bool> hit(perm.size(), false);
    for (std::size_t p : perm) {
        if (p >= perm.size() || hit[p]) throw std::invalid_argument("not a permutation");
        hit[p] = true;
    }
    return project(g, perm);
}

CanonicalKey canonical_key(const HeightedGroup& g) {
    if (!g.has_distinct_heights()) {
        throw InvalidGroup("canonical key undefined for this group: two elements share a height");
    }
    std::vector<std::vector<Rational>> columns(g.width(), std::vector<Rational>(g.order()));
    for (std::size_t r = 0; r < g.order(); ++r) {
        for (std::size_t c = 0; c < g.width(); ++c) columns[c][r] = g.element(r)[c];
    }
    std::sort(columns.begin(), columns.end());
    CanonicalKey key;
    key.rows.assign(g.order(), std::vector<Rational>(g.width()));
    for (std::size_t c = 0; c < g.width(); ++c) {
        for (std::size_t r = 0; r < g.order(); ++r) key.rows[r][c] = std::move(columns[c][r]);
    }
    return key;
}

bool equivalent(const HeightedGroup& a, const HeightedGroup& b) {
    if (a.order() != b.order() || a.width() != b.width()) return false;
    return canonical_key(a) == canonical_key(b);
}

std::vector<std::int64_t> hstar_vector(const HeightedGroup& g, std::int64_t dim_hint) {
    if (dim_hint < 0) throw std::invalid_argument("hstar_vector: negative dimension");
    std::vector<std::int64_t> h(static_cast<std::size_t>(dim_hint) + 1, 0);
    for (std::int64_t ht : g.heights()) {
        if (ht > dim_hint) {
            throw std::invalid_argument("element of height " + std::to_string(ht) + " exceeds dimension " +
                                        std::to_string(dim_hint));
        }
        ++h[static_cast<std::size_t>(ht)];
    }
    return h;
}

bool coordinate_values_uniform(const HeightedGroup& g) {
    for (std::size_t i = 0; i < g.width(); ++i) {
        const std::uint64_t d = g.coord_orders()[i];
        if (d == 0 || g.order() % d != 0) return false;
        std::vector<std::size_t> counts(d, 0);
        for (const auto& x : g.elements()) {
            const Rational scaled = x[i] * Rational(static_cast<std::int64_t>(d));
            if (!scaled.is_integer()) return false;
            ++counts[static_cast<std::size_t>(to_int64(scaled.num()))];
        }
        for (std::size_t c : counts) {
            if (c != g.order() / d) return false;
        }
    }
    return true;
}

}  // namespace gorenstein

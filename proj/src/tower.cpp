#include "gorenstein/tower.hpp"

#include "gorenstein/errors.hpp"
#include "gorenstein/extension.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace gorenstein {

namespace {

void require_tower_input(const HeightedGroup& g, std::int64_t k) {
    if (k < 1) throw InvalidGroup("k must be positive");
    if (!is_type(g, {static_cast<std::int64_t>(g.order()), k})) {
        throw InvalidGroup("group of order " + std::to_string(g.order()) + " is not of type (" +
                           std::to_string(g.order()) + "," + std::to_string(k) + ")");
    }
    if (g.order() < 2) throw InvalidGroup("type (v,k) requires v >= 2");
    if (!zero_coordinates(g).empty()) {
        throw InvalidGroup("group has a zero coordinate: the simplex is a lattice pyramid");
    }
}

std::size_t lookup(const HeightedGroup& g, const ModOneVector& x) {
    const auto idx = g.index_of(x);
    if (!idx) throw ConsistencyError("sum of group elements fell outside the group");
    return *idx;
}

ModOneVector embed(const ModOneVector& u, std::span<const std::size_t> positions, std::size_t width) {
    std::vector<Rational> entries(width);
    for (std::size_t j = 0; j < u.size(); ++j) entries[positions[j]] = u[j];
    return ModOneVector(std::move(entries));
}

}  // namespace

ModOneVector unique_height_k_element(const HeightedGroup& g, std::int64_t k) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (g.height_of(i) == k) hits.push_back(i);
    }
    if (hits.size() != 1) {
        throw InvalidGroup("expected exactly one element of height " + std::to_string(k) + ", found " +
                           std::to_string(hits.size()));
    }
    const ModOneVector& a = g.element(hits.front());
    const std::uint64_t m = order_of(a);
    const Rational unit(1, static_cast<std::int64_t>(m));
    std::size_t count = 0;
    for (const auto& x : a) {
        if (x == unit) {
            ++count;
        } else if (!x.is_zero()) {
            throw ConsistencyError("height-k element " + a.to_string() + " has a coordinate other than 0 or 1/" +
                                   std::to_string(m));
        }
    }
    if (count != m * static_cast<std::uint64_t>(k)) {
        throw ConsistencyError("height-k element " + a.to_string() + " has " + std::to_string(count) +
                               " nonzero coordinates, expected " + std::to_string(m * static_cast<std::uint64_t>(k)));
    }
    return a;
}

std::vector<std::vector<std::size_t>> coset_decomposition(const HeightedGroup& g,
                                                          std::span<const std::size_t> members) {
    std::vector<bool> assigned(g.order(), false);
    std::vector<std::vector<std::size_t>> cosets;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (assigned[x]) continue;
        std::vector<std::size_t> coset;
        coset.reserve(members.size());
        for (std::size_t s : members) {
            const std::size_t y = lookup(g, add_mod1(g.element(x), g.element(s)));
            if (assigned[y]) throw ConsistencyError("coset decomposition overlaps: member set is not a subgroup");
            assigned[y] = true;
            coset.push_back(y);
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

std::vector<TowerStage> quotient_tower(const HeightedGroup& g, std::int64_t k) {
    require_tower_input(g, k);
    unique_height_k_element(g, k);

    std::vector<TowerStage> stages;
    std::vector<std::size_t> members{0};
    std::vector<bool> in_sub(g.order(), false);
    in_sub[0] = true;
    std::int64_t m = 1;
    while (members.size() < g.order()) {
        // Heights are 0, k, 2k, ... in table order, so the element of height Mk sits at index M.
        const auto ci = static_cast<std::size_t>(m);
        if (g.height_of(ci) != m * k) throw ConsistencyError("height table is not 0, k, 2k, ...");
        const ModOneVector& c = g.element(ci);
        for (std::size_t s : members) {
            if (lookup(g, add_mod1(c, g.element(s))) < ci) {
                throw InvalidGroup("no coset of G_" + std::to_string(stages.size()) + " has minimum height " +
                                   std::to_string(m * k) + "; not a valid type-(v,k) group");
            }
        }

        std::int64_t n = 1;
        ModOneVector power = c;
        while (!in_sub[lookup(g, power)]) {
            power = add_mod1(power, c);
            ++n;
        }

        std::vector<std::size_t> next;
        next.reserve(members.size() * static_cast<std::size_t>(n));
        ModOneVector shift = ModOneVector::zero(g.width());
        for (std::int64_t r = 0; r < n; ++r) {
            for (std::size_t s : members) next.push_back(lookup(g, add_mod1(g.element(s), shift)));
            shift = add_mod1(shift, c);
        }
        std::sort(next.begin(), next.end());
        for (std::size_t x : next) in_sub[x] = true;

        TowerStage stage;
        stage.index = static_cast<int>(stages.size()) + 1;
        stage.members = std::move(next);
        stage.order = m * n;
        stage.quotient_order = n;
        stage.lift = c;
        stage.multiple = std::move(power);
        members = stage.members;
        m = stage.order;
        stages.push_back(std::move(stage));
    }
    return stages;
}

HeightedGroup stage_subgroup(const HeightedGroup& g, std::span<const TowerStage> stages, std::size_t i) {
    if (i > stages.size()) throw std::out_of_range("stage index beyond the tower");
    std::vector<ModOneVector> gens;
    std::vector<ModOneVector> elems;
    if (i == 0) {
        elems.push_back(ModOneVector::zero(g.width()));
    } else {
        for (std::size_t j = 0; j < i; ++j) gens.push_back(stages[j].lift);
        for (std::size_t x : stages[i - 1].members) elems.push_back(g.element(x));
    }
    return HeightedGroup::from_closed_table(g.width(), std::move(gens), std::move(elems));
}

ClassData extract_data(const HeightedGroup& g, std::int64_t k) {
    const std::vector<TowerStage> stages = quotient_tower(g, k);

    ClassData data;
    data.k = k;
    data.chain.push_back(1);

    // Stage 1: G_1 = <c_1> reduces to the initial group <(1/M_1)^[M_1 k]>.
    std::vector<std::size_t> support = stages.front().lift.support();
    HeightedGroup reduced = project(stage_subgroup(g, stages, 1), support);
    MarkerSet markers({Marker{1, stages.front().lift.select(support)}});
    markers.validate(reduced);
    data.chain.push_back(stages.front().order);
    data.subsets.emplace_back();

    for (std::size_t i = 1; i < stages.size(); ++i) {
        const TowerStage& stage = stages[i];
        const int step = stage.index;

        for (std::size_t coord : stage.multiple.support()) {
            if (!std::binary_search(support.begin(), support.end(), coord)) {
                throw ConsistencyError("h_" + std::to_string(step) + " is nonzero outside the support of G_" +
                                       std::to_string(step - 1));
            }
        }
        const ModOneVector h_reduced = stage.multiple.select(support);
        if (!is_admissible(reduced, h_reduced)) {
            throw ConsistencyError("h_" + std::to_string(step) + " = " + h_reduced.to_string() +
                                   " is not admissible in the reduced group");
        }
        const std::vector<int> subset = subset_sum_decompose(markers, h_reduced);

        std::set<std::size_t> merged(support.begin(), support.end());
        for (std::size_t coord : stage.lift.support()) merged.insert(coord);
        std::vector<std::size_t> next_support(merged.begin(), merged.end());
        std::vector<std::size_t> positions;
        positions.reserve(support.size());
        for (std::size_t coord : support) {
            positions.push_back(static_cast<std::size_t>(
                std::lower_bound(next_support.begin(), next_support.end(), coord) - next_support.begin()));
        }

        std::vector<Marker> next;
        for (const auto& mk : markers.markers()) {
            if (!std::binary_search(subset.begin(), subset.end(), mk.step)) {
                next.push_back({mk.step, embed(mk.element, positions, next_support.size())});
            }
        }
        next.push_back({step, stage.lift.select(next_support)});

        support = std::move(next_support);
        reduced = project(stage_subgroup(g, stages, i + 1), support);
        markers = MarkerSet(std::move(next));
        markers.validate(reduced);

        data.chain.push_back(stage.order);
        data.subsets.push_back(subset);
    }
    return data;
}

bool is_consecutive_block(std::span<const std::int64_t> values) {
    if (values.empty()) return true;
    std::vector<std::int64_t> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] != sorted[i - 1] + 1) return false;
    }
    return true;
}

bool satisfies_cyclic_walk_hypothesis(std::span<const std::int64_t> values) {
    std::set<std::int64_t> distinct(values.begin(), values.end());
    if (distinct.size() != values.size()) return false;
    for (std::size_t t = 0; t < values.size(); ++t) {
        const std::int64_t next = values[(t + 1) % values.size()];
        if (next - values[t] > 1) return false;
    }
    return true;
}

}  // namespace gorenstein

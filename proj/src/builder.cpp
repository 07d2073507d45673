#include "gorenstein/builder.hpp"

#include "gorenstein/errors.hpp"
#include "gorenstein/extension.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gorenstein {

MarkerSet::MarkerSet(std::vector<Marker> markers) : markers_(std::move(markers)) {
    std::sort(markers_.begin(), markers_.end(), [](const Marker& a, const Marker& b) { return a.step < b.step; });
    for (std::size_t i = 1; i < markers_.size(); ++i) {
        if (markers_[i].step == markers_[i - 1].step) {
            throw std::invalid_argument("marker set has two markers for step " + std::to_string(markers_[i].step));
        }
    }
}

std::vector<int> MarkerSet::steps() const {
    std::vector<int> out;
    out.reserve(markers_.size());
    for (const auto& m : markers_) out.push_back(m.step);
    return out;
}

bool MarkerSet::contains_step(int step) const {
    return std::any_of(markers_.begin(), markers_.end(), [step](const Marker& m) { return m.step == step; });
}

const Marker& MarkerSet::by_step(int step) const {
    for (const auto& m : markers_) {
        if (m.step == step) return m;
    }
    throw std::invalid_argument("no marker for step " + std::to_string(step));
}

ModOneVector MarkerSet::subset_sum(std::span<const int> steps, std::size_t width) const {
    ModOneVector sum = ModOneVector::zero(width);
    for (int s : steps) sum = add_mod1(sum, by_step(s).element);
    return sum;
}

void MarkerSet::validate(const HeightedGroup& g) const {
    std::vector<int> owner(g.width(), 0);
    for (const auto& m : markers_) {
        if (m.element.size() != g.width()) throw ConsistencyError("marker width differs from group width");
        if (!g.contains(m.element)) {
            throw ConsistencyError("marker of step " + std::to_string(m.step) + " is not an element of G");
        }
        for (std::size_t i : m.element.support()) {
            if (owner[i] != 0) {
                throw ConsistencyError("markers of steps " + std::to_string(owner[i]) + " and " +
                                       std::to_string(m.step) + " share coordinate " + std::to_string(i));
            }
            owner[i] = m.step;
            if (m.element[i] != Rational(1, static_cast<std::int64_t>(g.coord_orders()[i]))) {
                throw ConsistencyError("marker of step " + std::to_string(m.step) + " has value " +
                                       m.element[i].to_string() + " at coordinate " + std::to_string(i) +
                                       " instead of 1/d_i");
            }
        }
    }
}

std::string ClassData::to_string() const {
    std::string out = "k=" + std::to_string(k) + " chain=";
    for (std::size_t i = 0; i < chain.size(); ++i) out += (i ? "<" : "") + std::to_string(chain[i]);
    out += " subsets=";
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        out += i ? ",{" : "{";
        for (std::size_t j = 0; j < subsets[i].size(); ++j) out += (j ? "," : "") + std::to_string(subsets[i][j]);
        out += "}";
    }
    return out;
}

void validate_class_data(const ClassData& data) {
    if (data.k < 1) throw std::invalid_argument("k must be positive");
    if (data.chain.size() < 2) throw std::invalid_argument("chain must run from 1 to v with at least one step");
    if (data.chain.front() != 1) throw std::invalid_argument("chain must start at 1");
    for (std::size_t i = 1; i < data.chain.size(); ++i) {
        const auto prev = data.chain[i - 1];
        const auto cur = data.chain[i];
        if (cur <= prev || cur % prev != 0) {
            throw std::invalid_argument("chain is not a strict divisor chain at " + std::to_string(prev) + " < " +
                                        std::to_string(cur));
        }
    }
    if (data.subsets.size() != data.chain.size() - 1) {
        throw std::invalid_argument("expected " + std::to_string(data.chain.size() - 1) + " subsets, got " +
                                    std::to_string(data.subsets.size()));
    }
    if (!data.subsets.front().empty()) throw std::invalid_argument("the first subset must be empty");
    std::set<int> alive;
    for (std::size_t i = 0; i < data.subsets.size(); ++i) {
        const int step = static_cast<int>(i) + 1;
        const auto& subset = data.subsets[i];
        for (std::size_t j = 0; j < subset.size(); ++j) {
            if (!alive.contains(subset[j])) {
                throw std::invalid_argument("subset " + std::to_string(step) + " uses symbol " +
                                            std::to_string(subset[j]) + " which is not alive at that step");
            }
            if (j > 0 && subset[j] <= subset[j - 1]) {
                throw std::invalid_argument("subset " + std::to_string(step) + " is not strictly increasing");
            }
        }
        for (int s : data.subsets[i]) alive.erase(s);
        alive.insert(step);
    }
}

GroupPair init_pair(std::int64_t m, std::int64_t k) {
    if (m < 2) throw std::invalid_argument("init_pair: m must be at least 2, got " + std::to_string(m));
    if (k < 1) throw std::invalid_argument("init_pair: k must be positive, got " + std::to_string(k));
    const auto width = static_cast<std::size_t>(m * k);
    ModOneVector c(std::vector<Rational>(width, Rational(1, m)));
    const std::vector<ModOneVector> gens{c};
    GroupPair pair{close_generators(gens, width), MarkerSet({Marker{1, std::move(c)}})};
    if (!is_type(pair.group, {m, k})) throw ConsistencyError("init_pair: result is not of type (m,k)");
    pair.markers.validate(pair.group);
    return pair;
}

GroupPair step_pair(const GroupPair& pair, std::span<const int> subset, std::int64_t n, int step_index) {
    std::set<int> chosen;
    for (int s : subset) {
        if (!pair.markers.contains_step(s)) {
            throw std::invalid_argument("step_pair: subset names symbol " + std::to_string(s) +
                                        " which is not in the marker set");
        }
        if (!chosen.insert(s).second) throw std::invalid_argument("step_pair: subset repeats a symbol");
    }
    if (pair.markers.contains_step(step_index)) {
        throw std::invalid_argument("step_pair: step index " + std::to_string(step_index) + " already in use");
    }

    const ModOneVector h = pair.markers.subset_sum(subset, pair.group.width());
    ExtensionResult ext = extend(pair.group, h, n);

    std::vector<Marker> next;
    for (const auto& m : pair.markers.markers()) {
        if (!chosen.contains(m.step)) next.push_back({m.step, m.element.padded(ext.added)});
    }
    next.push_back({step_index, ext.c});
    GroupPair out{std::move(ext.group), MarkerSet(std::move(next))};
    out.markers.validate(out.group);
    return out;
}

std::vector<int> subset_sum_decompose(const MarkerSet& markers, const ModOneVector& h) {
    std::vector<int> steps;
    for (const auto& m : markers.markers()) {
        if (m.element.size() != h.size()) throw ConsistencyError("subset_sum_decompose: width mismatch");
        for (std::size_t i : m.element.support()) {
            if (!h[i].is_zero()) {
                steps.push_back(m.step);
                break;
            }
        }
    }
    if (markers.subset_sum(steps, h.size()) != h) {
        throw ConsistencyError("subset_sum_decompose: " + h.to_string() + " is not a subset sum of the markers");
    }
    return steps;
}

std::vector<GroupPair> build_pairs_from_data(const ClassData& data) {
    validate_class_data(data);
    std::vector<GroupPair> pairs;
    pairs.reserve(data.length());
    pairs.push_back(init_pair(data.chain[1], data.k));
    for (std::size_t i = 2; i < data.chain.size(); ++i) {
        const std::int64_t n = data.chain[i] / data.chain[i - 1];
        pairs.push_back(step_pair(pairs.back(), data.subsets[i - 1], n, static_cast<int>(i)));
    }
    return pairs;
}

HeightedGroup build_from_data(const ClassData& data) {
    validate_class_data(data);
    GroupPair pair = init_pair(data.chain[1], data.k);
    for (std::size_t i = 2; i < data.chain.size(); ++i) {
        const std::int64_t n = data.chain[i] / data.chain[i - 1];
        pair = step_pair(pair, data.subsets[i - 1], n, static_cast<int>(i));
    }
    return std::move(pair.group);
}

}  // namespace gorenstein

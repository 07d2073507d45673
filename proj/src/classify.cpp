#include "gorenstein/classify.hpp"

#include "gorenstein/errors.hpp"
#include "gorenstein/tower.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <thread>

namespace gorenstein {

namespace {

void extend_sequences(std::size_t length, std::size_t step, std::vector<int>& alive,
                      std::vector<std::vector<int>>& prefix, std::vector<std::vector<std::vector<int>>>& out) {
    if (step > length) {
        out.push_back(prefix);
        return;
    }
    const std::size_t masks = std::size_t{1} << alive.size();
    for (std::size_t mask = 0; mask < masks; ++mask) {
        std::vector<int> chosen;
        std::vector<int> next_alive;
        for (std::size_t b = 0; b < alive.size(); ++b) {
            if (mask >> b & 1U) {
                chosen.push_back(alive[b]);
            } else {
                next_alive.push_back(alive[b]);
            }
        }
        next_alive.push_back(static_cast<int>(step));
        prefix.push_back(std::move(chosen));
        extend_sequences(length, step + 1, next_alive, prefix, out);
        prefix.pop_back();
    }
}

void tally_alive(std::size_t steps, std::size_t step, std::size_t alive, std::vector<std::uint64_t>& counts) {
    if (step > steps) {
        if (counts.size() <= alive) counts.resize(alive + 1, 0);
        ++counts[alive];
        return;
    }
    // choosing j of the alive symbols leaves alive - j + 1
    for (std::size_t mask = 0; mask < (std::size_t{1} << alive); ++mask) {
        const auto chosen = static_cast<std::size_t>(std::popcount(mask));
        tally_alive(steps, step + 1, alive - chosen + 1, counts);
    }
}

std::vector<std::size_t> shuffled_identity(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

template <typename Fn>
void run_parallel(std::size_t count, std::size_t workers, Fn&& fn) {
    workers = std::max<std::size_t>(1, std::min(workers, count));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
}

}  // namespace

std::vector<std::vector<std::vector<int>>> subset_sequences(std::size_t length) {
    std::vector<std::vector<std::vector<int>>> out;
    if (length == 0) return out;
    std::vector<int> alive;
    std::vector<std::vector<int>> prefix;
    extend_sequences(length, 1, alive, prefix, out);
    return out;
}

std::vector<std::uint64_t> alive_size_distribution(std::size_t steps) {
    std::vector<std::uint64_t> counts;
    tally_alive(steps, 1, 0, counts);
    return counts;
}

std::vector<ClassData> enumerate_data(std::int64_t v, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    std::map<std::size_t, std::vector<std::vector<std::vector<int>>>> by_length;
    std::vector<ClassData> out;
    for (const auto& chain : strict_chains(v)) {
        auto [it, fresh] = by_length.try_emplace(chain.length());
        if (fresh) it->second = subset_sequences(chain.length());
        for (const auto& seq : it->second) out.push_back({k, chain.terms, seq});
    }
    return out;
}

std::vector<std::int64_t> expected_hstar(std::int64_t v, std::int64_t k, std::size_t length) {
    const auto top = static_cast<std::size_t>((v - 1) * k);
    std::vector<std::int64_t> h(std::max(length, top + 1), 0);
    for (std::int64_t j = 0; j < v; ++j) h[static_cast<std::size_t>(j * k)] = 1;
    return h;
}

ClassRecord build_class(const ClassData& data) {
    try {
        HeightedGroup group = build_from_data(data);
        const std::int64_t v = data.v();
        if (!is_type(group, {v, data.k})) {
            throw ClassificationError("built group is not of type (v,k)", data);
        }
        if (!zero_coordinates(group).empty()) {
            throw ClassificationError("built group has a zero coordinate", data);
        }
        const auto dimension = static_cast<std::int64_t>(group.width()) - 1;
        auto hstar = hstar_vector(group, dimension);
        if (hstar != expected_hstar(v, data.k, hstar.size())) {
            throw ClassificationError("h*-vector differs from 1 + t^k + ... + t^((v-1)k)", data);
        }
        CanonicalKey key = canonical_key(group);
        return ClassRecord{data, std::move(group), std::move(key), std::move(hstar), dimension};
    } catch (const ClassificationError&) {
        throw;
    } catch (const std::exception& e) {
        throw ClassificationError(std::string("building class failed: ") + e.what(), data);
    }
}

void for_each_class(std::int64_t v, std::int64_t k, const ClassifyOptions& options,
                    const std::function<void(const ClassRecord&)>& sink) {
    if (v < 2) throw std::invalid_argument("v must be at least 2, got " + std::to_string(v));
    if (k < 1) throw std::invalid_argument("k must be positive, got " + std::to_string(k));
    if (static_cast<std::size_t>(v) > options.max_group_order) {
        throw std::invalid_argument("v = " + std::to_string(v) + " exceeds the maximum group order " +
                                    std::to_string(options.max_group_order));
    }

    const std::vector<ClassData> data = enumerate_data(v, k);
    if (BigInt(static_cast<unsigned long>(data.size())) != count_classes(v)) {
        throw ClassificationError("number of data differs from sum_s c_s s!", ClassData{k, {1, v}, {{}}});
    }

    std::map<CanonicalKey, std::size_t> seen;
    const std::size_t workers = std::max<std::size_t>(1, options.workers);
    const std::size_t batch = workers * 16;
    for (std::size_t start = 0; start < data.size(); start += batch) {
        const std::size_t count = std::min(batch, data.size() - start);
        std::vector<std::optional<ClassRecord>> slots(count);
        std::vector<std::string> errors(count);
        run_parallel(count, workers, [&](std::size_t i) {
            try {
                slots[i] = build_class(data[start + i]);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        });
        for (std::size_t i = 0; i < count; ++i) {
            const ClassData& datum = data[start + i];
            if (!slots[i]) throw ClassificationError(errors[i] + " [" + datum.to_string() + "]", datum);
            const auto [it, inserted] = seen.emplace(slots[i]->key, start + i);
            if (!inserted) {
                throw ClassificationError("canonical key of [" + datum.to_string() + "] collides with [" +
                                              data[it->second].to_string() + "]",
                                          datum);
            }
            sink(*slots[i]);
        }
    }
}

ClassificationResult classify(std::int64_t v, std::int64_t k, const ClassifyOptions& options) {
    ClassificationResult result;
    result.v = v;
    result.k = k;
    for_each_class(v, k, options, [&](const ClassRecord& r) { result.classes.push_back(r); });
    result.census = chain_census(v);
    result.total = BigInt(static_cast<unsigned long>(result.classes.size()));
    return result;
}

BijectionReport verify_bijection(std::int64_t v, std::int64_t k, bool permuted_copies, std::uint64_t seed) {
    BijectionReport report;
    report.v = v;
    report.k = k;
    const auto data = enumerate_data(v, k);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const ClassData& datum = data[i];
        try {
            const HeightedGroup group = build_from_data(datum);
            ++report.checked;
            const ClassData back = extract_data(group, k);
            if (back != datum) {
                report.failures.push_back("[" + datum.to_string() + "] extracted as [" + back.to_string() + "]");
            }
            if (permuted_copies) {
                const auto perm = shuffled_identity(group.width(), seed + i);
                const ClassData permuted = extract_data(permute_coordinates(group, perm), k);
                ++report.permuted_checked;
                if (permuted != datum) {
                    report.failures.push_back("[" + datum.to_string() + "] permuted copy extracted as [" +
                                              permuted.to_string() + "]");
                }
            }
        } catch (const std::exception& e) {
            report.failures.push_back("[" + datum.to_string() + "] " + e.what());
        }
    }
    return report;
}

}  // namespace gorenstein

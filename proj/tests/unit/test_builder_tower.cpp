#include "doctest.h"

#include "gorenstein/builder.hpp"
#include "gorenstein/errors.hpp"
#include "gorenstein/tower.hpp"

#include <algorithm>

using namespace gorenstein;
using R = Rational;

namespace {

HeightedGroup cyclic(const ModOneVector& gen) {
    const std::vector<ModOneVector> gens{gen};
    return close_generators(gens, gen.size());
}

}  // namespace

TEST_CASE("init_pair") {
    const auto p = init_pair(2, 1);
    CHECK(canonical_key(p.group) == canonical_key(cyclic({R(1, 2), R(1, 2)})));
    CHECK(p.markers.size() == 1);

    const auto q = init_pair(3, 2);
    CHECK(q.group.width() == 6);
    CHECK(is_type(q.group, {3, 2}));
}

TEST_CASE("step_pair from the order-2 start") {
    const auto p = init_pair(2, 1);

    const auto empty = step_pair(p, std::vector<int>{}, 2, 2);
    CHECK(empty.markers.size() == 2);
    CHECK(empty.group.generators() ==
          std::vector<ModOneVector>{blocks({{R(1, 2), 2}, {R(0), 4}}), blocks({{R(0), 2}, {R(1, 2), 4}})});

    const auto one = step_pair(p, std::vector<int>{1}, 2, 2);
    CHECK(one.markers.size() == 1);
    CHECK(equivalent(one.group, cyclic(blocks({{R(1, 4), 2}, {R(1, 2), 3}}))));
    one.markers.validate(one.group);
}

TEST_CASE("chain 1<2<4<8 with J2={l1}, J3={l2}") {
    const ClassData data{1, {1, 2, 4, 8}, {{}, {1}, {2}}};
    const auto pairs = build_pairs_from_data(data);
    REQUIRE(pairs.size() == 3);
    const auto& g = pairs.back().group;
    CHECK(g.generators().back() == blocks({{R(1, 8), 2}, {R(1, 4), 3}, {R(1, 2), 6}}));
    CHECK(is_type(g, {8, 1}));

    // h3 = 2 c3 decomposes through the marker created at step 2
    const auto h3 = scale_mod1(g.generators().back(), 2);
    const auto& prev = pairs[1];
    const auto h_old = h3.select([&] {
        std::vector<std::size_t> idx(prev.group.width());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        return idx;
    }());
    CHECK(subset_sum_decompose(prev.markers, h_old) == std::vector<int>{2});

    const auto stages = quotient_tower(g, 1);
    std::vector<std::int64_t> orders;
    for (const auto& s : stages) orders.push_back(s.order);
    CHECK(orders == std::vector<std::int64_t>{2, 4, 8});
}

TEST_CASE("subset_sum_decompose edge cases") {
    const auto pair = step_pair(init_pair(2, 1), std::vector<int>{}, 2, 2);
    CHECK(subset_sum_decompose(pair.markers, ModOneVector::zero(6)).empty());
    const std::vector<int> all{1, 2};
    CHECK(subset_sum_decompose(pair.markers, pair.markers.subset_sum(all, 6)) == all);
    CHECK_THROWS_AS(subset_sum_decompose(pair.markers, blocks({{R(1, 4), 2}, {R(0), 4}})), ConsistencyError);
}

TEST_CASE("build_from_data closed forms") {
    CHECK(equivalent(build_from_data({1, {1, 2}, {{}}}), cyclic({R(1, 2), R(1, 2)})));
    CHECK(equivalent(build_from_data({1, {1, 4}, {{}}}), cyclic(blocks({{R(1, 4), 4}}))));
    const auto g = build_from_data({1, {1, 2, 4, 8}, {{}, {}, {1, 2}}});
    CHECK(g.generators().back() == blocks({{R(1, 4), 2}, {R(1, 4), 4}, {R(1, 2), 5}}));
}

TEST_CASE("validate_class_data") {
    CHECK_NOTHROW(validate_class_data({1, {1, 2, 4}, {{}, {1}}}));
    CHECK_THROWS(validate_class_data({1, {1, 3, 4}, {{}, {}}}));   // 3 does not divide 4
    CHECK_THROWS(validate_class_data({1, {1, 2, 4}, {{1}, {}}}));  // J1 must be empty
    CHECK_THROWS(validate_class_data({1, {1, 2, 4}, {{}, {2}}}));  // l2 not alive yet
    CHECK_THROWS(validate_class_data({1, {1, 2, 4, 8}, {{}, {1}, {1}}}));  // l1 used up
    CHECK_THROWS(validate_class_data({0, {1, 2}, {{}}}));
    CHECK_THROWS(validate_class_data({1, {1, 2, 4}, {{}}}));
}

TEST_CASE("unique height-k element") {
    CHECK(unique_height_k_element(cyclic(blocks({{R(1, 4), 2}, {R(1, 2), 3}})), 1) ==
          blocks({{R(1, 2), 2}, {R(0), 3}}));
    CHECK(unique_height_k_element(cyclic({R(1, 2), R(1, 2)}), 1) == ModOneVector{R(1, 2), R(1, 2)});
    CHECK(unique_height_k_element(cyclic(blocks({{R(1, 3), 6}})), 2) == blocks({{R(1, 3), 6}}));
    CHECK_THROWS_AS(unique_height_k_element(cyclic({R(1, 2), R(1, 2)}), 2), InvalidGroup);
}

TEST_CASE("quotient tower of the cyclic order-4 group") {
    const auto c = blocks({{R(1, 4), 2}, {R(1, 2), 3}});
    const auto stages = quotient_tower(cyclic(c), 1);
    REQUIRE(stages.size() == 2);
    CHECK(stages[0].order == 2);
    CHECK(stages[1].order == 4);
    CHECK(stages[0].lift == blocks({{R(1, 2), 2}, {R(0), 3}}));
    CHECK(stages[1].lift == c);

    const auto single = quotient_tower(cyclic({R(1, 2), R(1, 2)}), 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].lift == ModOneVector{R(1, 2), R(1, 2)});
}

TEST_CASE("extract_data") {
    CHECK(extract_data(cyclic(blocks({{R(1, 8), 8}})), 1) == ClassData{1, {1, 8}, {{}}});
    CHECK(extract_data(cyclic(blocks({{R(1, 4), 4}})), 1) == ClassData{1, {1, 4}, {{}}});
    CHECK(extract_data(cyclic(blocks({{R(1, 4), 2}, {R(1, 2), 3}})), 1) == ClassData{1, {1, 2, 4}, {{}, {1}}});
    const ClassData deep{2, {1, 2, 4, 8}, {{}, {1}, {2}}};
    CHECK(extract_data(build_from_data(deep), 2) == deep);
    CHECK_THROWS(extract_data(cyclic({R(0), R(1, 2), R(1, 2)}), 1));
}

TEST_CASE("cyclic walk helpers") {
    const std::vector<std::int64_t> block{3, 4, 2};
    CHECK(is_consecutive_block(block));
    CHECK(satisfies_cyclic_walk_hypothesis(block));
    const std::vector<std::int64_t> gap{1, 3};
    CHECK_FALSE(is_consecutive_block(gap));
    CHECK_FALSE(satisfies_cyclic_walk_hypothesis(gap));
    const std::vector<std::int64_t> dup{1, 1};
    CHECK_FALSE(satisfies_cyclic_walk_hypothesis(dup));
}

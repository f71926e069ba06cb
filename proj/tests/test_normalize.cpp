#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "madgad/acceptance.hpp"
#include "madgad/errors.hpp"
#include "madgad/formulas.hpp"
#include "madgad/mad.hpp"
#include "madgad/normalize.hpp"
#include "test_support.hpp"

using namespace madgad;
using madgad::testing::q;

namespace {

std::vector<std::int64_t> sorted_items(const NormalizationState& s) {
    std::vector<std::int64_t> v = s.items;
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Graph> random_colouring(int n, int k, std::mt19937_64& rng) {
    std::vector<std::vector<Edge>> colour(k);
    for (const Edge& e : complete(n).edges()) colour[rng() % k].push_back(e);
    std::vector<Graph> parts;
    for (const auto& c : colour) parts.emplace_back(n, c);
    return parts;
}

}  // namespace

TEST(ItemTypes, Classification) {
    EXPECT_EQ(describe(6), (ItemDescriptor{4, 0}));
    EXPECT_EQ(describe(4), (ItemDescriptor{3, 1}));
    EXPECT_EQ(describe(0), (ItemDescriptor{1, 0}));
    EXPECT_EQ(item_type(describe(6)), ItemType::A);
    EXPECT_EQ(item_type(describe(4)), ItemType::B);  // tie 2r = p - 1
    EXPECT_EQ(item_type(describe(11)), ItemType::C);  // K_5 plus one edge
    EXPECT_EQ(item_type(describe(13)), ItemType::B);
    EXPECT_EQ(item_mad(0), q(0));
    EXPECT_EQ(item_mad(5), q(5, 2));
}

TEST(ToRepresentativeList, Examples) {
    const NormalizationState a = to_representative_list(std::vector<Graph>{cycle(5), path(4)});
    EXPECT_EQ(a.items, (std::vector<std::int64_t>{5, 3}));
    EXPECT_EQ(a.input_mad_sum, q(2) + q(3, 2));
    EXPECT_EQ(a.mad_sum(), q(5, 2) + q(2));
    EXPECT_GE(a.mad_sum(), a.input_mad_sum);
    EXPECT_EQ(to_representative_list(std::vector<Graph>{complete(4)}).items, (std::vector<std::int64_t>{6}));
    EXPECT_EQ(to_representative_list(std::vector<Graph>{representative(3, 1)}).items, (std::vector<std::int64_t>{4}));
}

TEST(Normalize, SixVerticesThreeParts) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<Graph> parts = random_colouring(6, 3, rng);
        const NormalizationState s = normalize(parts, 3, 15);
        EXPECT_TRUE(s.terminal);
        EXPECT_EQ(sorted_items(s), (std::vector<std::int64_t>{3, 6, 6}));
        EXPECT_EQ(s.mad_sum(), q(8));
        EXPECT_EQ(audit_normalization(to_representative_list(parts).items, s), "");
    }
}

TEST(Normalize, EightVerticesSevenParts) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<Graph> parts = random_colouring(8, 7, rng);
        const NormalizationState s = normalize(parts, 7, 28);
        EXPECT_EQ(sorted_items(s), (std::vector<std::int64_t>{3, 3, 3, 3, 4, 6, 6}));
        EXPECT_EQ(s.mad_sum(), q(16));
    }
}

TEST(Normalize, TerminalInputIsFixedPoint) {
    const NormalizationState s = normalize(m_list_extremal_multiset(7, 28), 7, 28);
    EXPECT_TRUE(s.log.empty());
    EXPECT_TRUE(has_terminal_shape(s));
}

TEST(Normalize, RejectsMismatchedCounts) {
    EXPECT_THROW(normalize(std::vector<Graph>{complete(3)}, 2, 3), DomainError);
    EXPECT_THROW(normalize(std::vector<Graph>{complete(3), complete(2)}, 2, 5), DomainError);
}

TEST(Normalize, RandomListsReachFormula) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 7);
        const std::int64_t n = k + static_cast<std::int64_t>(rng() % (61 - k));
        // Random composition of n into k positive parts.
        std::vector<std::int64_t> items(k, 1);
        for (std::int64_t i = k; i < n; ++i) ++items[rng() % k];
        NormalizationState start;
        start.items = items;
        start.input_mad_sum = start.mad_sum();
        const NormalizationState end = normalize_state(start);
        ASSERT_TRUE(end.terminal);
        ASSERT_EQ(end.mad_sum(), m_list(k, n)) << k << "," << n;
        ASSERT_EQ(end.conserved_total(), n);
        ASSERT_EQ(audit_normalization(items, end), "");
        const std::int64_t total = static_cast<std::int64_t>(items.size()) + n + 2;
        ASSERT_LE(static_cast<std::int64_t>(end.log.size()), 16 * total * total * total);
    }
}

TEST(Normalize, StepsConserveAndIncrease) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 6);
        const int k = 2 + static_cast<int>(rng() % std::min<std::int64_t>(6, choose2(n) - 1));
        const std::vector<Graph> parts = random_colouring(n, k, rng);
        const NormalizationState s = normalize(parts, k, choose2(n));
        Rational prev = to_representative_list(parts).mad_sum();
        for (const auto& step : s.log) {
            EXPECT_GE(step.mad_sum, prev);
            prev = step.mad_sum;
        }
        EXPECT_EQ(s.mad_sum(), m_upper_bound(k, n));
    }
}

TEST(Normalize, JsonReport) {
    const NormalizationState s = normalize(std::vector<Graph>{cycle(5), path(4)}, 2, 8);
    const Json j = state_to_json(s);
    EXPECT_EQ(j.at("mad_sum").get<std::string>(), m_list(2, 8).to_string());
    EXPECT_TRUE(j.at("terminal").get<bool>());
    EXPECT_EQ(j.at("steps").size(), s.log.size());
}

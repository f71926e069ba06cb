#include <gtest/gtest.h>

#include "madgad/errors.hpp"
#include "madgad/formulas.hpp"
#include "madgad/mad.hpp"
#include "madgad/oracle.hpp"
#include "test_support.hpp"

using namespace madgad;
using madgad::testing::q;

TEST(GMaxMad, Examples) {
    EXPECT_EQ(g_max_mad(3), q(2));
    EXPECT_EQ(g_max_mad(5), q(5, 2));
    EXPECT_EQ(g_max_mad(4), q(2));
    EXPECT_EQ(g_max_mad(1), q(1));
    EXPECT_THROW(g_max_mad(0), DomainError);
}

TEST(GMaxMad, EqualsRepresentativeMadAndDensityOracle) {
    for (std::int64_t m = 1; m <= 500; ++m) {
        const auto [p, r] = clique_split(m);
        const Rational g = g_max_mad(m);
        if (m <= 120) EXPECT_EQ(mad_value(representative(static_cast<int>(p), static_cast<int>(r))), g) << m;
        EXPECT_EQ(g_oracle(m), g) << m;
        EXPECT_TRUE(gm_relaxation_bound(m) >= g) << m;
    }
}

TEST(Representative, Examples) {
    const Graph paw = representative(3, 1);
    EXPECT_EQ(paw.size(), 4);
    EXPECT_EQ(mad_value(paw), q(2));
    EXPECT_EQ(representative(3, 3), complete(4));
    EXPECT_EQ(representative(2, 0), complete(2));
    EXPECT_THROW(representative(3, 4), DomainError);
}

TEST(ExtremalFamily, Membership) {
    EXPECT_EQ(classify_family(5, 1).regime, FamilyRegime::SupsetOfKp);
    EXPECT_EQ(classify_family(3, 1).regime, FamilyRegime::Both);
    EXPECT_EQ(classify_family(2, 2).regime, FamilyRegime::KPPlus1);
    EXPECT_EQ(classify_family(4, 0).regime, FamilyRegime::Complete);
    EXPECT_EQ(classify_family(5, 3).regime, FamilyRegime::OrderPPlus1);

    EXPECT_TRUE(is_extremal_member(disjoint_union(complete(5), complete(2)), 5, 1));
    EXPECT_TRUE(is_extremal_member(representative(5, 1), 5, 1));
    // K_6 minus 05, 14, 23, 24: no vertex meets all four missing pairs, so no K_5.
    const Graph no_k5 = Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 5}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {1, 3}});
    EXPECT_EQ(no_k5.size(), 11);
    EXPECT_LT(clique_number(no_k5), 5);
    EXPECT_FALSE(is_extremal_member(no_k5, 5, 1));

    EXPECT_TRUE(is_extremal_member(representative(3, 1), 3, 1));
    EXPECT_TRUE(is_extremal_member(disjoint_union(complete(3), complete(2)), 3, 1));
    EXPECT_FALSE(is_extremal_member(complete(3), 2, 1));
    EXPECT_TRUE(is_extremal_member(complete(3), 2, 2));
    EXPECT_FALSE(is_extremal_member(path(4), 2, 2));
}

TEST(ParamTriple, Examples) {
    EXPECT_EQ(param_triple(2, 12), (ParamTriple{4, 0, 0}));
    EXPECT_EQ(param_triple(3, 10), (ParamTriple{3, 0, 1}));
    EXPECT_EQ(param_triple(7, 28), (ParamTriple{3, 2, 1}));
    EXPECT_THROW(param_triple(3, 2), DomainError);
}

TEST(ParamTriple, InvariantsHold) {
    for (std::int64_t k = 1; k <= 12; ++k)
        for (std::int64_t n = k; n <= 300; ++n) {
            const ParamTriple t = param_triple(k, n);
            EXPECT_EQ(k * choose2(t.p) + t.q * t.p + t.r, n);
            EXPECT_TRUE(0 <= t.q && t.q < k && 0 <= t.r && t.r < t.p);
        }
}

TEST(MList, Examples) {
    EXPECT_EQ(m_list(2, 12), q(6));
    EXPECT_EQ(m_list(7, 28), q(16));
    EXPECT_EQ(m_list(3, 10), q(6));
    EXPECT_EQ(m_list(2, 9), q(5));
    EXPECT_THROW(m_list(3, 2), DomainError);
    for (std::int64_t m = 1; m <= 50; ++m) EXPECT_EQ(m_list(1, m), g_max_mad(m));
}

TEST(MList, MatchesDynamicProgramming) {
    for (std::int64_t k = 2; k <= 8; ++k)
        for (std::int64_t n = k; n <= 60; ++n) EXPECT_EQ(m_list(k, n), m_list_dp(k, n)) << k << "," << n;
}

TEST(MList, MonotoneWithFreeEdgePlateau) {
    for (std::int64_t k = 2; k <= 8; ++k)
        for (std::int64_t n = k; n <= 120; ++n) {
            if (n > k) EXPECT_LE(m_list(k, n - 1), m_list(k, n));
            const ParamTriple t = param_triple(k, n);
            if (t.r > 0 && 2 * t.r <= t.p - 1)
                for (std::int64_t j = 1; j <= t.r && n - j >= k; ++j) EXPECT_EQ(m_list(k, n - j), m_list(k, n));
        }
}

TEST(MListExtremalMultiset, Examples) {
    const GraphList a = m_list_extremal_multiset(2, 9);
    const std::vector<Graph> ga = expand(a);
    ASSERT_EQ(ga.size(), 2u);
    EXPECT_EQ(ga[0], complete(4));
    EXPECT_EQ(ga[1], complete(3));

    const GraphList b = m_list_extremal_multiset(7, 28);
    EXPECT_EQ(list_size(b), 7);
    EXPECT_EQ(list_edges(b), 28);
    Rational sum;
    int k4 = 0, k3 = 0, paw = 0;
    for (const Graph& g : expand(b)) {
        sum += mad_value(g);
        if (g == complete(4)) ++k4;
        else if (g == complete(3)) ++k3;
        else if (g == representative(3, 1)) ++paw;
    }
    EXPECT_EQ(sum, q(16));
    EXPECT_EQ(k4, 2);
    EXPECT_EQ(k3, 4);
    EXPECT_EQ(paw, 1);

    const GraphList c = m_list_extremal_multiset(3, 9);
    for (const Graph& g : expand(c)) EXPECT_EQ(g, complete(3));
}

TEST(MListExtremalMultiset, SumsToMList) {
    for (std::int64_t k = 2; k <= 9; ++k)
        for (std::int64_t n = k; n <= 80; ++n) {
            const GraphList l = m_list_extremal_multiset(k, n);
            Rational sum;
            for (const Graph& g : expand(l)) sum += mad_value(g);
            EXPECT_EQ(sum, m_list(k, n));
            EXPECT_EQ(list_size(l), k);
            EXPECT_EQ(list_edges(l), n);
        }
}

TEST(MUpperBound, Examples) {
    EXPECT_EQ(m_upper_bound(7, 8), q(16));
    EXPECT_EQ(m_upper_bound(13, 13), q(39));
    EXPECT_EQ(m_upper_bound(3, 6), q(8));
    EXPECT_THROW(m_upper_bound(2, 2), DomainError);
    EXPECT_THROW(m_upper_bound(11, 5), DomainError);
}

TEST(MTwo, Examples) {
    EXPECT_EQ(m_two(5), q(24, 5));
    EXPECT_EQ(m_two(4), q(7, 2));
    EXPECT_EQ(m_two(3), q(7, 3));
    EXPECT_THROW(m_two(2), DomainError);
    for (std::int64_t n = 3; n <= 60; ++n) EXPECT_LE(m_two(n), m_upper_bound(2, n));
}

TEST(MUpperRange, Examples) {
    const UpperRange a = m_upper_range(9, 12);
    EXPECT_EQ(a.value, q(30));
    EXPECT_EQ(list_edges(a.multiset), 36);
    const UpperRange b = m_upper_range(7, 5);
    EXPECT_EQ(b.value, q(55, 3));
    EXPECT_EQ(list_edges(b.multiset), 21);
    EXPECT_EQ(list_size(b.multiset), 16);
    EXPECT_EQ(m_upper_range(6, 0).value, q(15));
    EXPECT_THROW(m_upper_range(5, 6), DomainError);
}

TEST(MUpperRange, MultisetMadSumMatchesValue) {
    for (std::int64_t n = 3; n <= 14; ++n)
        for (std::int64_t t = 0; 3 * t <= (n - 1) * (n - 1); ++t) {
            const UpperRange u = m_upper_range(n, t);
            Rational sum;
            for (const auto& e : u.multiset) sum += Rational(e.count) * mad_value(e.graph);
            EXPECT_EQ(sum, u.value) << n << "," << t;
            EXPECT_EQ(list_edges(u.multiset), choose2(n));
            EXPECT_EQ(list_size(u.multiset), choose2(n) - t);
        }
}

TEST(SqrtBounds, Examples) {
    const SqrtBounds b = sqrt_upper_bounds(4, 10);
    EXPECT_EQ(b.sqrt_k_times_n.compare(q(20)), 0);
    EXPECT_TRUE(b.sqrt_k_times_n > m_upper_bound(4, 10));
    const SqrtBounds c = sqrt_upper_bounds(13, 13);
    EXPECT_TRUE(c.sqrt_k_times_n > q(4687, 100));
    EXPECT_TRUE(c.sqrt_k_times_n < q(4688, 100));
    EXPECT_TRUE(c.sqrt_k_times_n > q(39));
    for (std::int64_t n = 3; n <= 30; ++n) EXPECT_TRUE(sqrt_upper_bounds(1, n).sqrt_k_times_n > q(n - 1));
}

TEST(SqrtBounds, ChainHolds) {
    for (std::int64_t n = 3; n <= 25; ++n)
        for (std::int64_t k = 2; k <= choose2(n); ++k) {
            const Rational upper = m_upper_bound(k, n);
            const SqrtBounds b = sqrt_upper_bounds(k, n);
            EXPECT_TRUE(b.convex >= upper) << k << "," << n;
            EXPECT_TRUE(b.two_k_n > upper);
            EXPECT_TRUE(b.sqrt_k_times_n > upper);
        }
}

TEST(GmRelaxation, Examples) {
    EXPECT_EQ(gm_relaxation_bound(3).compare(q(2)), 0);
    EXPECT_EQ(gm_relaxation_bound(1).compare(q(1)), 0);
    const Surd s = gm_relaxation_bound(5);
    EXPECT_TRUE(s >= q(5, 2));
    EXPECT_TRUE(s > q(27, 10) && s < q(271, 100));
    const Interval iv = s.enclose(40);
    EXPECT_TRUE(iv.hi - iv.lo <= q(1, 1000000000));
}

TEST(LowerBoundTable, Examples) {
    const LowerBoundTable a = lower_bound_table(7, 14);
    ASSERT_TRUE(a.best.has_value());
    EXPECT_GE(a.best->value, q(91, 3));
    bool blow = false;
    for (const auto& c : a.candidates) blow = blow || c.value == q(91, 3);
    EXPECT_TRUE(blow);

    const LowerBoundTable b = lower_bound_table(3, 6);
    ASSERT_TRUE(b.best.has_value());
    bool triangular = false;
    for (const auto& c : b.candidates) triangular = triangular || c.value == q(7);
    EXPECT_TRUE(triangular);
    EXPECT_GE(b.best->value, q(7));

    const LowerBoundTable c = lower_bound_table(13, 13);
    ASSERT_TRUE(c.best.has_value());
    EXPECT_EQ(c.best->value, q(39));
    EXPECT_TRUE(c.best->exact);
}

TEST(LowerBoundTable, BelowUpperBoundAndSqrtCap) {
    for (std::int64_t n = 3; n <= 30; ++n)
        for (std::int64_t k = 2; k <= std::min<std::int64_t>(choose2(n), 40); ++k) {
            const LowerBoundTable t = lower_bound_table(k, n);
            if (!t.best) continue;
            EXPECT_LE(t.best->value, m_upper_bound(k, n)) << k << "," << n << " " << t.best->source;
            EXPECT_TRUE(sqrt_upper_bounds(k, n).sqrt_k_times_n > t.best->value);
        }
}

TEST(ProportionalPlan, Examples) {
    const ProportionalPlan a = proportional_plan(q(3));
    EXPECT_EQ(a.p, 3);
    EXPECT_EQ(a.x, q(1));
    const ProportionalPlan b = proportional_plan(q(5));
    EXPECT_EQ(b.p, 3);
    EXPECT_EQ(b.x, q(1, 3));
    const ProportionalPlan c = proportional_plan(q(6));
    EXPECT_EQ(c.p, 4);
    EXPECT_EQ(c.x, q(1));
    EXPECT_THROW(proportional_plan(q(5, 2)), DomainError);
}

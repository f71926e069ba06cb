#include <gtest/gtest.h>

#include <map>

#include "madgad/decomp.hpp"
#include "madgad/designs.hpp"
#include "madgad/errors.hpp"
#include "madgad/formulas.hpp"
#include "madgad/oracle.hpp"
#include "test_support.hpp"

using namespace madgad;
using madgad::testing::q;

namespace {

Decomposition single_part(const Graph& g) {
    Decomposition d;
    d.n = g.order();
    d.parts = {g};
    return d;
}

/// Every decomposition must respect the list bound and the sqrt(k) n cap.
void expect_within_caps(const MadSumReport& r) {
    EXPECT_TRUE(r.within_upper_bound);
    EXPECT_TRUE(r.below_sqrt_cap);
    if (r.upper_bound) EXPECT_LE(r.total, *r.upper_bound);
    EXPECT_TRUE(r.sqrt_cap > r.total);
}

}  // namespace

TEST(Validate, Examples) {
    EXPECT_EQ(validate(construct_from_design(projective_plane(2))).total, q(14));
    Decomposition k3;
    k3.n = 3;
    k3.parts = {Graph(3, {{0, 1}, {1, 2}}), Graph(3, {{0, 2}})};
    EXPECT_EQ(validate(k3).total, q(7, 3));
    for (int n = 2; n <= 9; ++n) EXPECT_EQ(validate(single_part(complete(n))).total, q(n - 1));
}

TEST(Validate, RejectsOverlapAndGaps) {
    Decomposition d;
    d.n = 3;
    d.parts = {complete(3), Graph(3, {{0, 1}})};
    EXPECT_THROW(validate(d), ValidationError);
    d.parts = {Graph(3, {{0, 1}})};
    EXPECT_THROW(validate(d), ValidationError);
    d.mode = DecompositionMode::Packing;
    EXPECT_NO_THROW(validate(d));
}

TEST(ConstructK2, MatchesClosedForm) {
    EXPECT_EQ(validate(construct_k2(4)).total, q(7, 2));
    EXPECT_EQ(validate(construct_k2(5)).total, q(24, 5));
    EXPECT_EQ(validate(construct_k2(3)).total, q(7, 3));
    for (int n = 3; n <= 30; ++n) {
        const MadSumReport r = validate(construct_k2(n));
        EXPECT_EQ(r.total, m_two(n)) << n;
        expect_within_caps(r);
    }
}

TEST(ConstructSmallK, Examples) {
    const Decomposition a = construct_small_k(3, 6, SmallKVariant::B);
    EXPECT_EQ(validate(a).total, q(7));
    EXPECT_EQ(validate(construct_small_k(4, 9, SmallKVariant::A)).total, q(12));
    EXPECT_EQ(validate(construct_small_k(6, 6, SmallKVariant::A)).total, q(9));
    for (int k = 3; k <= 6; ++k)
        for (int n = 4; n <= 16; ++n)
            for (auto v : {SmallKVariant::A, SmallKVariant::B}) {
                Decomposition d;
                try {
                    d = construct_small_k(k, n, v);
                } catch (const DomainError&) {
                    continue;
                }
                EXPECT_EQ(d.k(), k);
                expect_within_caps(validate(d));
            }
}

TEST(ConstructK7K8, TotalAndCensus) {
    const Decomposition d = construct_k7_K8();
    const MadSumReport r = validate(d);
    EXPECT_EQ(r.total, q(16));
    EXPECT_EQ(d.n, 8);
    std::map<std::int64_t, int> by_size;
    std::int64_t edges = 0;
    for (const Graph& g : d.parts) {
        ++by_size[g.size()];
        edges += g.size();
    }
    EXPECT_EQ(edges, 28);
    EXPECT_EQ(by_size, (std::map<std::int64_t, int>{{3, 4}, {5, 2}, {6, 1}}));
    EXPECT_EQ(r.total, m_upper_bound(7, 8));
}

TEST(ConstructFromDesign, PlaneTotals) {
    const Decomposition pg = construct_from_design(projective_plane(3));
    EXPECT_EQ(pg.k(), 13);
    EXPECT_EQ(validate(pg).total, q(39));
    const Decomposition ag = construct_from_design(affine_plane(3));
    EXPECT_EQ(ag.k(), 12);
    EXPECT_EQ(validate(ag).total, q(24));
    const Decomposition tr = construct_from_design(truncate_plane(projective_plane(3), TruncateMode::DeletePoint));
    EXPECT_EQ(validate(tr).total, q(35));
    for (int which = 1; which <= 5; ++which)
        for (int qq : {2, 3, 4, 5}) {
            const PlaneCase c = plane_case(which, qq);
            if (c.n < 3 || c.k < 2 || c.k > choose2(c.n)) continue;
            EXPECT_LE(c.value, m_upper_bound(c.k, c.n));
        }
}

TEST(ConstructPsts, UpperRangeTotals) {
    EXPECT_EQ(validate(construct_psts_decomposition(9, 12)).total, q(30));
    EXPECT_EQ(validate(construct_psts_decomposition(7, 5)).total, q(55, 3));
    EXPECT_EQ(validate(construct_psts_decomposition(6, 0)).total, q(15));
    for (int n = 3; n <= 13; ++n)
        for (std::int64_t t = 0; 3 * t <= (n - 1) * (n - 1); ++t) {
            const MadSumReport r = validate(construct_psts_decomposition(n, t));
            EXPECT_EQ(r.total, m_upper_range(n, t).value) << n << "," << t;
            expect_within_caps(r);
        }
}

TEST(BlowUpDesign, Examples) {
    const MadSumReport fano14 = validate(blow_up_design_decomposition(projective_plane(2), 14));
    EXPECT_GE(fano14.total, q(91, 3));
    EXPECT_GE(fano14.total, blow_stein_bound(7, 3, 14));
    expect_within_caps(fano14);
    EXPECT_EQ(validate(blow_up_design_decomposition(projective_plane(2), 7)).total, q(14));
    const MadSumReport ag18 = validate(blow_up_design_decomposition(affine_plane(3), 18));
    EXPECT_GE(ag18.total, q(51));
    expect_within_caps(ag18);
}

TEST(PlanePlusR, Examples) {
    struct Case { int q, r, n, k; };
    for (const Case c : {Case{2, 1, 7, 8}, Case{2, 7, 14, 14}, Case{3, 1, 13, 14}}) {
        const Decomposition d = plane_plus_r_decomposition(c.q, c.r, c.n);
        EXPECT_EQ(d.k(), c.k);
        const MadSumReport r = validate(d);
        expect_within_caps(r);
        EXPECT_GE(r.total, plane_plus_r_bound(c.q, c.r, c.n));
    }
}

TEST(Triangular, MeetsBound) {
    for (int t = 2; t <= 5; ++t)
        for (int n = t; n <= 30; n += t) {
            const MadSumReport r = validate(triangular_decomposition(t, n));
            EXPECT_GE(r.total, triangular_bound(t, n)) << t << "," << n;
            expect_within_caps(r);
        }
}

TEST(ApexAndSplit, Deltas) {
    const Decomposition base = construct_k2(4);
    const Decomposition apex = apex_extend(base);
    EXPECT_EQ(apex.n, 5);
    EXPECT_GE(validate(apex).total, q(9, 2));

    EXPECT_GE(validate(split_edge(single_part(complete(4)))).total, q(10, 3));

    Decomposition paw;
    paw.n = 4;
    paw.parts = {representative(3, 1), Graph(4, {{1, 3}, {2, 3}})};
    EXPECT_EQ(validate(split_edge(paw)).total, validate(paw).total + q(1));

    for (int n = 3; n <= 12; ++n) {
        const Decomposition d = construct_k2(n);
        const Rational before = validate(d).total;
        EXPECT_GE(validate(apex_extend(d)).total - before, q(1));
        EXPECT_GE(validate(split_edge(d)).total - before, q(1, 3));
    }
}

TEST(RecursiveBlowup, Examples) {
    const Decomposition k2 = single_part(complete(2));
    const Decomposition six = recursive_blowup(k2, 3);
    EXPECT_EQ(six.n, 6);
    EXPECT_EQ(six.k(), 3);
    EXPECT_GE(validate(six).total, q(7));

    const Decomposition fano = construct_from_design(projective_plane(2));
    const Decomposition big = recursive_blowup(fano, 2);
    EXPECT_EQ(big.n, 14);
    EXPECT_EQ(big.k(), 14);
    const MadSumReport r = validate(big);
    EXPECT_GE(r.total, recursive_bound(q(14), 7, 2));
    EXPECT_GE(r.total, q(35));
    expect_within_caps(r);

    const Decomposition same = recursive_blowup(fano, 1);
    EXPECT_EQ(same.k(), 14);
    EXPECT_EQ(validate(same).total, q(14));
}

TEST(CanonicalizePacking, Examples) {
    const Decomposition a = canonicalize_packing(6, {{0, 1, 2}, {2, 3, 4, 5}});
    ASSERT_EQ(a.k(), 2);
    EXPECT_EQ(a.parts[0], clique_on(6, {0, 1, 2}));
    EXPECT_EQ(a.parts[1], clique_on(6, {2, 3, 4, 5}));

    const Decomposition b = canonicalize_packing(6, {{0, 1, 2, 3}, {2, 3, 4, 5}});
    EXPECT_EQ(b.parts[1], remove_edge(clique_on(6, {2, 3, 4, 5}), {2, 3}));
    EXPECT_EQ(validate(b).total, q(3) + q(5, 2));
}

TEST(CanonicalizePacking, NeverBelowInducingDecomposition) {
    // Colour K_n at random, take each part's witness, rebuild by First-Fit.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const int k = 2 + static_cast<int>(rng() % 3);
        std::vector<std::vector<Edge>> colour(k);
        for (const Edge& e : complete(n).edges()) colour[rng() % k].push_back(e);
        Decomposition d;
        d.n = n;
        std::vector<VertexSet> witnesses;
        for (const auto& c : colour) d.parts.emplace_back(n, c);
        const MadSumReport r = validate(d);
        for (const auto& c : r.parts) witnesses.push_back(c.witness);
        Decomposition packed = canonicalize_packing(n, witnesses);
        packed.mode = DecompositionMode::Packing;
        EXPECT_GE(validate(packed).total, r.total);
    }
}

TEST(C4FreeIncidence, Examples) {
    const Graph fano = packing_to_c4free_bipartite(construct_from_design(projective_plane(2)));
    EXPECT_EQ(fano.order(), 14);
    EXPECT_EQ(fano.size(), 21);
    EXPECT_FALSE(has_four_cycle_bipartite(fano, 7));
    const Graph pg3 = packing_to_c4free_bipartite(construct_from_design(projective_plane(3)));
    EXPECT_EQ(pg3.order(), 26);
    EXPECT_EQ(pg3.size(), 52);
    const Graph star = packing_to_c4free_bipartite(single_part(complete(5)));
    EXPECT_EQ(star.size(), 5);
    EXPECT_FALSE(has_four_cycle_bipartite(star, 1));
    EXPECT_TRUE(has_four_cycle_bipartite(complete_multipartite({2, 2}), 2));
}

TEST(Decomposition, JsonRoundTrip) {
    const Decomposition d = construct_k7_K8();
    const Decomposition back = decomposition_from_json(decomposition_to_json(d));
    EXPECT_EQ(back.n, d.n);
    EXPECT_EQ(back.parts, d.parts);
    EXPECT_EQ(validate(back).total, q(16));
}

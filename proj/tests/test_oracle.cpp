#include <gtest/gtest.h>

#include <random>

#include "madgad/decomp.hpp"
#include "madgad/designs.hpp"
#include "madgad/errors.hpp"
#include "madgad/formulas.hpp"
#include "madgad/mad.hpp"
#include "madgad/oracle.hpp"
#include "test_support.hpp"

using namespace madgad;
using madgad::testing::q;

namespace {

/// Max Mad-sum over all k-colourings of E(K_n), colour of the first edge fixed.
Rational best_colouring(int n, int k) {
    const std::vector<Edge> all = complete(n).edges();
    const std::size_t m = all.size();
    std::vector<int> colour(m, 0);
    Rational best;
    while (true) {
        std::vector<std::vector<Edge>> parts(k);
        for (std::size_t i = 0; i < m; ++i) parts[colour[i]].push_back(all[i]);
        Rational sum;
        for (const auto& p : parts) sum += mad_bruteforce(Graph(n, p)).value;
        best = max(best, sum);
        std::size_t i = 1;
        while (i < m && ++colour[i] == k) colour[i++] = 0;
        if (i >= m) break;
    }
    return best;
}

}  // namespace

TEST(MadBruteforce, Examples) {
    EXPECT_EQ(mad_bruteforce(remove_edge(complete(4), {0, 1})).value, q(5, 2));
    EXPECT_EQ(mad_bruteforce(madgad::testing::petersen()).value, q(3));
    EXPECT_EQ(mad_bruteforce(representative(5, 2)).value, q(4));
    EXPECT_THROW(mad_bruteforce(empty_graph(21)), BudgetExceeded);
}

TEST(MListDp, Examples) {
    EXPECT_EQ(m_list_dp(2, 9), q(5));
    EXPECT_EQ(m_list_dp(7, 28), q(16));
    for (std::int64_t k = 1; k <= 10; ++k) EXPECT_EQ(m_list_dp(k, k), q(k));
    EXPECT_THROW(m_list_dp(11, 20), BudgetExceeded);
}

TEST(SubsetSearch, KTwoMatchesClosedForm) {
    EXPECT_EQ(m_kn_search(2, 4).value, q(7, 2));
    EXPECT_EQ(m_kn_search(2, 5).value, q(24, 5));
    for (int n = 3; n <= 7; ++n) EXPECT_EQ(m_kn_search(2, n).value, m_two(n)) << n;
    for (int n = 3; n <= 5; ++n) EXPECT_EQ(m_two_by_colourings(n), m_kn_search(2, n).value) << n;
}

TEST(SubsetSearch, AgreesWithFullColouringEnumeration) {
    EXPECT_EQ(m_kn_search(3, 4).value, best_colouring(4, 3));
    EXPECT_EQ(m_kn_search(3, 5).value, best_colouring(5, 3));
    EXPECT_EQ(m_kn_search(4, 5).value, best_colouring(5, 4));
}

TEST(SubsetSearch, ThreeSixIsBelowUpperBound) {
    const SubsetSearchResult r = m_kn_search(3, 6);
    EXPECT_GE(r.value, q(15, 2));
    EXPECT_LE(r.value, m_upper_bound(3, 6));
    EXPECT_EQ(r.value, q(15, 2));
    Decomposition d = canonicalize_packing(6, r.subsets);
    d.mode = DecompositionMode::Packing;
    EXPECT_EQ(validate(d).total, r.value);
}

TEST(SubsetSearch, BoundedByListFormulaAndMonotone) {
    for (int n = 3; n <= 7; ++n)
        for (int k = 2; k <= 4 && k <= choose2(n); ++k) {
            const Rational v = m_kn_search(k, n).value;
            EXPECT_LE(v, m_upper_bound(k, n)) << k << "," << n;
            const auto lower = lower_bound_table(k, n);
            if (lower.best) EXPECT_GE(v, lower.best->value) << k << "," << n;
            if (n + 1 <= 7) EXPECT_GE(m_kn_search(k, n + 1).value, v + q(1));
            if (k + 1 <= 4 && k < choose2(n)) EXPECT_GE(m_kn_search(k + 1, n).value, v + q(1, 3));
        }
}

TEST(SubsetSearch, RespectsBudget) {
    EXPECT_THROW(m_kn_search(3, 8), BudgetExceeded);
    EXPECT_THROW(m_kn_search(5, 6), BudgetExceeded);
}

TEST(Invariants, Examples) {
    const SmallInvariants k5 = invariants_small(complete(5));
    EXPECT_EQ(k5.omega, 5);
    EXPECT_EQ(k5.chi, 5);
    EXPECT_EQ(k5.degeneracy, 4);
    EXPECT_EQ(k5.col, 5);
    EXPECT_EQ(k5.kappa_plus, 4);
    EXPECT_EQ(k5.lambda_plus, 4);

    const SmallInvariants paw = invariants_small(representative(3, 1));
    EXPECT_EQ(paw.omega, 3);
    EXPECT_EQ(paw.degeneracy, 2);
    EXPECT_EQ(paw.lambda_plus, 2);

    const SmallInvariants pet = invariants_small(madgad::testing::petersen());
    EXPECT_EQ(pet.omega, 2);
    EXPECT_EQ(pet.chi, 3);
    EXPECT_EQ(pet.kappa_plus, 3);
}

TEST(Invariants, ColouringChainOnRandomGraphs) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = madgad::testing::random_graph(n, 0.5, rng);
        const SmallInvariants inv = invariants_small(g);
        EXPECT_GE(mad_value(g) + q(1), q(inv.col));
        EXPECT_GE(inv.col, inv.chi);
        EXPECT_GE(inv.chi, inv.omega);
        EXPECT_EQ(inv.col, inv.degeneracy + 1);
        EXPECT_LE(inv.kappa_plus, inv.lambda_plus);
        EXPECT_LE(inv.lambda_plus, inv.degeneracy);
    }
}

TEST(Connectivity, Basics) {
    EXPECT_EQ(vertex_connectivity(cycle(6)), 2);
    EXPECT_EQ(edge_connectivity(cycle(6)), 2);
    EXPECT_EQ(vertex_connectivity(disjoint_union(complete(3), complete(3))), 0);
    const Graph bowtie = Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    EXPECT_EQ(vertex_connectivity(bowtie), 1);
    EXPECT_EQ(edge_connectivity(bowtie), 2);
}

TEST(ParameterSums, Examples) {
    const ParameterSums pg = check_parameter_sums(construct_from_design(projective_plane(3)));
    EXPECT_TRUE(pg.passed);
    EXPECT_EQ(pg.sum_omega, 52);
    EXPECT_EQ(pg.floor_total, 39);
    const ParameterSums fano = check_parameter_sums(construct_from_design(projective_plane(2)));
    EXPECT_TRUE(fano.passed);
    EXPECT_EQ(fano.sum_degeneracy, 14);
    const ParameterSums sts9 = check_parameter_sums(construct_from_design(steiner_triple_system(9)));
    EXPECT_TRUE(sts9.passed);
    EXPECT_EQ(sts9.sum_omega, 36);
    EXPECT_EQ(sts9.floor_total, 24);
    EXPECT_THROW(check_parameter_sums(construct_k2(6)), DomainError);
}

TEST(ConnectedGraphs, CountsByOrderAndSize) {
    const std::vector<std::size_t> by_order = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(connected_graphs(n).size(), by_order[n - 1]) << n;
    const std::vector<Graph> by_size = connected_graphs_by_size(9);
    const std::vector<int> expected = {1, 1, 3, 5, 12, 30, 79, 227, 710};
    std::vector<int> seen(10, 0);
    for (const Graph& g : by_size) ++seen[g.size()];
    for (int m = 1; m <= 9; ++m) EXPECT_EQ(seen[m], expected[m - 1]) << m;
}

TEST(ConnectedGraphs, OracleAgreesWithMadEverywhere) {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) {
            ASSERT_TRUE(is_connected(g));
            const MadCertificate a = mad(g), b = mad_bruteforce(g);
            ASSERT_EQ(a.value, b.value);
            ASSERT_EQ(a.witness, b.witness);
        }
}

TEST(Isomorphism, Basics) {
    EXPECT_TRUE(isomorphic(cycle(5), relabel(cycle(5), {2, 4, 1, 3, 0})));
    EXPECT_FALSE(isomorphic(cycle(6), disjoint_union(complete(3), complete(3))));
    EXPECT_FALSE(isomorphic(path(4), complete_multipartite({1, 3})));
}

#pragma once

#include <cstdint>
#include <vector>

#include "madgad/decomp.hpp"
#include "madgad/graph.hpp"
#include "madgad/io.hpp"
#include "madgad/mad.hpp"
#include "madgad/rational.hpp"

namespace madgad {

/// Limits beyond which oracles throw BudgetExceeded instead of running.
struct OracleBudget {
    int max_vertices = 20;
    int max_k = 10;
    std::int64_t max_edges = 200;
    double time_limit_seconds = 0;  // 0 disables the clock
};

/// Literal enumeration of all non-empty vertex subsets; n <= 20. Same
/// canonical witness as mad().
MadCertificate mad_bruteforce(const Graph& g, const OracleBudget& budget = {});

/// Max of 2 min(m, C(s,2)) / s over s: the best density m edges can reach.
/// Computed without the clique split used by g_max_mad.
Rational g_oracle(std::int64_t m);

/// Max of g(m_1) + ... + g(m_k) over m_i >= 1 summing to N, by dynamic
/// programming. Defaults: k <= 10, N <= 200.
Rational m_list_dp(std::int64_t k, std::int64_t n_edges, const OracleBudget& budget = {});

struct SubsetSearchResult {
    Rational value;
    /// Size-sorted tuple attaining the value; part j receives the pairs inside
    /// subsets[j] not taken by earlier parts.
    std::vector<VertexSet> subsets;
    std::int64_t tuples_evaluated = 0;
};

/// Exact M(k, n) by search over covering subset tuples with First-Fit edge
/// assignment. The first two subsets are fixed to orbit representatives
/// under vertex permutations; a g-based bound cuts the rest. Defaults:
/// n <= 7, k <= 4.
SubsetSearchResult m_kn_search(int k, int n, const OracleBudget& budget = {7, 4, 200, 0});

/// Max of Mad(G) + Mad(complement) over all 2-colourings of E(K_n); n <= 6.
Rational m_two_by_colourings(int n);

struct SmallInvariants {
    int omega = 0;
    int chi = 0;
    int degeneracy = 0;
    int col = 0;
    int kappa_plus = 0;
    int lambda_plus = 0;
};

/// Invariants of the support of g. chi, kappa_plus and lambda_plus need a
/// support of at most budget.max_vertices (default 12) vertices.
SmallInvariants invariants_small(const Graph& g, const OracleBudget& budget = {12, 10, 100000, 0});

int clique_number(const Graph& g);
int chromatic_number(const Graph& g);
int degeneracy(const Graph& g);
/// Vertex and edge connectivity of g itself (0 when disconnected or n <= 1).
int vertex_connectivity(const Graph& g);
int edge_connectivity(const Graph& g);

struct ParameterSums {
    bool passed = false;
    std::int64_t k = 0;
    Rational total;
    std::int64_t floor_total = 0;
    std::int64_t sum_omega = 0, sum_chi = 0, sum_col = 0;
    std::int64_t sum_degeneracy = 0, sum_kappa = 0, sum_lambda = 0;
};

/// Sum-level check that omega, chi and col each sum to floor(total) + k and
/// degeneracy, kappa+ and lambda+ each sum to floor(total). Parts must be
/// K_p, K_{p+1} and at most one extremal member with clique number p;
/// anything else throws DomainError.
ParameterSums check_parameter_sums(const Decomposition& d);

/// Isomorphism classes of connected graphs on exactly n vertices; n <= 7.
std::vector<Graph> connected_graphs(int n);
/// Isomorphism classes of connected graphs with 1..max_edges edges.
std::vector<Graph> connected_graphs_by_size(int max_edges);
bool isomorphic(const Graph& a, const Graph& b);

Json certificate_to_json(const MadCertificate& c);
Json invariants_to_json(const SmallInvariants& inv);

}  // namespace madgad

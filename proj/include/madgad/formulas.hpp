#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "madgad/graph.hpp"
#include "madgad/rational.hpp"
#include "madgad/surd.hpp"

namespace madgad {

/// N = k*C(p,2) + q*p + r with 0 <= q < k and 0 <= r < p.
struct ParamTriple {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t r = 0;
    friend bool operator==(const ParamTriple&, const ParamTriple&) = default;
};

/// Largest p with C(p,2) <= m, and r = m - C(p,2) (so 0 <= r < p).
/// m = 0 gives (1, 0).
std::pair<std::int64_t, std::int64_t> clique_split(std::int64_t m);

/// Max Mad over graphs with m >= 1 edges: max{p-1, 2m/(p+1)}.
Rational g_max_mad(std::int64_t m);

/// K_p for r = 0, otherwise K_p plus a vertex joined to vertices 0..r-1.
Graph representative(int p, int r);

enum class FamilyRegime { Complete, SupsetOfKp, Both, OrderPPlus1, KPPlus1 };

struct ExtremalFamilySpec {
    int p = 0;
    int r = 0;
    FamilyRegime regime = FamilyRegime::Complete;
};

const char* regime_name(FamilyRegime regime);
ExtremalFamilySpec classify_family(int p, int r);
/// Whether g (isolated vertices ignored) is an extremal graph with C(p,2)+r
/// edges, i.e. has C(p,2)+r edges and Mad equal to g(C(p,2)+r) by shape.
bool is_extremal_member(const Graph& g, int p, int r);

ParamTriple param_triple(std::int64_t k, std::int64_t n_edges);

/// Max of sum Mad(G_i) over lists of k graphs with N edges in total.
/// k = 1 gives g(N). Requires N >= k >= 1.
Rational m_list(std::int64_t k, std::int64_t n_edges);

/// Multiset entry: count copies of graph.
struct ListEntry {
    std::int64_t count = 0;
    Graph graph;
    std::string label;
};
using GraphList = std::vector<ListEntry>;

std::vector<Graph> expand(const GraphList& list);
std::int64_t list_size(const GraphList& list);
/// Sum of count * e(graph).
std::int64_t list_edges(const GraphList& list);

GraphList m_list_extremal_multiset(std::int64_t k, std::int64_t n_edges);

/// m_list(k, C(n,2)); requires n >= 3 and 2 <= k <= C(n,2).
Rational m_upper_bound(std::int64_t k, std::int64_t n);

/// Exact optimum for two parts: (5n^2-6n+1)/4n (n odd), (5n^2-6n)/4n (n even).
Rational m_two(std::int64_t n);

struct UpperRange {
    Rational value;
    GraphList multiset;
};
/// k = C(n,2) - t parts with 0 <= 3t <= (n-1)^2: only triangles, edges and
/// at most one P_3 are needed.
UpperRange m_upper_range(std::int64_t n, std::int64_t t);

struct SqrtBounds {
    Surd convex;       // (sqrt(k^2 + 4kn^2 - 4kn) - k) / 2
    Surd two_k_n;      // sqrt(2kN) with N = C(n,2)
    Surd sqrt_k_times_n;  // sqrt(k) * n
};
SqrtBounds sqrt_upper_bounds(std::int64_t k, std::int64_t n);
/// sqrt(2kN) for a list with N edges.
Surd list_sqrt_cap(std::int64_t k, std::int64_t n_edges);

/// y - 1 where y(y-1)/2 = m; always >= g(m).
Surd gm_relaxation_bound(std::int64_t m);

/// Finite-geometry families: which = 1..5 selects
///   (1) n = k = q^2+q+1            (2) n = q^2,     k = q^2+q
///   (3) n = q^2+q,   k = q^2+q+1   (4) n = q^2-1,   k = q^2+q
///   (5) n = q^2-q,   k = q^2+q-1
/// and returns the exact optimum for that (k, n).
struct PlaneCase {
    std::int64_t k = 0;
    std::int64_t n = 0;
    Rational value;
};
PlaneCase plane_case(int which, std::int64_t q);

/// (v/r)(n-1): blown-up S(2,r,v) designs.
Rational blow_stein_bound(std::int64_t v, std::int64_t r, std::int64_t n);
/// (t+1)n/2 - t for k = C(t+1,2).
Rational triangular_bound(std::int64_t t, std::int64_t n);
/// (q + 1/(q+1))n + rqn/((q+1)(q^2+q+1)) - (q+r) for k = q^2+q+1+r.
Rational plane_plus_r_bound(std::int64_t q, std::int64_t r, std::int64_t n);
/// t(M + b) - b: lower bound for M(a+b, tb) from a value M for M(a,b).
Rational recursive_bound(const Rational& m_ab, std::int64_t b, std::int64_t t);

/// One entry of the lower-bound catalog for M(k,n).
struct LowerBound {
    Rational value;
    std::string source;
    bool exact = false;  // the catalog entry determines M(k,n), not just bounds it
};

struct LowerBoundTable {
    std::optional<LowerBound> best;
    std::vector<LowerBound> candidates;  // every applicable entry, best first
};

/// All catalog entries applicable to (k, n); empty when nothing applies.
LowerBoundTable lower_bound_table(std::int64_t k, std::int64_t n);

struct ProportionalPlan {
    std::int64_t p = 0;
    Rational x;  // fraction of K_p members; 1 means all K_p
    std::optional<std::int64_t> n;
    bool feasible = false;  // counts integral for the supplied n
    std::int64_t k = 0;
    std::int64_t count_kp = 0;
    std::int64_t count_kp1 = 0;
    std::string reason;
};

/// Mixture of K_p and K_{p+1} with C(n,2)/ratio members in total. Requires
/// ratio >= 3.
ProportionalPlan proportional_plan(const Rational& ratio, std::optional<std::int64_t> n = {});

}  // namespace madgad

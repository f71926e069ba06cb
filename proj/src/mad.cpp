#include "madgad/mad.hpp"

#include <optional>

#include "madgad/errors.hpp"
#include "madgad/maxflow.hpp"

namespace madgad {
namespace {

// For lambda = a/b the cut network below has, for source side S,
//   cut(S) = b*m*n + a*|S| - 2*b*e(S),
// so max_S (2b e(S) - a|S|) = b*m*n - mincut. The residual-reachable set is
// the inclusion-minimal maximizer (among those containing `forced`).
struct CutResult {
    std::int64_t excess;  // max over admissible S of 2b e(S) - a|S|
    VertexSet side;
};

CutResult densest_cut(const Graph& g, std::int64_t a, std::int64_t b, std::optional<int> forced) {
    const int n = g.order();
    const std::int64_t m = g.size();
    const int source = n;
    const int sink = n + 1;
    MaxFlow flow(n + 2);
    for (int v = 0; v < n; ++v) {
        const std::int64_t to_source = (forced && *forced == v) ? MaxFlow::kInfinite : m * b;
        flow.add_edge(source, v, to_source);
        flow.add_edge(v, sink, m * b + a - static_cast<std::int64_t>(g.degree(v)) * b);
    }
    for (const auto& [u, v] : g.edges()) flow.add_edge(u, v, b, b);

    const std::int64_t cut = flow.solve(source, sink);
    const auto seen = flow.source_side(source);
    CutResult out;
    for (int v = 0; v < n; ++v)
        if (seen[v]) out.side.push_back(v);
    // A forced vertex always lies in S, so its infinite arc is never cut and
    // the identity above still holds.
    out.excess = b * m * n - cut;
    return out;
}

std::int64_t to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw DomainError("value exceeds 64-bit range");
    return z.get_si();
}

}  // namespace

Rational density(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw DomainError("density of an empty vertex set");
    return Rational(2 * induced_edge_count(g, s), static_cast<std::int64_t>(s.size()));
}

Rational mad_value(const Graph& g) {
    if (g.size() == 0) return Rational(0);
    VertexSet all(g.order());
    for (int v = 0; v < g.order(); ++v) all[v] = v;
    Rational lambda = density(g, all);
    // Dinkelbach iteration: each round strictly increases lambda and the
    // maximizer returned is strictly smaller, so at most n rounds.
    for (;;) {
        const auto res = densest_cut(g, to_int64(lambda.numerator()), to_int64(lambda.denominator()),
                                     std::nullopt);
        if (res.excess <= 0) return lambda;
        lambda = density(g, res.side);
    }
}

MadCertificate mad(const Graph& g) {
    if (g.order() == 0) return {Rational(0), {}};
    if (g.size() == 0) return {Rational(0), {0}};
    const Rational best = mad_value(g);
    const std::int64_t a = to_int64(best.numerator());
    const std::int64_t b = to_int64(best.denominator());

    // Every minimum-cardinality maximizer X equals the minimal maximizer
    // containing any of its vertices, so scanning those sets is exhaustive.
    std::optional<VertexSet> chosen;
    for (int v = 0; v < g.order(); ++v) {
        if (Rational(g.degree(v)) < best) continue;
        const auto res = densest_cut(g, a, b, v);
        if (res.excess != 0) continue;
        const VertexSet& s = res.side;
        if (!chosen || s.size() < chosen->size() || (s.size() == chosen->size() && s < *chosen))
            chosen = s;
    }
    if (!chosen) throw std::logic_error("mad: no witness found");
    return {best, *chosen};
}

bool is_free_edge(const Graph& g, Edge e) {
    const Graph without = remove_edge(g, e);
    return mad_value(without) == mad_value(g);
}

}  // namespace madgad

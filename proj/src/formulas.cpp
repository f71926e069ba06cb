#include "madgad/formulas.hpp"

#include <algorithm>

#include "madgad/errors.hpp"

namespace madgad {

std::pair<std::int64_t, std::int64_t> clique_split(std::int64_t m) {
    if (m < 0) throw DomainError("negative edge count");
    std::int64_t p = 1;
    while (choose2(p + 1) <= m) ++p;
    return {p, m - choose2(p)};
}

Rational g_max_mad(std::int64_t m) {
    if (m <= 0) throw DomainError("g(m) requires m >= 1");
    const auto [p, r] = clique_split(m);
    if (r == 0) return Rational(p - 1);
    return max(Rational(p - 1), Rational(2 * m, p + 1));
}

Graph representative(int p, int r) {
    if (p < 1 || r < 0 || r > p) throw DomainError("representative requires 0 <= r <= p, p >= 1");
    if (r == 0) return complete(p);
    std::vector<Edge> edges = complete(p + 1).edges();
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [&](const Edge& e) { return e.second == p && e.first >= r; }),
                edges.end());
    return Graph(p + 1, std::move(edges));
}

const char* regime_name(FamilyRegime regime) {
    switch (regime) {
        case FamilyRegime::Complete: return "COMPLETE";
        case FamilyRegime::SupsetOfKp: return "SUPSET_OF_Kp";
        case FamilyRegime::Both: return "BOTH";
        case FamilyRegime::OrderPPlus1: return "ORDER_P_PLUS_1";
        case FamilyRegime::KPPlus1: return "K_P_PLUS_1";
    }
    return "?";
}

ExtremalFamilySpec classify_family(int p, int r) {
    if (p < 2 || r < 0 || r > p) throw DomainError("family requires p >= 2 and 0 <= r <= p");
    FamilyRegime regime;
    if (r == 0) regime = FamilyRegime::Complete;
    else if (r == p) regime = FamilyRegime::KPPlus1;
    else if (2 * r < p - 1) regime = FamilyRegime::SupsetOfKp;
    else if (2 * r == p - 1) regime = FamilyRegime::Both;
    else regime = FamilyRegime::OrderPPlus1;
    return {p, r, regime};
}

namespace {

bool contains_clique_of_order(const Graph& g, int p) {
    // Small-order search: extend cliques in increasing vertex order.
    std::vector<int> current;
    auto extend = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(current.size()) == p) return true;
        for (int v = start; v < g.order(); ++v) {
            if (g.degree(v) < p - 1) continue;
            bool ok = true;
            for (int u : current) ok = ok && g.has_edge(u, v);
            if (!ok) continue;
            current.push_back(v);
            if (self(self, v + 1)) return true;
            current.pop_back();
        }
        return false;
    };
    return extend(extend, 0);
}

}  // namespace

bool is_extremal_member(const Graph& g, int p, int r) {
    const ExtremalFamilySpec family = classify_family(p, r);
    if (g.size() != choose2(p) + r) return false;
    const Graph s = support(g);
    switch (family.regime) {
        case FamilyRegime::Complete: return s.order() == p;
        case FamilyRegime::KPPlus1: return s.order() == p + 1;
        case FamilyRegime::SupsetOfKp: return contains_clique_of_order(s, p);
        case FamilyRegime::Both: return s.order() == p + 1 || contains_clique_of_order(s, p);
        case FamilyRegime::OrderPPlus1: return s.order() == p + 1;
    }
    return false;
}

ParamTriple param_triple(std::int64_t k, std::int64_t n_edges) {
    if (k < 1) throw DomainError("param_triple requires k >= 1");
    if (n_edges < k) throw DomainError("param_triple requires N >= k");
    std::int64_t p = 1;
    while (k * choose2(p + 1) <= n_edges) ++p;
    const std::int64_t rest = n_edges - k * choose2(p);
    return {p, rest / p, rest % p};
}

Rational m_list(std::int64_t k, std::int64_t n_edges) {
    if (k < 1 || n_edges < k) throw DomainError("m_list requires N >= k >= 1");
    if (k == 1) return g_max_mad(n_edges);
    const auto [p, q, r] = param_triple(k, n_edges);
    const Rational low(k * p - k + q);
    const Rational high = Rational(k * p - k + q + 1) - Rational(2 * (p - r), p + 1);
    if (2 * r == p - 1 && low != high) throw std::logic_error("m_list branches disagree at the boundary");
    return 2 * r <= p - 1 ? low : high;
}

std::vector<Graph> expand(const GraphList& list) {
    std::vector<Graph> out;
    for (const auto& e : list) out.insert(out.end(), static_cast<std::size_t>(e.count), e.graph);
    return out;
}

std::int64_t list_size(const GraphList& list) {
    std::int64_t total = 0;
    for (const auto& e : list) total += e.count;
    return total;
}

std::int64_t list_edges(const GraphList& list) {
    std::int64_t total = 0;
    for (const auto& e : list) total += e.count * e.graph.size();
    return total;
}

namespace {

std::string clique_label(std::int64_t p) { return "K_" + std::to_string(p); }

}  // namespace

GraphList m_list_extremal_multiset(std::int64_t k, std::int64_t n_edges) {
    if (k < 1 || n_edges < k) throw DomainError("multiset requires N >= k >= 1");
    const auto [p, q, r] = param_triple(k, n_edges);
    GraphList out;
    const auto add = [&](std::int64_t count, Graph g, std::string label) {
        if (count > 0) out.push_back({count, std::move(g), std::move(label)});
    };
    add(q, complete(static_cast<int>(p + 1)), clique_label(p + 1));
    if (r == 0) {
        add(k - q, complete(static_cast<int>(p)), clique_label(p));
    } else {
        add(k - q - 1, complete(static_cast<int>(p)), clique_label(p));
        add(1, representative(static_cast<int>(p), static_cast<int>(r)),
            "G_" + std::to_string(p) + "," + std::to_string(r));
    }
    return out;
}

Rational m_upper_bound(std::int64_t k, std::int64_t n) {
    if (n < 3) throw DomainError("m_upper_bound requires n >= 3");
    if (k < 2 || k > choose2(n)) throw DomainError("m_upper_bound requires 2 <= k <= C(n,2)");
    return m_list(k, choose2(n));
}

Rational m_two(std::int64_t n) {
    if (n < 3) throw DomainError("m_two requires n >= 3");
    if (n % 2 == 1) return Rational(5 * n * n - 6 * n + 1, 4 * n);
    return Rational(5 * n * n - 6 * n, 4 * n);
}

UpperRange m_upper_range(std::int64_t n, std::int64_t t) {
    if (n < 2) throw DomainError("m_upper_range requires n >= 2");
    if (t < 0 || 3 * t > (n - 1) * (n - 1)) throw DomainError("m_upper_range requires 0 <= 3t <= (n-1)^2");
    const std::int64_t total = choose2(n);
    UpperRange out;
    const auto add = [&](std::int64_t count, Graph g, std::string label) {
        if (count > 0) out.multiset.push_back({count, std::move(g), std::move(label)});
    };
    if (t % 2 == 0) {
        out.value = Rational(total) - Rational(t, 2);
        add(t / 2, complete(3), "K_3");
        add(total - 3 * t / 2, complete(2), "K_2");
    } else {
        out.value = Rational(total) - Rational((t + 1) / 2) + Rational(1, 3);
        add((t - 1) / 2, complete(3), "K_3");
        add(total - 2 - 3 * (t - 1) / 2, complete(2), "K_2");
        add(1, path(3), "P_3");
    }
    return out;
}

SqrtBounds sqrt_upper_bounds(std::int64_t k, std::int64_t n) {
    if (k < 1 || n < 1) throw DomainError("sqrt bounds require k, n >= 1");
    const mpz_class kk(static_cast<long>(k));
    const mpz_class nn(static_cast<long>(n));
    return {
        Surd(Rational(-k, 2), Rational(1, 2), kk * kk + 4 * kk * nn * nn - 4 * kk * nn),
        list_sqrt_cap(k, choose2(n)),
        Surd(Rational(0), Rational(n), kk),
    };
}

Surd list_sqrt_cap(std::int64_t k, std::int64_t n_edges) {
    return Surd::sqrt_of(mpz_class(static_cast<long>(2 * k)) * mpz_class(static_cast<long>(n_edges)));
}

Surd gm_relaxation_bound(std::int64_t m) {
    if (m < 1) throw DomainError("relaxation bound requires m >= 1");
    return Surd(Rational(-1, 2), Rational(1, 2), mpz_class(static_cast<long>(8 * m + 1)));
}

ProportionalPlan proportional_plan(const Rational& ratio, std::optional<std::int64_t> n) {
    if (ratio < Rational(3)) throw DomainError("proportional plan requires ratio >= 3");
    ProportionalPlan plan;
    plan.p = 2;
    while (Rational(choose2(plan.p + 1)) <= ratio) ++plan.p;
    plan.x = Rational(plan.p + 1, 2) - ratio / Rational(plan.p);
    plan.n = n;
    if (!n) {
        plan.reason = "no order supplied";
        return plan;
    }
    const Rational members = Rational(choose2(*n)) / ratio;
    if (!members.is_integer()) {
        plan.reason = "C(n,2)/ratio is not an integer";
        return plan;
    }
    const Rational kp = plan.x * members;
    if (!kp.is_integer()) {
        plan.reason = "x * k is not an integer";
        return plan;
    }
    plan.k = members.numerator().get_si();
    plan.count_kp = kp.numerator().get_si();
    plan.count_kp1 = plan.k - plan.count_kp;
    plan.feasible = true;
    return plan;
}

}  // namespace madgad

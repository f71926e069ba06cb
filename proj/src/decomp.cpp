#include "madgad/decomp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "madgad/errors.hpp"
#include "madgad/formulas.hpp"

namespace madgad {

const char* mode_name(DecompositionMode mode) {
    return mode == DecompositionMode::Packing ? "PACKING" : "DECOMPOSITION";
}

namespace {

std::string pair_list(const std::vector<Edge>& pairs) {
    std::ostringstream out;
    const std::size_t shown = std::min<std::size_t>(pairs.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) out << (i ? ", " : "") << pairs[i].first << "-" << pairs[i].second;
    if (pairs.size() > shown) out << ", ... (" << pairs.size() << " total)";
    return out.str();
}

VertexSet range(int begin, int end) {
    VertexSet s(std::max(0, end - begin));
    std::iota(s.begin(), s.end(), begin);
    return s;
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Assigns to part j every pair inside X_j not taken by an earlier part.
std::vector<Graph> first_fit(int n, const std::vector<VertexSet>& subsets) {
    std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
    std::vector<Graph> parts;
    for (const auto& x : subsets) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j) {
                const Edge e = make_edge(x[i], x[j]);
                char& u = used[static_cast<std::size_t>(e.first) * n + e.second];
                if (!u) {
                    u = 1;
                    edges.push_back(e);
                }
            }
        parts.emplace_back(n, std::move(edges));
    }
    return parts;
}

// Vertex classes {c*s, ..., c*s+s-1}.
VertexSet vertex_class(int c, int s) { return range(c * s, c * s + s); }

}  // namespace

MadSumReport validate(const Decomposition& d) {
    const int n = d.n;
    std::vector<int> owner(static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0), -1);
    std::vector<Edge> overlaps;
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        if (d.parts[i].order() != n)
            throw ValidationError("part " + std::to_string(i) + " has order " +
                                  std::to_string(d.parts[i].order()) + ", expected " + std::to_string(n));
        for (const auto& e : d.parts[i].edges()) {
            int& o = owner[static_cast<std::size_t>(e.first) * n + e.second];
            if (o >= 0) overlaps.push_back(e);
            o = static_cast<int>(i);
        }
    }
    if (!overlaps.empty()) throw ValidationError("edges in more than one part: " + pair_list(overlaps));
    if (d.mode == DecompositionMode::Decomposition) {
        std::vector<Edge> missing;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (owner[static_cast<std::size_t>(u) * n + v] < 0) missing.emplace_back(u, v);
        if (!missing.empty()) throw ValidationError("edges of K_n not covered: " + pair_list(missing));
    }

    MadSumReport report;
    report.total = Rational(0);
    for (const auto& part : d.parts) {
        report.parts.push_back(mad(part));
        report.total += report.parts.back().value;
    }
    const std::int64_t k = d.k();
    if (n >= 2 && k >= 1 && k <= choose2(n)) {
        report.upper_bound = m_list(k, choose2(n));
        report.within_upper_bound = report.total <= *report.upper_bound;
    }
    report.sqrt_cap = Surd(Rational(0), Rational(n), mpz_class(static_cast<long>(k)));
    report.below_sqrt_cap = k == 0 || report.sqrt_cap > report.total;
    return report;
}

Decomposition construct_k2(int n) {
    if (n < 3) throw DomainError("construct_k2 requires n >= 3");
    const Graph clique = clique_on(n, range(0, (n + 1) / 2));
    return {n, {clique, complement(clique)}, DecompositionMode::Decomposition, "k2"};
}

Decomposition construct_small_k(int k, int n, SmallKVariant variant) {
    if (k < 3 || k > 6) throw DomainError("construct_small_k supports k in 3..6");
    std::vector<VertexSet> x;
    if (variant == SmallKVariant::A) {
        if (n < 3) throw DomainError("variant A needs n >= 3 so that all three sets are non-empty");
        // a1 <= a2 <= a3, remainder to the later sets.
        const int base = n / 3;
        const int rem = n % 3;
        const int a1 = base;
        const int a2 = base + (rem == 2 ? 1 : 0);
        const VertexSet A1 = range(0, a1);
        const VertexSet A2 = range(a1, a1 + a2);
        const VertexSet A3 = range(a1 + a2, n);
        const VertexSet all = range(0, n);
        switch (k) {
            case 3: x = {unite(A1, A2), unite(A1, A3), unite(A2, A3)}; break;
            case 4: x = {A1, A2, A3, all}; break;
            case 5: x = {A1, A2, unite(A1, A2), unite(A1, A3), unite(A2, A3)}; break;
            default: x = {A1, A2, A3, unite(A1, A2), unite(A1, A3), unite(A2, A3)}; break;
        }
    } else {
        const int b1 = n / 2;
        const int b2 = n - b1;
        const int b1_low = b1 / 2;
        const int b2_low = b2 / 2;
        const bool needs_quarters = k >= 5;
        if (n < 3 || b2_low < 1 || (needs_quarters && b1_low < 1))
            throw DomainError("variant B needs every half and sub-half to be non-empty (n too small)");
        const VertexSet B1 = range(0, b1);
        const VertexSet B2 = range(b1, n);
        const VertexSet B1a = range(0, b1_low);
        const VertexSet B1b = range(b1_low, b1);
        const VertexSet B2a = range(b1, b1 + b2_low);
        const VertexSet B2b = range(b1 + b2_low, n);
        switch (k) {
            case 3: x = {B1, B2, range(0, n)}; break;
            case 4: x = {B1, B2, unite(B1, B2a), unite(B1, B2b)}; break;
            case 5: x = {B1, B2, unite(B1a, B2a), unite(B1b, B2a), unite(B1, B2b)}; break;
            default: x = {B1, B2, unite(B1a, B2a), unite(B1b, B2a), unite(B1a, B2b), unite(B1b, B2b)}; break;
        }
    }
    Decomposition d{n, first_fit(n, x), DecompositionMode::Decomposition,
                    "small-k" + std::to_string(k) + (variant == SmallKVariant::A ? "A" : "B")};
    return d;
}

Decomposition construct_k7_K8() {
    // Fano blocks on v_1..v_7 = 0..6; the three blocks through v_1 = 0 are
    // extended by v_8 = 7. Edge 0-7 lies in the first of them only.
    const int n = 8;
    const std::vector<VertexSet> fano = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    std::vector<Graph> parts;
    parts.push_back(clique_on(n, {0, 1, 2, 7}));
    parts.push_back(remove_edge(clique_on(n, {0, 3, 4, 7}), {0, 7}));
    parts.push_back(remove_edge(clique_on(n, {0, 5, 6, 7}), {0, 7}));
    for (std::size_t i = 3; i < fano.size(); ++i) parts.push_back(clique_on(n, fano[i]));
    return {n, std::move(parts), DecompositionMode::Decomposition, "k7-k8"};
}

Decomposition construct_from_design(const BlockDesign& d) {
    validate_design(d);
    Decomposition out;
    out.n = d.points;
    out.mode = d.complete ? DecompositionMode::Decomposition : DecompositionMode::Packing;
    out.name = std::string("design-") + source_name(d.source);
    for (const auto& b : d.blocks) out.parts.push_back(clique_on(d.points, b));
    return out;
}

Decomposition construct_psts_decomposition(int n, std::int64_t t) {
    if (n < 3) throw DomainError("construct_psts_decomposition requires n >= 3");
    if (t < 0 || 3 * t > static_cast<std::int64_t>(n - 1) * (n - 1))
        throw DomainError("t must satisfy 0 <= 3t <= (n-1)^2");
    const PackingResult packing = max_partial_triple_system(n);
    const auto& triangles = packing.design.blocks;
    const std::int64_t available = static_cast<std::int64_t>(triangles.size());
    const std::int64_t need = t / 2;
    if (need > available)
        throw DomainError("only " + std::to_string(available) + " edge-disjoint triangles fit in K_" +
                          std::to_string(n) + " (leave bound); t = " + std::to_string(t) + " needs " +
                          std::to_string(need));
    std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
    const auto take = [&](int a, int b) { used[static_cast<std::size_t>(std::min(a, b)) * n + std::max(a, b)] = 1; };
    Decomposition d;
    d.n = n;
    d.mode = DecompositionMode::Decomposition;
    d.name = "psts";
    for (std::int64_t i = 0; i < need; ++i) {
        const auto& b = triangles[i];
        d.parts.push_back(clique_on(n, b));
        take(b[0], b[1]);
        take(b[0], b[2]);
        take(b[1], b[2]);
    }
    if (t % 2 == 1) {
        Edge e1, e2;
        if (need < available) {
            const auto& b = triangles[need];
            e1 = {b[0], b[1]};
            e2 = {b[0], b[2]};
        } else {
            // Every triangle is in use; the P_3 must come from the leave.
            bool found = false;
            for (int v = 0; v < n && !found; ++v)
                if (packing.leave.degree(v) >= 2) {
                    e1 = make_edge(v, packing.leave.neighbors(v)[0]);
                    e2 = make_edge(v, packing.leave.neighbors(v)[1]);
                    found = true;
                }
            if (!found)
                throw DomainError("no P_3 remains beside " + std::to_string(available) +
                                  " triangles in K_" + std::to_string(n) + " (leave bound)");
        }
        d.parts.emplace_back(n, std::vector<Edge>{e1, e2});
        take(e1.first, e1.second);
        take(e2.first, e2.second);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!used[static_cast<std::size_t>(u) * n + v]) d.parts.emplace_back(n, std::vector<Edge>{{u, v}});
    return d;
}

Decomposition blow_up_design_decomposition(const BlockDesign& d, int n) {
    validate_design(d);
    if (!d.complete) throw DomainError("blow-up needs a complete design");
    if (d.points <= 0 || n % d.points != 0) throw DomainError("design order must divide n");
    const int s = n / d.points;
    std::vector<std::vector<Edge>> edges(d.blocks.size());
    std::vector<std::vector<int>> containing(d.points);
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const auto& b = d.blocks[i];
        for (int x : b) containing[x].push_back(static_cast<int>(i));
        for (std::size_t a = 0; a < b.size(); ++a)
            for (std::size_t c = a + 1; c < b.size(); ++c)
                for (int u : vertex_class(b[a], s))
                    for (int w : vertex_class(b[c], s)) edges[i].push_back(make_edge(u, w));
    }
    // One running counter across all intra-class edges; each edge goes to a
    // part whose block contains its class so part orders stay |Y_i|.
    std::size_t counter = 0;
    for (int x = 0; x < d.points; ++x) {
        if (containing[x].empty()) throw DomainError("point " + std::to_string(x) + " lies on no block");
        const VertexSet cls = vertex_class(x, s);
        for (std::size_t a = 0; a < cls.size(); ++a)
            for (std::size_t c = a + 1; c < cls.size(); ++c) {
                const int part = containing[x][counter++ % containing[x].size()];
                edges[part].emplace_back(cls[a], cls[c]);
            }
    }
    Decomposition out;
    out.n = n;
    out.mode = DecompositionMode::Decomposition;
    out.name = std::string("blowup-") + source_name(d.source);
    for (auto& e : edges) out.parts.emplace_back(n, std::move(e));
    return out;
}

Decomposition plane_plus_r_decomposition(int q, int r, int n) {
    const CyclicPlane plane = cyclic_plane_difference_set(q);
    const int v = plane.design.points;
    if (r < 1 || r > v) throw DomainError("r must satisfy 1 <= r <= q^2+q+1");
    if (n <= 0 || n % v != 0) throw DomainError("q^2+q+1 must divide n");
    const int s = n / v;
    Decomposition out;
    out.n = n;
    out.mode = DecompositionMode::Decomposition;
    out.name = "plane+r";
    for (int i = 0; i < v; ++i) {
        const auto& line = plane.design.blocks[i];
        std::vector<Edge> edges;
        for (std::size_t a = 0; a < line.size(); ++a)
            for (std::size_t c = a + 1; c < line.size(); ++c)
                for (int u : vertex_class(line[a], s))
                    for (int w : vertex_class(line[c], s)) edges.push_back(make_edge(u, w));
        // Lines r..v-1 also carry the clique on their own class X_i.
        if (i >= r) {
            const auto inner = clique_on(n, vertex_class(i, s)).edges();
            edges.insert(edges.end(), inner.begin(), inner.end());
        }
        out.parts.emplace_back(n, std::move(edges));
    }
    for (int i = 0; i < r; ++i) out.parts.push_back(clique_on(n, vertex_class(i, s)));
    return out;
}

Decomposition triangular_decomposition(int t, int n) {
    if (t < 2) throw DomainError("triangular construction needs t >= 2");
    if (n <= 0 || n % t != 0) throw DomainError("t must divide n");
    const int s = n / t;
    Decomposition out;
    out.n = n;
    out.mode = DecompositionMode::Decomposition;
    out.name = "triangular";
    for (int i = 0; i < t; ++i) out.parts.push_back(clique_on(n, vertex_class(i, s)));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            std::vector<Edge> edges;
            for (int u : vertex_class(i, s))
                for (int w : vertex_class(j, s)) edges.emplace_back(u, w);
            out.parts.emplace_back(n, std::move(edges));
        }
    return out;
}

Decomposition apex_extend(const Decomposition& d) {
    if (d.parts.empty()) throw DomainError("apex_extend needs at least one part");
    if (d.k() > choose2(d.n)) throw DomainError("apex_extend requires k <= C(n,2)");
    Decomposition out;
    out.n = d.n + 1;
    out.mode = d.mode;
    out.name = d.name + "+apex";
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        std::vector<Edge> edges = d.parts[i].edges();
        if (i + 1 == d.parts.size())
            for (int v = 0; v < d.n; ++v) edges.emplace_back(v, d.n);
        out.parts.emplace_back(out.n, std::move(edges));
    }
    return out;
}

Decomposition split_edge(const Decomposition& d) {
    if (d.k() >= choose2(d.n)) throw DomainError("split_edge requires k < C(n,2)");
    std::size_t best = 0;
    for (std::size_t i = 1; i < d.parts.size(); ++i)
        if (d.parts[i].size() > d.parts[best].size()) best = i;
    if (d.parts.empty() || d.parts[best].size() <= 1) throw DomainError("split_edge needs a part with > 1 edge");
    const Graph& part = d.parts[best];
    Edge chosen = part.edges().front();
    const Rational before = mad_value(part);
    for (const auto& e : part.edges())
        if (mad_value(remove_edge(part, e)) == before) {
            chosen = e;
            break;
        }
    Decomposition out = d;
    out.name = d.name + "+split";
    out.parts[best] = remove_edge(part, chosen);
    out.parts.emplace_back(d.n, std::vector<Edge>{chosen});
    return out;
}

Decomposition recursive_blowup(const Decomposition& d, int t) {
    if (t < 1) throw DomainError("recursive_blowup needs t >= 1");
    Decomposition out;
    out.n = d.n * t;
    out.mode = d.mode;
    out.name = d.name + "+recursive" + std::to_string(t);
    for (const auto& part : d.parts) out.parts.push_back(blow_up(part, t, false));
    for (int i = 0; i < d.n; ++i) out.parts.push_back(clique_on(out.n, vertex_class(i, t)));
    return out;
}

Decomposition canonicalize_packing(int n, std::vector<VertexSet> subsets) {
    for (auto& x : subsets) {
        std::sort(x.begin(), x.end());
        x.erase(std::unique(x.begin(), x.end()), x.end());
        for (int v : x)
            if (v < 0 || v >= n) throw DomainError("subset vertex out of range");
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    return {n, first_fit(n, subsets), DecompositionMode::Packing, "first-fit"};
}

bool has_four_cycle_bipartite(const Graph& g, int left) {
    // A 4-cycle exists iff two left vertices share two neighbours.
    for (int a = 0; a < left; ++a)
        for (int b = a + 1; b < left; ++b) {
            int shared = 0;
            for (int x : g.neighbors(a))
                if (g.has_edge(b, x) && ++shared >= 2) return true;
        }
    return false;
}

Graph packing_to_c4free_bipartite(const Decomposition& d) {
    const int k = static_cast<int>(d.parts.size());
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        const MadCertificate cert = mad(d.parts[i]);
        if (!is_clique(d.parts[i], cert.witness))
            throw DomainError("part " + std::to_string(i) + " has a non-clique Mad witness");
        if (d.parts[i].size() == 0) continue;
        for (int v : cert.witness) edges.emplace_back(i, k + v);
    }
    Graph g(k + d.n, std::move(edges));
    if (has_four_cycle_bipartite(g, k)) throw std::logic_error("incidence graph contains a 4-cycle");
    return g;
}

Json decomposition_to_json(const Decomposition& d) {
    Json parts = Json::array();
    for (const auto& p : d.parts) parts.push_back(graph_to_json(p));
    Json j = {{"n", d.n}, {"mode", mode_name(d.mode)}, {"parts", parts}};
    if (!d.name.empty()) j["name"] = d.name;
    return j;
}

Decomposition decomposition_from_json(const Json& j) {
    try {
        Decomposition d;
        d.n = j.at("n").get<int>();
        const std::string mode = j.value("mode", std::string("DECOMPOSITION"));
        if (mode == "DECOMPOSITION") d.mode = DecompositionMode::Decomposition;
        else if (mode == "PACKING") d.mode = DecompositionMode::Packing;
        else throw DomainError("unknown mode '" + mode + "'");
        d.name = j.value("name", std::string());
        for (const auto& p : j.at("parts")) d.parts.push_back(graph_from_json(p));
        return d;
    } catch (const Json::exception& ex) {
        throw DomainError(std::string("malformed decomposition JSON: ") + ex.what());
    }
}

Json report_to_json(const MadSumReport& r) {
    Json parts = Json::array();
    for (const auto& c : r.parts) parts.push_back({{"mad", rational_to_json(c.value)}, {"witness", c.witness}});
    Json j = {{"total", rational_to_json(r.total)},
              {"parts", parts},
              {"sqrt_k_n", r.sqrt_cap.to_string()},
              {"below_sqrt_k_n", r.below_sqrt_cap}};
    if (r.upper_bound) {
        j["upper_bound"] = rational_to_json(*r.upper_bound);
        j["within_upper_bound"] = r.within_upper_bound;
    }
    return j;
}

}  // namespace madgad

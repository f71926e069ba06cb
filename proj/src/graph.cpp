#include "madgad/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "madgad/errors.hpp"

namespace madgad {

Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw DomainError("negative vertex count");
    for (auto& e : edges_) {
        if (e.first == e.second) throw DomainError("loop at vertex " + std::to_string(e.first));
        if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
            throw DomainError("edge endpoint out of range: " + std::to_string(e.first) + "-" +
                              std::to_string(e.second));
        e = make_edge(e.first, e.second);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw DomainError("duplicate edge");
    adj_.assign(n, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    if (n <= kBitsetLimit) {
        rows_.assign(n, 0);
        for (const auto& [u, v] : edges_) {
            rows_[u] |= std::uint64_t{1} << v;
            rows_[v] |= std::uint64_t{1} << u;
        }
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    if (has_bitsets()) return (rows_[u] >> v) & 1U;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

Rational average_degree(const Graph& g) {
    if (g.order() == 0) throw DomainError("average degree of a graph without vertices");
    return Rational(2 * g.size(), g.order());
}

VertexSet non_isolated(const Graph& g) {
    VertexSet s;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) s.push_back(v);
    return s;
}

Graph support(const Graph& g) {
    if (g.size() == 0) return Graph(1);
    return induced(g, non_isolated(g));
}

Rational essential_average_degree(const Graph& g) { return average_degree(support(g)); }

void require_vertex_set(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.order())
            throw DomainError("vertex " + std::to_string(s[i]) + " out of range");
        if (i > 0 && s[i - 1] >= s[i]) throw DomainError("vertex set not sorted or has duplicates");
    }
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.order(), std::move(edges));
}

Graph induced(const Graph& g, const VertexSet& s) {
    require_vertex_set(g, s);
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    return Graph(static_cast<int>(s.size()), std::move(edges));
}

std::int64_t induced_edge_count(const Graph& g, const VertexSet& s) {
    std::vector<char> in(g.order(), 0);
    for (int v : s) in[v] = 1;
    std::int64_t count = 0;
    for (const auto& [u, v] : g.edges()) count += in[u] && in[v];
    return count;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), std::move(edges));
}

Graph join(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = disjoint_union(a, b).edges();
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) edges.emplace_back(u, a.order() + v);
    return Graph(a.order() + b.order(), std::move(edges));
}

Graph remove_edge(const Graph& g, Edge e) {
    e = make_edge(e.first, e.second);
    std::vector<Edge> edges = g.edges();
    const auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e)
        throw DomainError("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                          " not in graph");
    edges.erase(it);
    return Graph(g.order(), std::move(edges));
}

Graph edge_union(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) throw DomainError("edge union of graphs with different orders");
    std::vector<Edge> edges = a.edges();
    edges.insert(edges.end(), b.edges().begin(), b.edges().end());
    return Graph(a.order(), std::move(edges));
}

Graph empty_graph(int n) { return Graph(n); }

Graph clique_on(int n, const VertexSet& vertices) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            edges.emplace_back(vertices[i], vertices[j]);
    return Graph(n, std::move(edges));
}

Graph complete(int n) {
    if (n < 0) throw DomainError("negative order");
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    return clique_on(n, all);
}

Graph path(int n) {
    if (n < 0) throw DomainError("negative order");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    std::vector<Edge> edges = path(n).edges();
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
    std::vector<int> part_of;
    for (std::size_t i = 0; i < part_sizes.size(); ++i) {
        if (part_sizes[i] < 0) throw DomainError("negative part size");
        part_of.insert(part_of.end(), part_sizes[i], static_cast<int>(i));
    }
    const int n = static_cast<int>(part_of.size());
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph complete_split(int p, int q) {
    if (!(p > q && q > 1)) throw DomainError("complete_split requires p > q > 1");
    std::vector<Edge> edges;
    for (int u = 0; u < p; ++u)
        for (int v = std::max(u + 1, q); v < p; ++v) edges.emplace_back(u, v);
    return Graph(p, std::move(edges));
}

Graph blow_up(const Graph& g, int factor, bool fill_parts) {
    if (factor < 1) throw DomainError("blow-up factor must be positive");
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        for (int i = 0; i < factor; ++i)
            for (int j = 0; j < factor; ++j) edges.emplace_back(u * factor + i, v * factor + j);
    if (fill_parts)
        for (int v = 0; v < g.order(); ++v)
            for (int i = 0; i < factor; ++i)
                for (int j = i + 1; j < factor; ++j) edges.emplace_back(v * factor + i, v * factor + j);
    return Graph(g.order() * factor, std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw DomainError("permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), std::move(edges));
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<int> comp(g.order(), -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        VertexSet members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (int w : g.neighbors(members[i]))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

}  // namespace madgad

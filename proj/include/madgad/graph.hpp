#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "madgad/rational.hpp"

namespace madgad {

using Edge = std::pair<int, int>;  // always first < second
using VertexSet = std::vector<int>;  // sorted, duplicate-free

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Edges are kept sorted lexicographically; graphs of
/// order <= 64 also carry bitset adjacency rows used by the hot loops of the
/// oracles.
class Graph {
public:
    static constexpr int kBitsetLimit = 64;

    Graph() = default;
    explicit Graph(int n);
    /// Endpoints may come in either order. Throws DomainError on loops,
    /// duplicate edges or out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    std::int64_t size() const { return static_cast<std::int64_t>(edges_.size()); }
    const std::vector<Edge>& edges() const& { return edges_; }
    /// By value on temporaries so `for (e : complete(n).edges())` is safe.
    std::vector<Edge> edges() && { return std::move(edges_); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    bool has_bitsets() const { return n_ <= kBitsetLimit; }
    /// Adjacency row of v as a bitmask; requires has_bitsets().
    std::uint64_t row(int v) const { return rows_[v]; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> rows_;
};

Edge make_edge(int u, int v);

/// 2e(g)/|g|. Throws DomainError when g has no vertices.
Rational average_degree(const Graph& g);
/// Induced subgraph on the non-isolated vertices, or K_1 when g has no edges.
Graph support(const Graph& g);
Rational essential_average_degree(const Graph& g);

Graph complement(const Graph& g);
/// Relabels s (sorted) to 0..|s|-1 in order.
Graph induced(const Graph& g, const VertexSet& s);
/// Vertices of b are shifted by |a|.
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
Graph remove_edge(const Graph& g, Edge e);
/// Union of edge sets over the same vertex set; throws DomainError on overlap.
Graph edge_union(const Graph& a, const Graph& b);

Graph empty_graph(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete_multipartite(const std::vector<int>& part_sizes);
/// K_p minus the edges inside {0..q-1}; requires p > q > 1.
Graph complete_split(int p, int q);
/// Clique on the given vertices inside a graph of order n.
Graph clique_on(int n, const VertexSet& vertices);

/// Vertex v becomes {v*factor, ..., v*factor+factor-1}.
Graph blow_up(const Graph& g, int factor, bool fill_parts);

/// Same vertex count, same edges after relabeling by perm (perm[old] = new).
Graph relabel(const Graph& g, const std::vector<int>& perm);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// Vertices with positive degree.
VertexSet non_isolated(const Graph& g);
/// True when every pair in s is adjacent.
bool is_clique(const Graph& g, const VertexSet& s);
std::int64_t induced_edge_count(const Graph& g, const VertexSet& s);

/// Checks that a vertex set is sorted, duplicate-free and in range for g.
void require_vertex_set(const Graph& g, const VertexSet& s);

}  // namespace madgad

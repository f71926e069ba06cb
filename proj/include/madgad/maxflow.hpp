#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace madgad {

/// Dinic max-flow on 64-bit integer capacities.
class MaxFlow {
public:
    static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;

    explicit MaxFlow(int nodes);

    /// Adds arc u->v with capacity cap, and v->u with capacity reverse_cap.
    void add_edge(int u, int v, std::int64_t cap, std::int64_t reverse_cap = 0);

    std::int64_t solve(int source, int sink);

    /// After solve(): nodes reachable from the source in the residual graph.
    /// This is the source side of the unique inclusion-minimal minimum cut.
    std::vector<char> source_side(int source) const;

private:
    struct Arc {
        int to;
        std::int64_t cap;
    };
    bool bfs(int s, int t);
    std::int64_t dfs(int v, int t, std::int64_t pushed);

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

}  // namespace madgad

#include "madgad/maxflow.hpp"

#include <algorithm>
#include <queue>

namespace madgad {

MaxFlow::MaxFlow(int nodes) : out_(nodes), level_(nodes), next_(nodes) {}

void MaxFlow::add_edge(int u, int v, std::int64_t cap, std::int64_t reverse_cap) {
    out_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap});
    out_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, reverse_cap});
}

bool MaxFlow::bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        for (int id : out_[v]) {
            const Arc& a = arcs_[id];
            if (a.cap > 0 && level_[a.to] < 0) {
                level_[a.to] = level_[v] + 1;
                queue.push(a.to);
            }
        }
    }
    return level_[t] >= 0;
}

std::int64_t MaxFlow::dfs(int v, int t, std::int64_t pushed) {
    if (v == t) return pushed;
    for (std::size_t& i = next_[v]; i < out_[v].size(); ++i) {
        const int id = out_[v][i];
        Arc& a = arcs_[id];
        if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
        const std::int64_t got = dfs(a.to, t, std::min(pushed, a.cap));
        if (got > 0) {
            a.cap -= got;
            arcs_[id ^ 1].cap += got;
            return got;
        }
    }
    return 0;
}

std::int64_t MaxFlow::solve(int source, int sink) {
    std::int64_t flow = 0;
    while (bfs(source, sink)) {
        std::fill(next_.begin(), next_.end(), 0);
        while (const std::int64_t pushed = dfs(source, sink, kInfinite)) flow += pushed;
    }
    return flow;
}

std::vector<char> MaxFlow::source_side(int source) const {
    std::vector<char> seen(out_.size(), 0);
    std::vector<int> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int id : out_[v]) {
            const Arc& a = arcs_[id];
            if (a.cap > 0 && !seen[a.to]) {
                seen[a.to] = 1;
                stack.push_back(a.to);
            }
        }
    }
    return seen;
}

}  // namespace madgad

#include "madgad/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "madgad/errors.hpp"
#include "madgad/formulas.hpp"
#include "madgad/maxflow.hpp"

namespace madgad {

namespace {

class Clock {
public:
    explicit Clock(double limit) : limit_(limit), start_(std::chrono::steady_clock::now()) {}
    void check(const char* what) const {
        if (limit_ <= 0) return;
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        if (elapsed.count() > limit_) throw BudgetExceeded(std::string(what) + ": time limit exceeded");
    }

private:
    double limit_;
    std::chrono::steady_clock::time_point start_;
};

VertexSet mask_to_set(std::uint64_t mask) {
    VertexSet out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

MadCertificate mad_bruteforce(const Graph& g, const OracleBudget& budget) {
    const int n = g.order();
    if (n > std::min(budget.max_vertices, 20)) throw BudgetExceeded("mad_bruteforce: too many vertices");
    if (n == 0) return {Rational(0), {}};
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint16_t> edges(static_cast<std::size_t>(full) + 1, 0);
    std::uint32_t best = 1;
    std::int64_t best_e = 0, best_s = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t rest = mask & (mask - 1);
        const int v = std::countr_zero(mask);
        edges[mask] = static_cast<std::uint16_t>(edges[rest] + std::popcount(g.row(v) & rest));
        const std::int64_t e = edges[mask];
        const std::int64_t s = std::popcount(mask);
        const std::int64_t lhs = e * best_s, rhs = best_e * s;
        bool better = lhs > rhs;
        if (lhs == rhs) {
            if (s < best_s) better = true;
            else if (s == best_s) {
                const std::uint32_t diff = mask ^ best;
                better = diff != 0 && (mask & (diff & (~diff + 1))) != 0;
            }
        }
        if (better) best = mask, best_e = e, best_s = s;
    }
    return {Rational(2 * best_e, best_s), mask_to_set(best)};
}

Rational g_oracle(std::int64_t m) {
    if (m < 0) throw DomainError("negative edge count");
    Rational best(0);
    for (std::int64_t s = 2; s <= m + 1; ++s) best = max(best, Rational(2 * std::min(m, choose2(s)), s));
    return best;
}

Rational m_list_dp(std::int64_t k, std::int64_t n_edges, const OracleBudget& budget) {
    if (k < 1 || n_edges < k) throw DomainError("m_list_dp requires N >= k >= 1");
    if (k > budget.max_k || n_edges > budget.max_edges) throw BudgetExceeded("m_list_dp: k or N beyond budget");
    std::vector<Rational> g(static_cast<std::size_t>(n_edges) + 1);
    for (std::int64_t m = 1; m <= n_edges; ++m) g[m] = g_oracle(m);
    // row[e]: best total of the parts placed so far using exactly e edges.
    std::vector<std::optional<Rational>> row(static_cast<std::size_t>(n_edges) + 1);
    row[0] = Rational(0);
    for (std::int64_t j = 1; j <= k; ++j) {
        std::vector<std::optional<Rational>> next(row.size());
        for (std::int64_t e = 0; e <= n_edges; ++e) {
            if (!row[e]) continue;
            for (std::int64_t m = 1; e + m <= n_edges; ++m) {
                const Rational candidate = *row[e] + g[m];
                auto& slot = next[e + m];
                if (!slot || candidate > *slot) slot = candidate;
            }
        }
        row = std::move(next);
    }
    return *row[n_edges];
}

namespace {

class SubsetSearch {
public:
    SubsetSearch(int k, int n, double time_limit) : k_(k), n_(n), clock_(time_limit) {
        total_pairs_ = static_cast<int>(choose2(n));
        scale_ = 1;
        for (int x = 2; x <= n; ++x) scale_ = std::lcm(scale_, static_cast<std::int64_t>(x));
        pair_index_.assign(n, std::vector<int>(n, -1));
        int next = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pair_index_[u][v] = pair_index_[v][u] = next++;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
            if (std::popcount(mask) >= 2) subsets_.push_back(mask);
        std::stable_sort(subsets_.begin(), subsets_.end(),
                         [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
        // Scaled per-part bound: bound_[r][R] >= max sum of g over r parts
        // whose edge counts sum to at most R.
        std::vector<double> g(total_pairs_ + 1, 0.0);
        for (int m = 1; m <= total_pairs_; ++m) g[m] = g_oracle(m).to_double();
        bound_.assign(k + 1, std::vector<double>(total_pairs_ + 1, 0.0));
        for (int r = 1; r <= k; ++r)
            for (int budget = 0; budget <= total_pairs_; ++budget)
                for (int m = 0; m <= budget; ++m)
                    bound_[r][budget] = std::max(bound_[r][budget], g[m] + bound_[r - 1][budget - m]);
    }

    SubsetSearchResult run() {
        const std::uint32_t full = (1u << n_) - 1;
        for (int s = 2; s <= n_; ++s) {
            const std::uint32_t first = (1u << s) - 1;
            push(first);
            if (k_ == 1) {
                leaf(full);
            } else {
                // Second set up to the stabilizer of {0..s-1}: a points inside, b outside.
                for (int size2 = s; size2 <= n_; ++size2)
                    for (int a = std::min(size2, s); a >= 0; --a) {
                        const int b = size2 - a;
                        if (b > n_ - s) continue;
                        const std::uint32_t second = ((1u << a) - 1) | ((((1u << b) - 1)) << s);
                        push(second);
                        extend(2, first_index_of_size(size2), full);
                        pop();
                    }
            }
            pop();
        }
        SubsetSearchResult result;
        result.value = Rational(best_value_, scale_);
        for (auto mask : best_tuple_) result.subsets.push_back(mask_to_set(mask));
        result.tuples_evaluated = evaluated_;
        return result;
    }

private:
    int k_, n_;
    Clock clock_;
    int total_pairs_ = 0;
    std::int64_t scale_ = 1;
    std::vector<std::vector<int>> pair_index_;
    std::vector<std::uint32_t> subsets_;
    std::vector<std::vector<double>> bound_;

    std::vector<std::uint32_t> tuple_;
    std::vector<std::uint64_t> used_stack_{0};
    std::vector<std::int64_t> value_stack_{0};
    std::int64_t best_value_ = -1;
    std::vector<std::uint32_t> best_tuple_;
    std::int64_t evaluated_ = 0;

    std::size_t first_index_of_size(int size) const {
        std::size_t i = 0;
        while (i < subsets_.size() && std::popcount(subsets_[i]) < size) ++i;
        return i;
    }

    std::uint64_t pair_mask(std::uint32_t set) const {
        std::uint64_t out = 0;
        for (int u = 0; u < n_; ++u)
            if (set >> u & 1)
                for (int v = u + 1; v < n_; ++v)
                    if (set >> v & 1) out |= std::uint64_t{1} << pair_index_[u][v];
        return out;
    }

    void push(std::uint32_t set) {
        const std::uint64_t pairs = pair_mask(set);
        const std::uint64_t fresh = pairs & ~used_stack_.back();
        const std::int64_t gain = 2 * std::popcount(fresh) * (scale_ / std::popcount(set));
        tuple_.push_back(set);
        used_stack_.push_back(used_stack_.back() | fresh);
        value_stack_.push_back(value_stack_.back() + gain);
    }

    void pop() {
        tuple_.pop_back();
        used_stack_.pop_back();
        value_stack_.pop_back();
    }

    bool hopeless() const {
        const int remaining_parts = k_ - static_cast<int>(tuple_.size());
        const int remaining_pairs = total_pairs_ - std::popcount(used_stack_.back());
        const double cap = bound_[remaining_parts][remaining_pairs] * static_cast<double>(scale_) + 1e-6;
        return value_stack_.back() + static_cast<std::int64_t>(cap) <= best_value_;
    }

    void leaf(std::uint32_t full) {
        ++evaluated_;
        if ((evaluated_ & 0xfff) == 0) clock_.check("m_kn_search");
        std::uint32_t covered = 0;
        for (auto set : tuple_) covered |= set;
        if (covered != full) return;
        if (value_stack_.back() > best_value_) {
            best_value_ = value_stack_.back();
            best_tuple_ = tuple_;
        }
    }

    void extend(int depth, std::size_t start, std::uint32_t full) {
        if (depth == k_) {
            leaf(full);
            return;
        }
        if (hopeless()) return;
        for (std::size_t i = start; i < subsets_.size(); ++i) {
            push(subsets_[i]);
            extend(depth + 1, i, full);
            pop();
        }
    }
};

}  // namespace

SubsetSearchResult m_kn_search(int k, int n, const OracleBudget& budget) {
    if (k < 1 || n < 2) throw DomainError("m_kn_search requires k >= 1 and n >= 2");
    if (n > budget.max_vertices || k > budget.max_k || n > 11)
        throw BudgetExceeded("m_kn_search: k or n beyond budget");
    return SubsetSearch(k, n, budget.time_limit_seconds).run();
}

Rational m_two_by_colourings(int n) {
    if (n < 2 || n > 6) throw BudgetExceeded("m_two_by_colourings: n must be in 2..6");
    const std::vector<Edge> all = complete(n).edges();
    const std::size_t m = all.size();
    Rational best(0);
    // Edge 0 stays in the first colour class; swapping classes is symmetric.
    for (std::uint32_t colouring = 0; colouring < (1u << (m - 1)); ++colouring) {
        std::vector<Edge> first{all[0]}, second;
        for (std::size_t i = 1; i < m; ++i) (colouring >> (i - 1) & 1 ? second : first).push_back(all[i]);
        best = max(best, mad_value(Graph(n, first)) + mad_value(Graph(n, second)));
    }
    return best;
}

int clique_number(const Graph& g) {
    int best = g.order() > 0 ? 1 : 0;
    std::function<void(int, std::vector<int>)> expand = [&](int size, std::vector<int> candidates) {
        if (size + static_cast<int>(candidates.size()) <= best) return;
        if (candidates.empty()) {
            best = std::max(best, size);
            return;
        }
        while (!candidates.empty()) {
            if (size + static_cast<int>(candidates.size()) <= best) return;
            const int v = candidates.front();
            candidates.erase(candidates.begin());
            std::vector<int> next;
            for (int u : candidates)
                if (g.has_edge(u, v)) next.push_back(u);
            expand(size + 1, std::move(next));
        }
    };
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    expand(0, all);
    return best;
}

int chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    const int lower = clique_number(g);
    std::vector<int> colour(n, -1);
    auto pick = [&]() {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] >= 0) continue;
            std::vector<char> seen(n, 0);
            int sat = 0;
            for (int u : g.neighbors(v))
                if (colour[u] >= 0 && !seen[colour[u]]) seen[colour[u]] = 1, ++sat;
            if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg))
                best = v, best_sat = sat, best_deg = g.degree(v);
        }
        return best;
    };
    int best = n;
    std::function<void(int, int)> search = [&](int coloured, int used) {
        if (best == lower || used >= best) return;
        if (coloured == n) {
            best = used;
            return;
        }
        const int v = pick();
        for (int c = 0; c <= used; ++c) {
            if (std::max(used, c + 1) >= best) break;
            bool clash = false;
            for (int u : g.neighbors(v)) clash = clash || colour[u] == c;
            if (clash) continue;
            colour[v] = c;
            search(coloured + 1, std::max(used, c + 1));
            colour[v] = -1;
            if (best == lower) return;
        }
    };
    search(0, 0);
    return best;
}

int degeneracy(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int best = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!removed[u] && (v < 0 || deg[u] < deg[v])) v = u;
        best = std::max(best, deg[v]);
        removed[v] = 1;
        for (int u : g.neighbors(v))
            if (!removed[u]) --deg[u];
    }
    return best;
}

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n <= 1 || !is_connected(g)) return 0;
    if (g.size() == choose2(n)) return n - 1;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            // Vertex v splits into 2v (in) and 2v+1 (out).
            MaxFlow flow(2 * n);
            for (int v = 0; v < n; ++v)
                flow.add_edge(2 * v, 2 * v + 1, v == s || v == t ? MaxFlow::kInfinite : 1);
            for (const auto& [u, v] : g.edges()) {
                flow.add_edge(2 * u + 1, 2 * v, MaxFlow::kInfinite);
                flow.add_edge(2 * v + 1, 2 * u, MaxFlow::kInfinite);
            }
            best = std::min<int>(best, static_cast<int>(flow.solve(2 * s + 1, 2 * t)));
        }
    return best;
}

int edge_connectivity(const Graph& g) {
    const int n = g.order();
    if (n <= 1 || !is_connected(g)) return 0;
    int best = n;
    for (int t = 1; t < n; ++t) {
        MaxFlow flow(n);
        for (const auto& [u, v] : g.edges()) flow.add_edge(u, v, 1, 1);
        best = std::min<int>(best, static_cast<int>(flow.solve(0, t)));
    }
    return best;
}

SmallInvariants invariants_small(const Graph& g, const OracleBudget& budget) {
    if (g.size() > budget.max_edges) throw BudgetExceeded("invariants_small: too many edges");
    SmallInvariants out;
    out.degeneracy = degeneracy(g);
    out.col = out.degeneracy + 1;
    const Graph s = support(g);
    if (s.order() > budget.max_vertices) throw BudgetExceeded("invariants_small: support too large");
    out.omega = clique_number(s);
    out.chi = chromatic_number(s);
    const int n = s.order();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const VertexSet vs = mask_to_set(mask);
        const Graph h = induced(s, vs);
        int min_degree = n;
        for (int v = 0; v < h.order(); ++v) min_degree = std::min(min_degree, h.degree(v));
        if (min_degree > out.lambda_plus) out.lambda_plus = std::max(out.lambda_plus, edge_connectivity(h));
        if (min_degree > out.kappa_plus) out.kappa_plus = std::max(out.kappa_plus, vertex_connectivity(h));
    }
    return out;
}

ParameterSums check_parameter_sums(const Decomposition& d) {
    std::optional<std::int64_t> partial_p;
    std::vector<std::int64_t> clique_orders;
    for (const auto& part : d.parts) {
        if (part.size() == 0) throw DomainError("check_parameter_sums: empty part");
        const Graph s = support(part);
        if (s.size() == choose2(s.order())) {
            clique_orders.push_back(s.order());
            continue;
        }
        const auto [p, r] = clique_split(part.size());
        if (partial_p || r == 0 || !is_extremal_member(part, static_cast<int>(p), static_cast<int>(r)) ||
            clique_number(s) != p)
            throw DomainError("check_parameter_sums: parts must be K_p, K_{p+1} and one extremal member");
        partial_p = p;
    }
    if (!clique_orders.empty()) {
        const std::int64_t p = partial_p.value_or(*std::min_element(clique_orders.begin(), clique_orders.end()));
        for (auto c : clique_orders)
            if (c != p && c != p + 1) throw DomainError("check_parameter_sums: clique orders differ by more than one");
    }

    ParameterSums out;
    out.k = d.k();
    out.total = Rational(0);
    for (const auto& part : d.parts) {
        out.total += mad_value(part);
        const SmallInvariants inv = invariants_small(part);
        out.sum_omega += inv.omega;
        out.sum_chi += inv.chi;
        out.sum_col += inv.col;
        out.sum_degeneracy += inv.degeneracy;
        out.sum_kappa += inv.kappa_plus;
        out.sum_lambda += inv.lambda_plus;
    }
    out.floor_total = out.total.floor().get_si();
    const std::int64_t upper = out.floor_total + out.k;
    out.passed = out.sum_omega == upper && out.sum_chi == upper && out.sum_col == upper &&
                 out.sum_degeneracy == out.floor_total && out.sum_kappa == out.floor_total &&
                 out.sum_lambda == out.floor_total;
    return out;
}

namespace {

// Colour refinement; colours are ranks of sorted signatures, so they are
// comparable between graphs whose round histories agree.
struct Refinement {
    std::vector<int> colour;
    std::string history;
};

Refinement refine(const Graph& g) {
    const int n = g.order();
    Refinement out;
    out.colour.assign(n, 0);
    for (int v = 0; v < n; ++v) out.colour[v] = g.degree(v);
    out.history = std::to_string(n) + ":" + std::to_string(g.size());
    for (int round = 0; round <= n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(out.colour[v]);
            std::vector<int> around;
            for (int u : g.neighbors(v)) around.push_back(out.colour[u]);
            std::sort(around.begin(), around.end());
            sig[v].insert(sig[v].end(), around.begin(), around.end());
        }
        std::vector<std::vector<int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            out.colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        std::vector<int> histogram = out.colour;
        std::sort(histogram.begin(), histogram.end());
        out.history += "|";
        for (int c : histogram) out.history += std::to_string(c) + ",";
        if (static_cast<int>(sorted.size()) == n) break;
    }
    return out;
}

bool isomorphic_refined(const Graph& a, const Refinement& ra, const Graph& b, const Refinement& rb) {
    if (ra.history != rb.history) return false;
    const int n = a.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> class_size(n + 1, 0);
    for (int c : ra.colour) ++class_size[c];
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return class_size[ra.colour[x]] < class_size[ra.colour[y]]; });
    std::vector<int> map(n, -1);
    std::vector<char> taken(n, 0);
    std::function<bool(int)> assign = [&](int depth) {
        if (depth == n) return true;
        const int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (taken[w] || rb.colour[w] != ra.colour[v]) continue;
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) {
                const int u = order[i];
                ok = a.has_edge(u, v) == b.has_edge(map[u], w);
            }
            if (!ok) continue;
            map[v] = w;
            taken[w] = 1;
            if (assign(depth + 1)) return true;
            taken[w] = 0;
        }
        map[v] = -1;
        return false;
    };
    return assign(0);
}

class IsoClasses {
public:
    bool add(const Graph& g) {
        Refinement r = refine(g);
        auto& bucket = buckets_[r.history];
        for (const auto& [h, rh] : bucket)
            if (isomorphic_refined(g, r, h, rh)) return false;
        bucket.emplace_back(g, std::move(r));
        graphs_.push_back(g);
        return true;
    }
    const std::vector<Graph>& graphs() const { return graphs_; }

private:
    std::map<std::string, std::vector<std::pair<Graph, Refinement>>> buckets_;
    std::vector<Graph> graphs_;
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return isomorphic_refined(a, refine(a), b, refine(b));
}

std::vector<Graph> connected_graphs(int n) {
    if (n < 1 || n > 7) throw BudgetExceeded("connected_graphs: n must be in 1..7");
    // Every connected graph has a vertex whose removal keeps it connected.
    std::vector<Graph> level{Graph(1)};
    for (int order = 2; order <= n; ++order) {
        IsoClasses next;
        for (const auto& h : level) {
            const int m = order - 1;
            for (std::uint32_t nbrs = 1; nbrs < (1u << m); ++nbrs) {
                std::vector<Edge> edges = h.edges();
                for (int u = 0; u < m; ++u)
                    if (nbrs >> u & 1) edges.emplace_back(u, m);
                next.add(Graph(order, std::move(edges)));
            }
        }
        level = next.graphs();
    }
    return level;
}

std::vector<Graph> connected_graphs_by_size(int max_edges) {
    if (max_edges < 1 || max_edges > 12) throw BudgetExceeded("connected_graphs_by_size: max_edges must be in 1..12");
    std::vector<Graph> out;
    std::vector<Graph> level{complete(2)};
    for (int m = 1;; ++m) {
        out.insert(out.end(), level.begin(), level.end());
        if (m == max_edges) break;
        // Removing a non-bridge edge, or a leaf edge of a tree, stays connected.
        IsoClasses next;
        for (const auto& h : level) {
            const int n = h.order();
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (h.has_edge(u, v)) continue;
                    std::vector<Edge> edges = h.edges();
                    edges.emplace_back(u, v);
                    next.add(Graph(n, std::move(edges)));
                }
            for (int u = 0; u < n; ++u) {
                std::vector<Edge> edges = h.edges();
                edges.emplace_back(u, n);
                next.add(Graph(n + 1, std::move(edges)));
            }
        }
        level = next.graphs();
    }
    return out;
}

Json certificate_to_json(const MadCertificate& c) {
    return {{"value", rational_to_json(c.value)}, {"witness", vertex_set_to_json(c.witness)}};
}

Json invariants_to_json(const SmallInvariants& inv) {
    return {{"omega", inv.omega},           {"chi", inv.chi},
            {"degeneracy", inv.degeneracy}, {"col", inv.col},
            {"kappa_plus", inv.kappa_plus}, {"lambda_plus", inv.lambda_plus}};
}

}  // namespace madgad

#include "madgad/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "madgad/decomp.hpp"
#include "madgad/designs.hpp"
#include "madgad/errors.hpp"
#include "madgad/formulas.hpp"
#include "madgad/mad.hpp"
#include "madgad/oracle.hpp"

namespace madgad {

std::string audit_normalization(const std::vector<std::int64_t>& initial, const NormalizationState& final_state) {
    std::vector<std::int64_t> items = initial;
    std::int64_t spare = 0;
    const std::int64_t total = std::accumulate(items.begin(), items.end(), std::int64_t{0});
    auto mad_sum = [&] {
        Rational s(0);
        for (auto e : items) s += item_mad(e);
        return s;
    };
    Rational previous = mad_sum();
    std::size_t index = 0;
    for (const auto& step : final_state.log) {
        const std::string where = "step " + std::to_string(index++) + " (" + step.rule + "): ";
        if (step.spare_before != spare) return where + "spare mismatch";
        if (step.rule == "3c" || step.rule.starts_with("3d") || step.rule == "3e") {
            int b = 0;
            for (auto e : items) {
                const ItemType t = item_type(describe(e));
                if (t == ItemType::C) return where + "Type-C item present";
                b += t == ItemType::B;
            }
            if (b > 1) return where + "more than one Type-B item";
        }
        for (const auto& c : step.changes) {
            if (c.index >= items.size() || describe(items[c.index]) != c.before) return where + "before mismatch";
            items[c.index] = choose2(c.after.p) + c.after.r;
        }
        spare = step.spare_after;
        if (spare < 0) return where + "negative spare";
        if (spare + std::accumulate(items.begin(), items.end(), std::int64_t{0}) != total)
            return where + "spare + edges not conserved";
        const Rational now = mad_sum();
        if (now != step.mad_sum) return where + "logged Mad-sum differs from replay";
        if (now < previous) return where + "Mad-sum decreased";
        if (step.rule == "3b" && step.changes.size() == 2 && step.changes[0].before.p > step.changes[1].before.p &&
            !(now > previous))
            return where + "transfer between different p did not increase the Mad-sum";
        previous = now;
    }
    if (items != final_state.items || spare != final_state.spare) return "replay does not reach the final state";
    if (spare != 0) return "spare edges left at termination";
    if (!has_terminal_shape(final_state)) return "terminal multiset has the wrong shape";
    const std::int64_t k = static_cast<std::int64_t>(items.size());
    const Rational expected = total >= k ? m_list(k, total) : Rational(total);
    if (final_state.mad_sum() != expected) return "terminal Mad-sum differs from the closed form";
    return {};
}

namespace {

using Rng = std::mt19937_64;

// Collects the first failure; later checks still count.
class Audit {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failure_.empty()) failure_ = what;
    }
    bool ok() const { return failure_.empty(); }
    int checks() const { return checks_; }
    const std::string& failure() const { return failure_; }

private:
    int checks_ = 0;
    std::string failure_;
};

struct Produced {
    std::string origin;
    Decomposition d;
};

struct Context {
    Rng rng;
    std::vector<Produced> produced;

    MadSumReport record(const std::string& origin, const Decomposition& d) {
        produced.push_back({origin, d});
        return validate(d);
    }
};

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Graph random_graph(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph random_graph_with_edges(std::int64_t m, Rng& rng) {
    int low = 1;
    while (choose2(low) < m) ++low;
    const int n = uniform(rng, low, std::max<int>(low, static_cast<int>(std::min<std::int64_t>(2 * m, 16))));
    std::vector<Edge> all = complete(n).edges();
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(m));
    return Graph(n, std::move(all));
}

Decomposition random_decomposition(int n, int k, Rng& rng) {
    std::vector<std::vector<Edge>> parts(k);
    const Graph kn = complete(n);
    for (const auto& e : kn.edges()) parts[uniform(rng, 0, k - 1)].push_back(e);
    Decomposition d;
    d.n = n;
    d.name = "random";
    for (auto& edges : parts) d.parts.emplace_back(n, std::move(edges));
    return d;
}

std::string str(const Rational& r) { return r.to_string(); }

// 1. Flow-based Mad against subset enumeration.
void criterion_mad(Context& ctx, Audit& audit, std::string& detail) {
    int graphs = 0;
    std::vector<int> per_order(7, 0);
    for (int n = 1; n <= 6; ++n) {
        const auto family = connected_graphs(n);
        per_order[n] = static_cast<int>(family.size());
        for (const auto& g : family) {
            const MadCertificate flow = mad(g);
            const MadCertificate brute = mad_bruteforce(g);
            audit.expect(flow.value == brute.value && flow.witness == brute.witness,
                         "connected graph on " + std::to_string(n) + " vertices: flow " + str(flow.value) +
                             " vs enumeration " + str(brute.value));
            ++graphs;
        }
    }
    audit.expect(per_order[6] == 112, "expected 112 connected graphs on 6 vertices, got " + std::to_string(per_order[6]));
    std::uniform_real_distribution<double> density(0.15, 0.9);
    for (int i = 0; i < 500; ++i) {
        const Graph g = random_graph(uniform(ctx.rng, 7, 8), density(ctx.rng), ctx.rng);
        const MadCertificate flow = mad(g);
        const MadCertificate brute = mad_bruteforce(g);
        audit.expect(flow.value == brute.value && flow.witness == brute.witness,
                     "random graph " + std::to_string(i) + ": flow " + str(flow.value) + " vs " + str(brute.value));
        ++graphs;
    }
    detail = std::to_string(graphs) + " graphs (" + std::to_string(per_order[6]) + " connected on 6 vertices)";
}

// 2. g(m) against representatives and an exhaustive corpus.
void criterion_g(Context&, Audit& audit, std::string& detail) {
    for (std::int64_t m = 1; m <= 500; ++m) {
        const auto [p, r] = clique_split(m);
        audit.expect(g_max_mad(m) == mad(representative(static_cast<int>(p), static_cast<int>(r))).value,
                     "g(" + std::to_string(m) + ") differs from Mad of its representative");
    }
    // Every graph with at most 9 edges is a disjoint union of connected ones.
    const auto connected = connected_graphs_by_size(9);
    std::int64_t corpus = 0;
    std::vector<int> chosen;
    std::function<void(std::size_t, std::int64_t)> build = [&](std::size_t start, std::int64_t edges) {
        if (!chosen.empty()) {
            Graph g(0);
            for (int i : chosen) g = disjoint_union(g, connected[i]);
            const Rational value = mad(g).value;
            audit.expect(value <= g_max_mad(edges),
                         "graph with " + std::to_string(edges) + " edges has Mad " + str(value) + " above g");
            ++corpus;
        }
        for (std::size_t i = start; i < connected.size(); ++i)
            if (edges + connected[i].size() <= 9) {
                chosen.push_back(static_cast<int>(i));
                build(i, edges + connected[i].size());
                chosen.pop_back();
            }
    };
    build(0, 0);
    detail = "m <= 500 representatives; " + std::to_string(corpus) + " graphs with <= 9 edges";
}

// 3. Closed-form list bound against the dynamic program.
void criterion_mlist(Context&, Audit& audit, std::string& detail) {
    int cells = 0, plateau = 0;
    for (std::int64_t k = 2; k <= 8; ++k)
        for (std::int64_t n_edges = k; n_edges <= 60; ++n_edges) {
            ++cells;
            const Rational formula = m_list(k, n_edges);
            const Rational dp = m_list_dp(k, n_edges);
            audit.expect(formula == dp, "M^L(" + std::to_string(k) + "," + std::to_string(n_edges) + "): formula " +
                                            str(formula) + " vs DP " + str(dp));
            const ParamTriple t = param_triple(k, n_edges);
            if (t.r > 0 && 2 * t.r <= t.p - 1) {
                ++plateau;
                audit.expect(formula == m_list(k, n_edges - t.r), "plateau fails at (" + std::to_string(k) + "," +
                                                                      std::to_string(n_edges) + ")");
                const Graph g = representative(static_cast<int>(t.p), static_cast<int>(t.r));
                for (int u = 0; u < t.r; ++u)
                    audit.expect(is_free_edge(g, {u, static_cast<int>(t.p)}), "pendant edge of G_{p,r} is not free");
            }
        }
    detail = std::to_string(cells) + " cells, " + std::to_string(plateau) + " plateau cells";
}

// 4. Normalization trajectories.
void criterion_normalize(Context& ctx, Audit& audit, std::string& detail) {
    int lists = 0, decompositions = 0;
    std::size_t longest = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<Graph> graphs;
        std::int64_t k = 0, n_edges = 0;
        if (trial % 2 == 0) {
            k = uniform(ctx.rng, 2, 8);
            n_edges = uniform(ctx.rng, static_cast<int>(k), 60);
            std::vector<std::int64_t> cuts{0, n_edges};
            for (int i = 0; i + 1 < k; ++i) cuts.push_back(uniform(ctx.rng, 0, static_cast<int>(n_edges)));
            std::sort(cuts.begin(), cuts.end());
            for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
                graphs.push_back(random_graph_with_edges(cuts[i + 1] - cuts[i], ctx.rng));
            ++lists;
        } else {
            const int n = uniform(ctx.rng, 3, 11);
            k = uniform(ctx.rng, 2, static_cast<int>(std::min<std::int64_t>(8, choose2(n))));
            n_edges = choose2(n);
            const Decomposition d = random_decomposition(n, static_cast<int>(k), ctx.rng);
            ctx.produced.push_back({"random decomposition", d});
            graphs = d.parts;
            ++decompositions;
        }
        const NormalizationState start = to_representative_list(graphs);
        audit.expect(start.mad_sum() >= start.input_mad_sum, "representatives lowered the Mad-sum");
        const NormalizationState end = normalize(graphs, k, n_edges);
        const std::string problem = audit_normalization(start.items, end);
        audit.expect(problem.empty(), "trial " + std::to_string(trial) + " (k=" + std::to_string(k) +
                                          ", N=" + std::to_string(n_edges) + "): " + problem);
        longest = std::max(longest, end.log.size());
    }
    detail = std::to_string(lists) + " lists + " + std::to_string(decompositions) + " decompositions, longest log " +
             std::to_string(longest) + " steps";
}

// 5. Two parts.
void criterion_k2(Context& ctx, Audit& audit, std::string& detail) {
    for (int n = 3; n <= 40; ++n) {
        const auto report = ctx.record("construct_k2", construct_k2(n));
        audit.expect(report.total == m_two(n), "construct_k2(" + std::to_string(n) + ") total " + str(report.total));
    }
    std::string values;
    for (int n = 3; n <= 7; ++n) {
        const SubsetSearchResult search = m_kn_search(2, n);
        audit.expect(search.value == m_two(n),
                     "search M(2," + std::to_string(n) + ") = " + str(search.value) + " vs " + str(m_two(n)));
        values += (values.empty() ? "" : ", ") + str(search.value);
    }
    detail = "constructions n=3..40; search n=3..7: " + values;
}

// 6. Finite planes.
void criterion_planes(Context& ctx, Audit& audit, std::string& detail) {
    struct Instance {
        int which;
        int q;
        BlockDesign design;
        std::int64_t expected;
    };
    const std::vector<Instance> instances = {
        {1, 2, projective_plane(2), 14},
        {1, 3, projective_plane(3), 39},
        {2, 3, affine_plane(3), 24},
        {3, 3, truncate_plane(projective_plane(3), TruncateMode::DeletePoint), 35},
        {4, 3, truncate_plane(affine_plane(3), TruncateMode::DeletePoint), 20},
        {5, 3, truncate_plane(affine_plane(3), TruncateMode::DeleteLine), 13},
        {1, 5, projective_plane(5), 155},
    };
    std::string totals;
    for (const auto& inst : instances) {
        const std::string tag = "case " + std::to_string(inst.which) + " q=" + std::to_string(inst.q);
        validate_design(inst.design);
        const Decomposition d = construct_from_design(inst.design);
        audit.expect(d.mode == DecompositionMode::Decomposition, tag + ": design does not cover K_n");
        const auto report = ctx.record("plane " + tag, d);
        const PlaneCase formula = plane_case(inst.which, inst.q);
        audit.expect(formula.k == d.k() && formula.n == d.n, tag + ": (k,n) differs from the formula");
        audit.expect(report.total == formula.value && report.total == Rational(inst.expected),
                     tag + ": total " + str(report.total));
        totals += (totals.empty() ? "" : ", ") + str(report.total) + " on K_" + std::to_string(d.n);
    }
    audit.expect(m_upper_bound(13, 12) == Rational(35), "m_upper_bound(13,12) = " + str(m_upper_bound(13, 12)));
    detail = totals + "; m_upper_bound(13,12) = " + str(m_upper_bound(13, 12));
}

// 7. Upper range and leave graphs.
void criterion_psts(Context& ctx, Audit& audit, std::string& detail) {
    int built = 0;
    for (int n : {7, 9, 13}) {
        const std::int64_t t_max = (static_cast<std::int64_t>(n) - 1) * (n - 1) / 3;
        for (std::int64_t t : {std::int64_t{0}, std::int64_t{1}, std::int64_t{2}, t_max}) {
            const auto report = ctx.record("psts", construct_psts_decomposition(n, t));
            const UpperRange expected = m_upper_range(n, t);
            audit.expect(report.total == expected.value, "psts(" + std::to_string(n) + "," + std::to_string(t) +
                                                              ") total " + str(report.total) + " vs " +
                                                              str(expected.value));
            ++built;
        }
    }
    for (int n = 6; n <= 20; ++n) {
        const PackingResult packing = max_partial_triple_system(n);
        validate_design(packing.design);
        const std::int64_t triangles = static_cast<std::int64_t>(packing.design.blocks.size());
        audit.expect(triangles * 3 + packing.leave.size() == choose2(n), "leave edge count wrong at n=" + std::to_string(n));
        // Shape forced by degree parity, checked from degrees alone.
        std::vector<int> degrees;
        for (int v = 0; v < n; ++v)
            if (packing.leave.degree(v) > 0) degrees.push_back(packing.leave.degree(v));
        std::sort(degrees.begin(), degrees.end());
        std::vector<int> expected;
        switch (n % 6) {
            case 1: case 3: break;
            case 0: case 2: expected.assign(n, 1); break;
            case 4: expected.assign(n - 1, 1), expected.push_back(3); break;
            case 5: expected.assign(4, 2); break;
        }
        bool shape = degrees == expected;
        if (n % 6 == 5) shape = shape && packing.leave.size() == 4 && support(packing.leave).order() == 4 &&
                                is_connected(support(packing.leave));
        audit.expect(shape && leave_matches_table(n, packing.leave), "leave shape wrong at n=" + std::to_string(n));
    }
    detail = std::to_string(built) + " upper-range decompositions; leaves n=6..20";
}

// 8. Seven parts of K_8.
void criterion_k8(Context& ctx, Audit& audit, std::string& detail) {
    const Decomposition d = construct_k7_K8();
    const auto report = ctx.record("k7-K8", d);
    audit.expect(report.total == Rational(16), "total " + str(report.total));
    audit.expect(m_list(7, 28) == Rational(16), "m_list(7,28) = " + str(m_list(7, 28)));
    std::map<std::string, int> census;
    for (const auto& part : d.parts) {
        const Graph s = support(part);
        const std::string shape = s.order() == 3 && s.size() == 3   ? "K3"
                                  : s.order() == 4 && s.size() == 6 ? "K4"
                                  : s.order() == 4 && s.size() == 5 ? "K4-e"
                                                                    : "other";
        ++census[shape];
    }
    audit.expect(census == std::map<std::string, int>{{"K3", 4}, {"K4-e", 2}, {"K4", 1}}, "part census differs");
    detail = "total " + str(report.total) + " = m_list(7,28)";
}

// 9. Blow-ups.
void criterion_blowups(Context& ctx, Audit& audit, std::string& detail) {
    const auto fano14 = ctx.record("fano blow-up", blow_up_design_decomposition(projective_plane(2), 14));
    audit.expect(fano14.total >= Rational(91, 3), "Fano blow-up total " + str(fano14.total));
    const auto tri = ctx.record("triangular", triangular_decomposition(2, 6));
    audit.expect(tri.total == Rational(7), "triangular total " + str(tri.total));

    Decomposition k2;
    k2.n = 2;
    k2.parts = {complete(2)};
    k2.name = "K2";
    const Decomposition fano = construct_from_design(projective_plane(2));
    struct Case {
        const Decomposition* base;
        int t;
    };
    std::string totals;
    for (const Case& c : {Case{&k2, 3}, Case{&fano, 2}, Case{&fano, 1}}) {
        const Rational base_total = validate(*c.base).total;
        const Decomposition blown = recursive_blowup(*c.base, c.t);
        const auto report = ctx.record("recursive blow-up", blown);
        const Rational bound = recursive_bound(base_total, c.base->n, c.t);
        audit.expect(blown.k() == c.base->k() + c.base->n && blown.n == c.t * c.base->n, "recursive shape wrong");
        audit.expect(report.total >= bound, "recursive total " + str(report.total) + " below " + str(bound));
        if (c.t == 1) audit.expect(report.total == base_total, "t=1 changed the total");
        totals += (totals.empty() ? "" : ", ") + str(report.total) + ">=" + str(bound);
    }
    detail = "Fano K_14 " + str(fano14.total) + ", triangular " + str(tri.total) + ", recursive " + totals;
}

// 10. Global caps over everything produced.
void criterion_caps(Context& ctx, Audit& audit, std::string& detail) {
    for (const auto& [origin, d] : ctx.produced) {
        const MadSumReport report = validate(d);
        const std::int64_t pairs = choose2(d.n);
        if (pairs >= 1) {
            const Rational cap = m_list(std::min<std::int64_t>(d.k(), pairs), pairs);
            audit.expect(report.total <= cap, origin + " on K_" + std::to_string(d.n) + ": total " + str(report.total) +
                                                  " above M^L " + str(cap));
        }
        const Surd root = report.sqrt_cap;
        const Interval box = root.enclose(48);
        audit.expect(root > report.total && box.hi > report.total,
                     origin + " on K_" + std::to_string(d.n) + ": total not below sqrt(k)*n");
    }
    detail = std::to_string(ctx.produced.size()) + " decompositions audited";
}

// 11. Clique, colouring and connectivity sums.
void criterion_param_sums(Context& ctx, Audit& audit, std::string& detail) {
    struct Named {
        std::string name;
        Decomposition d;
    };
    const std::vector<Named> cases = {
        {"Fano/K_7", construct_from_design(projective_plane(2))},
        {"STS(9)/K_9", construct_from_design(steiner_triple_system(9))},
        {"PG(2,3)/K_13", construct_from_design(projective_plane(3))},
    };
    std::string sums;
    for (const auto& c : cases) {
        ctx.produced.push_back({c.name, c.d});
        const ParameterSums check = check_parameter_sums(c.d);
        audit.expect(check.passed, c.name + ": invariant sums disagree with floor(total)");
        sums += (sums.empty() ? "" : ", ") + c.name + " sum omega " + std::to_string(check.sum_omega);
    }
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int i = 0; i < 1000; ++i) {
        const Graph g = random_graph(uniform(ctx.rng, 1, 10), density(ctx.rng), ctx.rng);
        const int omega = clique_number(g), chi = chromatic_number(g), col = degeneracy(g) + 1;
        audit.expect(mad_value(g) + Rational(1) >= Rational(col) && col >= chi && chi >= omega,
                     "chain Mad+1 >= col >= chi >= omega fails on random graph " + std::to_string(i));
    }
    detail = sums + "; chain on 1000 random graphs";
}

// 12. Apex and edge-splitting transforms.
void criterion_transforms(Context& ctx, Audit& audit, std::string& detail) {
    Rational min_apex(1000), min_split(1000);
    for (int i = 0; i < 200; ++i) {
        const int n = uniform(ctx.rng, 3, 8);
        const int k = uniform(ctx.rng, 1, static_cast<int>(std::min<std::int64_t>(8, choose2(n) - 1)));
        const Decomposition d = random_decomposition(n, k, ctx.rng);
        const Rational base = ctx.record("random decomposition", d).total;
        const Rational apex = ctx.record("apex_extend", apex_extend(d)).total - base;
        const Rational split = ctx.record("split_edge", split_edge(d)).total - base;
        audit.expect(apex >= Rational(1), "apex delta " + str(apex));
        audit.expect(split >= Rational(1, 3), "split delta " + str(split));
        min_apex = min(min_apex, apex);
        min_split = min(min_split, split);
    }
    detail = "200 decompositions; min apex delta " + str(min_apex) + ", min split delta " + str(min_split);
}

struct Criterion {
    int id;
    const char* title;
    double limit;
    void (*run)(Context&, Audit&, std::string&);
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
    // Criterion 10 runs last so it sees every decomposition.
    const std::vector<Criterion> criteria = {
        {1, "Mad flow equals subset enumeration", 60, criterion_mad},
        {2, "g(m) formula and exhaustive upper bound", 120, criterion_g},
        {3, "M^L closed form equals dynamic program", 10, criterion_mlist},
        {4, "normalization trajectories", 300, criterion_normalize},
        {5, "two-part optimum", 600, criterion_k2},
        {6, "finite plane decompositions", 30, criterion_planes},
        {7, "upper range and leave graphs", 60, criterion_psts},
        {8, "seven parts of K_8", 10, criterion_k8},
        {9, "blow-up constructions", 60, criterion_blowups},
        {11, "invariant sums and colouring chain", 120, criterion_param_sums},
        {12, "apex and edge-split increments", 60, criterion_transforms},
        {10, "global caps M^L and sqrt(k) n", 120, criterion_caps},
    };
    Context ctx{Rng(options.seed), {}};
    std::vector<CriterionResult> results;
    for (const auto& c : criteria) {
        CriterionResult r;
        r.id = c.id;
        r.title = c.title;
        r.limit_seconds = c.limit;
        Audit audit;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(ctx, audit, r.detail);
        } catch (const std::exception& ex) {
            audit.expect(false, std::string("exception: ") + ex.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        audit.expect(r.seconds <= c.limit, "time limit exceeded");
        r.passed = audit.ok();
        if (!r.passed) r.detail = audit.failure();
        if (options.progress) *options.progress << format_result(r) << std::endl;
        results.push_back(std::move(r));
    }
    std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return results;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream out;
    out << "criterion " << std::setw(2) << r.id << " " << (r.passed ? "PASS" : "FAIL") << "  " << r.title << " ["
        << std::fixed << std::setprecision(2) << r.seconds << "s / " << std::setprecision(0) << r.limit_seconds
        << "s] " << r.detail;
    return out.str();
}

}  // namespace madgad

// Command-line front end: every command prints one JSON report (or an
// aligned table with --table). Exit status: 0 ok, 1 validation failure,
// 2 usage or domain error, 3 oracle budget refusal.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "madgad/acceptance.hpp"
#include "madgad/decomp.hpp"
#include "madgad/designs.hpp"
#include "madgad/errors.hpp"
#include "madgad/formulas.hpp"
#include "madgad/io.hpp"
#include "madgad/mad.hpp"
#include "madgad/normalize.hpp"
#include "madgad/oracle.hpp"

using namespace madgad;

namespace {

struct Globals {
    std::string out;
    std::uint64_t seed = 1;
    int budget_n = 0;
    int budget_k = 0;
    std::string trace;
    bool table = false;
    bool timing = false;
};

// Exit status for a failed selftest or verify.
struct Failed {
    Json report;
};

std::string render_table(const Json& report) {
    std::size_t width = 0;
    for (const auto& [key, _] : report.items()) width = std::max(width, key.size());
    std::ostringstream out;
    for (const auto& [key, value] : report.items()) {
        out << std::left << std::setw(static_cast<int>(width)) << key << "  ";
        if (value.is_string()) out << value.get<std::string>() << "\n";
        else if (value.is_array() && !value.empty() && value.front().is_object()) {
            out << "\n";
            for (const auto& row : value) out << "  " << row.dump() << "\n";
        } else out << value.dump() << "\n";
    }
    return out.str();
}

void emit(const Globals& g, const Json& report) {
    const std::string text = g.table ? render_table(report) : report.dump(2) + "\n";
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(g.out);
    if (!file) throw DomainError("cannot write " + g.out);
    file << text;
}

Json multiset_json(const GraphList& list) {
    Json out = Json::array();
    for (const auto& e : list)
        out.push_back({{"count", e.count}, {"label", e.label}, {"edges", e.graph.size()}, {"graph", graph_to_json(e.graph)}});
    return out;
}

Json surd_json(const Surd& s) {
    const Interval box = s.enclose(40);
    return {{"exact", s.to_string()}, {"lower", rational_to_json(box.lo)}, {"upper", rational_to_json(box.hi)},
            {"approx", s.approx()}};
}

std::vector<Graph> read_graph_list(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_input(path));
    } catch (const Json::exception& ex) {
        throw DomainError(std::string("input is not JSON: ") + ex.what());
    }
    std::vector<Graph> graphs;
    const Json* items = &j;
    if (j.is_object() && j.contains("parts")) items = &j.at("parts");
    else if (j.is_object() && j.contains("graphs")) items = &j.at("graphs");
    if (!items->is_array()) throw DomainError("expected a decomposition, {\"graphs\": [...]} or an array of graphs");
    for (const auto& item : *items) {
        if (item.contains("count") && item.contains("graph")) {
            const Graph g = graph_from_json(item.at("graph"));
            for (std::int64_t c = 0; c < item.at("count").get<std::int64_t>(); ++c) graphs.push_back(g);
        } else {
            graphs.push_back(graph_from_json(item));
        }
    }
    return graphs;
}

Decomposition read_decomposition(const std::string& path) {
    try {
        return decomposition_from_json(Json::parse(read_input(path)));
    } catch (const Json::exception& ex) {
        throw DomainError(std::string("input is not JSON: ") + ex.what());
    }
}

BlockDesign read_design(const std::string& path) {
    try {
        return design_from_json(Json::parse(read_input(path)));
    } catch (const Json::exception& ex) {
        throw DomainError(std::string("input is not JSON: ") + ex.what());
    }
}

Json decomposition_report(const Decomposition& d, const std::string& source) {
    Json j = decomposition_to_json(d);
    j["source"] = source;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact maximum average degree toolkit"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_option("--out", g.out, "Write the report to this file");
    app.add_option("--seed", g.seed, "Seed for randomized constructions");
    app.add_option("--budget-n", g.budget_n, "Oracle vertex budget");
    app.add_option("--budget-k", g.budget_k, "Oracle part budget");
    app.add_option("--trace", g.trace, "normalize: write the full step log here");
    app.add_flag("--table", g.table, "Aligned text instead of JSON");
    app.add_flag("--timing", g.timing, "Add wall-clock seconds to the report");

    std::function<Json()> action;
    std::string command;
    auto on = [&](CLI::App* sub, std::string name, std::function<Json()> f) {
        sub->callback([&, name, f] {
            command = name;
            action = f;
        });
    };

    // mad
    std::string mad_file = "-";
    auto* mad_cmd = app.add_subcommand("mad", "Exact Mad with a witness set");
    mad_cmd->add_option("file", mad_file, "Graph file (text or JSON), - for stdin");
    on(mad_cmd, "mad", [&] {
        const Graph graph = parse_graph(read_input(mad_file));
        const MadCertificate c = mad(graph);
        return Json{{"inputs", {{"file", mad_file}, {"n", graph.order()}, {"m", graph.size()}}},
                    {"mad", rational_to_json(c.value)},
                    {"value", rational_to_json(c.value)},
                    {"witness", vertex_set_to_json(c.witness)},
                    {"source", "parametric min-cut"}};
    });

    // formula
    std::int64_t fk = 0, fn = 0, fm = 0, fN = 0, ft = 0, fq = 0;
    int fcase = 0;
    std::string fratio;
    std::optional<std::int64_t> fplan_n;
    auto* formula = app.add_subcommand("formula", "Closed-form values");
    formula->require_subcommand(1);
    auto* f_g = formula->add_subcommand("g", "Max Mad over graphs with m edges");
    f_g->add_option("--m", fm)->required();
    on(f_g, "formula g", [&] {
        const auto [p, r] = clique_split(fm);
        return Json{{"inputs", {{"m", fm}}},
                    {"value", rational_to_json(g_max_mad(fm))},
                    {"p", p},
                    {"r", r},
                    {"source", "g(m) = max{p-1, 2m/(p+1)}"}};
    });
    auto* f_triple = formula->add_subcommand("triple", "Parameters (p,q,r) of N over k parts");
    f_triple->add_option("--k", fk)->required();
    f_triple->add_option("--N", fN)->required();
    on(f_triple, "formula triple", [&] {
        const ParamTriple t = param_triple(fk, fN);
        return Json{{"inputs", {{"k", fk}, {"N", fN}}}, {"p", t.p}, {"q", t.q}, {"r", t.r}, {"source", "param_triple"}};
    });
    auto* f_mlist = formula->add_subcommand("mlist", "List optimum M^L(k,N)");
    f_mlist->add_option("--k", fk)->required();
    f_mlist->add_option("--N", fN)->required();
    on(f_mlist, "formula mlist", [&] {
        const ParamTriple t = param_triple(fk, fN);
        return Json{{"inputs", {{"k", fk}, {"N", fN}}},
                    {"value", rational_to_json(m_list(fk, fN))},
                    {"p", t.p},
                    {"q", t.q},
                    {"r", t.r},
                    {"multiset", multiset_json(m_list_extremal_multiset(fk, fN))},
                    {"source", "list optimum formula"}};
    });
    auto* f_mbound = formula->add_subcommand("mbound", "Upper bound M^L(k, C(n,2)) for M(k,n)");
    f_mbound->add_option("--k", fk)->required();
    f_mbound->add_option("--n", fn)->required();
    on(f_mbound, "formula mbound", [&] {
        return Json{{"inputs", {{"k", fk}, {"n", fn}}},
                    {"value", rational_to_json(m_upper_bound(fk, fn))},
                    {"source", "list optimum formula at N = C(n,2)"}};
    });
    auto* f_m2 = formula->add_subcommand("m2", "Exact M(2,n)");
    f_m2->add_option("--n", fn)->required();
    on(f_m2, "formula m2", [&] {
        return Json{{"inputs", {{"n", fn}}}, {"value", rational_to_json(m_two(fn))}, {"source", "two-part optimum"}};
    });
    auto* f_psts = formula->add_subcommand("psts", "M(C(n,2)-t, n) from triangles, edges and one P_3");
    f_psts->add_option("--n", fn)->required();
    f_psts->add_option("--t", ft)->required();
    on(f_psts, "formula psts", [&] {
        const UpperRange u = m_upper_range(fn, ft);
        return Json{{"inputs", {{"n", fn}, {"t", ft}}},
                    {"k", choose2(fn) - ft},
                    {"value", rational_to_json(u.value)},
                    {"multiset", multiset_json(u.multiset)},
                    {"source", "upper-range formula"}};
    });
    auto* f_sqrt = formula->add_subcommand("sqrt", "Square-root upper bounds");
    f_sqrt->add_option("--k", fk)->required();
    f_sqrt->add_option("--n", fn)->required();
    on(f_sqrt, "formula sqrt", [&] {
        const SqrtBounds b = sqrt_upper_bounds(fk, fn);
        return Json{{"inputs", {{"k", fk}, {"n", fn}}},
                    {"convex", surd_json(b.convex)},
                    {"sqrt_2kN", surd_json(b.two_k_n)},
                    {"sqrt_k_n", surd_json(b.sqrt_k_times_n)},
                    {"source", "convex relaxation and sqrt(k) n cap"}};
    });
    auto* f_lower = formula->add_subcommand("lower", "Best known lower bound for M(k,n) from the construction catalog");
    f_lower->add_option("--k", fk)->required();
    f_lower->add_option("--n", fn)->required();
    on(f_lower, "formula lower", [&] {
        const LowerBoundTable table = lower_bound_table(fk, fn);
        Json candidates = Json::array();
        for (const auto& c : table.candidates)
            candidates.push_back({{"value", rational_to_json(c.value)}, {"source", c.source}, {"exact", c.exact}});
        Json j{{"inputs", {{"k", fk}, {"n", fn}}}, {"candidates", candidates}};
        if (table.best) {
            j["value"] = rational_to_json(table.best->value);
            j["source"] = table.best->source;
            j["exact"] = table.best->exact;
        } else {
            j["value"] = nullptr;
            j["source"] = "none applicable";
        }
        return j;
    });
    auto* f_plane = formula->add_subcommand("plane", "Finite-plane optimum, cases 1..5");
    f_plane->add_option("--case", fcase)->required();
    f_plane->add_option("--q", fq)->required();
    on(f_plane, "formula plane", [&] {
        const PlaneCase c = plane_case(fcase, fq);
        return Json{{"inputs", {{"case", fcase}, {"q", fq}}},
                    {"k", c.k},
                    {"n", c.n},
                    {"value", rational_to_json(c.value)},
                    {"source", "plane case " + std::to_string(fcase)}};
    });
    auto* f_prop = formula->add_subcommand("proportional", "K_p / K_{p+1} mixture with C(n,2)/ratio members");
    f_prop->add_option("--ratio", fratio)->required();
    f_prop->add_option("--n", fplan_n);
    on(f_prop, "formula proportional", [&] {
        const ProportionalPlan plan = proportional_plan(Rational::parse(fratio), fplan_n);
        Json j{{"inputs", {{"ratio", fratio}}},
               {"p", plan.p},
               {"x", rational_to_json(plan.x)},
               {"feasible", plan.feasible},
               {"source", "proportional mixture"}};
        if (plan.n) {
            j["inputs"]["n"] = *plan.n;
            j["k"] = plan.k;
            j["count_kp"] = plan.count_kp;
            j["count_kp1"] = plan.count_kp1;
        }
        if (!plan.reason.empty()) j["reason"] = plan.reason;
        return j;
    });

    // design
    int dn = 0, dq = 0;
    std::string dplane = "pg", dmode = "point";
    auto* design = app.add_subcommand("design", "Block designs as JSON");
    design->require_subcommand(1);
    auto design_json = [&](const BlockDesign& d) {
        Json j = design_to_json(d);
        j["blocks_by_size"] = block_size_census(d);
        return j;
    };
    auto* d_sts = design->add_subcommand("sts", "Steiner triple system");
    d_sts->add_option("--n", dn)->required();
    on(d_sts, "design sts", [&] { return design_json(steiner_triple_system(dn)); });
    auto* d_psts = design->add_subcommand("psts", "Maximum partial triple system and its leave");
    d_psts->add_option("--n", dn)->required();
    on(d_psts, "design psts", [&] {
        const PackingResult r = max_partial_triple_system(dn, g.seed);
        Json j = design_json(r.design);
        j["leave"] = graph_to_json(r.leave);
        return j;
    });
    auto* d_pg = design->add_subcommand("pg", "Projective plane PG(2,q)");
    d_pg->add_option("--q", dq)->required();
    on(d_pg, "design pg", [&] { return design_json(projective_plane(dq)); });
    auto* d_ag = design->add_subcommand("ag", "Affine plane AG(2,q)");
    d_ag->add_option("--q", dq)->required();
    on(d_ag, "design ag", [&] { return design_json(affine_plane(dq)); });
    auto* d_trunc = design->add_subcommand("truncate", "Plane with a point or a line deleted");
    d_trunc->add_option("--q", dq)->required();
    d_trunc->add_option("--plane", dplane)->check(CLI::IsMember({"pg", "ag"}));
    d_trunc->add_option("--mode", dmode)->check(CLI::IsMember({"point", "line"}));
    on(d_trunc, "design truncate", [&] {
        const BlockDesign base = dplane == "pg" ? projective_plane(dq) : affine_plane(dq);
        return design_json(truncate_plane(base, dmode == "point" ? TruncateMode::DeletePoint : TruncateMode::DeleteLine));
    });
    auto* d_cyclic = design->add_subcommand("cyclic", "PG(2,q) from a perfect difference set");
    d_cyclic->add_option("--q", dq)->required();
    on(d_cyclic, "design cyclic", [&] {
        const CyclicPlane c = cyclic_plane_difference_set(dq);
        Json j = design_json(c.design);
        j["difference_set"] = c.difference_set;
        return j;
    });

    // construct
    std::string cname, cvariant = "A", cdesign, cin, csubsets;
    int cn = 0, ck = 0, ct = 0, cq = 0, cr = 0;
    auto* construct = app.add_subcommand("construct", "Build a decomposition or packing of K_n");
    construct
        ->add_option("name", cname,
                     "k2 | small-k | k7-k8 | design | psts | blow-up | plane-r | triangular | recursive | apex | "
                     "split | canonical")
        ->required();
    construct->add_option("--n", cn);
    construct->add_option("--k", ck);
    construct->add_option("--t", ct);
    construct->add_option("--q", cq);
    construct->add_option("--r", cr);
    construct->add_option("--variant", cvariant)->check(CLI::IsMember({"A", "B"}));
    construct->add_option("--design", cdesign, "Design JSON file");
    construct->add_option("--in", cin, "Decomposition JSON file");
    construct->add_option("--subsets", csubsets, "JSON array of vertex lists");
    on(construct, "construct", [&] {
        auto need = [](bool ok, const char* what) {
            if (!ok) throw DomainError(std::string("construct: missing ") + what);
        };
        const std::map<std::string, std::function<Decomposition()>> builders = {
            {"k2", [&] { need(cn > 0, "--n"); return construct_k2(cn); }},
            {"small-k",
             [&] {
                 need(cn > 0 && ck > 0, "--k and --n");
                 return construct_small_k(ck, cn, cvariant == "A" ? SmallKVariant::A : SmallKVariant::B);
             }},
            {"k7-k8", [&] { return construct_k7_K8(); }},
            {"design", [&] { need(!cdesign.empty(), "--design"); return construct_from_design(read_design(cdesign)); }},
            {"psts", [&] { need(cn > 0, "--n"); return construct_psts_decomposition(cn, ct); }},
            {"blow-up",
             [&] {
                 need(cn > 0, "--n");
                 const BlockDesign base = !cdesign.empty() ? read_design(cdesign) : projective_plane(cq > 0 ? cq : 2);
                 return blow_up_design_decomposition(base, cn);
             }},
            {"plane-r", [&] { need(cq > 0 && cn > 0, "--q, --r and --n"); return plane_plus_r_decomposition(cq, cr, cn); }},
            {"triangular", [&] { need(ct > 0 && cn > 0, "--t and --n"); return triangular_decomposition(ct, cn); }},
            {"recursive", [&] { need(!cin.empty() && ct > 0, "--in and --t"); return recursive_blowup(read_decomposition(cin), ct); }},
            {"apex", [&] { need(!cin.empty(), "--in"); return apex_extend(read_decomposition(cin)); }},
            {"split", [&] { need(!cin.empty(), "--in"); return split_edge(read_decomposition(cin)); }},
            {"canonical",
             [&] {
                 need(cn > 0 && !csubsets.empty(), "--n and --subsets");
                 std::vector<VertexSet> subsets;
                 try {
                     subsets = Json::parse(csubsets).get<std::vector<VertexSet>>();
                 } catch (const Json::exception& ex) {
                     throw DomainError(std::string("--subsets: ") + ex.what());
                 }
                 return canonicalize_packing(cn, subsets);
             }},
        };
        const auto builder = builders.find(cname);
        if (builder == builders.end()) throw DomainError("unknown construction '" + cname + "'");
        const Decomposition d = builder->second();
        const MadSumReport checked = validate(d);
        Json j = decomposition_report(d, d.name.empty() ? cname : d.name);
        j["k"] = d.k();
        j["total"] = rational_to_json(checked.total);
        return j;
    });

    // verify
    std::string vfile = "-";
    auto* verify = app.add_subcommand("verify", "Validate a decomposition and certify its Mad-sum");
    verify->add_option("file", vfile, "Decomposition JSON, - for stdin");
    on(verify, "verify", [&] {
        const Decomposition d = read_decomposition(vfile);
        Json j;
        try {
            j = report_to_json(validate(d));
        } catch (const ValidationError& ex) {
            throw Failed{{{"command", "verify"}, {"valid", false}, {"error", ex.what()}}};
        }
        j["valid"] = true;
        j["n"] = d.n;
        j["k"] = d.k();
        j["mode"] = mode_name(d.mode);
        j["source"] = d.name.empty() ? std::string("input") : d.name;
        return j;
    });

    // normalize
    std::string nfile = "-";
    std::optional<std::int64_t> nk, nN;
    auto* norm = app.add_subcommand("normalize", "Rewrite a list of graphs to the representative of (k,N)");
    norm->add_option("file", nfile, "Decomposition or graph-list JSON, - for stdin");
    norm->add_option("--k", nk, "Expected number of graphs");
    norm->add_option("--N", nN, "Expected total edge count");
    on(norm, "normalize", [&] {
        const std::vector<Graph> graphs = read_graph_list(nfile);
        std::int64_t total = 0;
        for (const auto& graph : graphs) total += graph.size();
        const std::int64_t k = nk.value_or(static_cast<std::int64_t>(graphs.size()));
        const std::int64_t n_edges = nN.value_or(total);
        const NormalizationState state = normalize(graphs, k, n_edges);
        const Json full = state_to_json(state);
        if (!g.trace.empty()) {
            std::ofstream trace(g.trace);
            if (!trace) throw DomainError("cannot write " + g.trace);
            trace << full.dump(2) << "\n";
        }
        Json j{{"inputs", {{"file", nfile}, {"k", k}, {"N", n_edges}}},
               {"items", full.at("items")},
               {"mad_sum", full.at("mad_sum")},
               {"input_mad_sum", full.at("input_mad_sum")},
               {"steps", state.log.size()},
               {"terminal_shape", has_terminal_shape(state)},
               {"source", "normalization rules 3a-3e"}};
        if (n_edges >= k) j["m_list"] = rational_to_json(m_list(k, n_edges));
        return j;
    });

    // oracle
    std::string ofile = "-";
    int ok_ = 0, on_ = 0;
    std::int64_t oN = 0;
    double otime = 0;
    auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth within a budget");
    oracle->require_subcommand(1);
    auto* o_mad = oracle->add_subcommand("mad", "Mad by subset enumeration");
    o_mad->add_option("file", ofile);
    on(o_mad, "oracle mad", [&] {
        OracleBudget budget;
        if (g.budget_n > 0) budget.max_vertices = g.budget_n;
        const MadCertificate c = mad_bruteforce(parse_graph(read_input(ofile)), budget);
        return Json{{"inputs", {{"file", ofile}}},
                    {"value", rational_to_json(c.value)},
                    {"witness", vertex_set_to_json(c.witness)},
                    {"source", "oracle"}};
    });
    auto* o_mlist = oracle->add_subcommand("mlist", "M^L(k,N) by dynamic programming");
    o_mlist->add_option("--k", ok_)->required();
    o_mlist->add_option("--N", oN)->required();
    on(o_mlist, "oracle mlist", [&] {
        OracleBudget budget;
        if (g.budget_k > 0) budget.max_k = g.budget_k;
        return Json{{"inputs", {{"k", ok_}, {"N", oN}}},
                    {"value", rational_to_json(m_list_dp(ok_, oN, budget))},
                    {"source", "oracle"}};
    });
    auto* o_mkn = oracle->add_subcommand("mkn", "M(k,n) by subset-tuple search");
    o_mkn->add_option("--k", ok_)->required();
    o_mkn->add_option("--n", on_)->required();
    o_mkn->add_option("--time-limit", otime, "Seconds before refusing (0 = none)");
    on(o_mkn, "oracle mkn", [&] {
        OracleBudget budget{7, 4, 200, otime};
        if (g.budget_n > 0) budget.max_vertices = g.budget_n;
        if (g.budget_k > 0) budget.max_k = g.budget_k;
        const SubsetSearchResult r = m_kn_search(ok_, on_, budget);
        Json subsets = Json::array();
        for (const auto& s : r.subsets) subsets.push_back(vertex_set_to_json(s));
        Json j{{"inputs", {{"k", ok_}, {"n", on_}}},
               {"value", rational_to_json(r.value)},
               {"subsets", subsets},
               {"tuples_evaluated", r.tuples_evaluated},
               {"source", "oracle"}};
        if (ok_ >= 2 && ok_ <= choose2(on_) && on_ >= 3) j["upper_bound"] = rational_to_json(m_upper_bound(ok_, on_));
        return j;
    });
    auto* o_inv = oracle->add_subcommand("invariants", "Clique, colouring, degeneracy and connectivity invariants");
    o_inv->add_option("file", ofile);
    on(o_inv, "oracle invariants", [&] {
        OracleBudget budget{12, 10, 100000, 0};
        if (g.budget_n > 0) budget.max_vertices = g.budget_n;
        const Graph graph = parse_graph(read_input(ofile));
        Json j = invariants_to_json(invariants_small(graph, budget));
        j["inputs"] = {{"file", ofile}};
        j["mad"] = rational_to_json(mad_value(graph));
        j["source"] = "oracle";
        return j;
    });
    auto* o_pp = oracle->add_subcommand("param-sums", "Invariant sums of a clique-type decomposition");
    o_pp->add_option("file", ofile);
    on(o_pp, "oracle param-sums", [&] {
        const ParameterSums c = check_parameter_sums(read_decomposition(ofile));
        return Json{{"inputs", {{"file", ofile}}},
                    {"passed", c.passed},
                    {"k", c.k},
                    {"total", rational_to_json(c.total)},
                    {"floor_total", c.floor_total},
                    {"sum_omega", c.sum_omega},
                    {"sum_chi", c.sum_chi},
                    {"sum_col", c.sum_col},
                    {"sum_degeneracy", c.sum_degeneracy},
                    {"sum_kappa_plus", c.sum_kappa},
                    {"sum_lambda_plus", c.sum_lambda},
                    {"source", "oracle"}};
    });

    // selftest
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
    on(selftest, "selftest", [&] {
        AcceptanceOptions options;
        if (g.table) options.progress = &std::cerr;
        const auto results = run_acceptance(options);
        Json rows = Json::array();
        bool all = true;
        for (const auto& r : results) {
            rows.push_back({{"id", r.id},
                            {"title", r.title},
                            {"passed", r.passed},
                            {"seconds", r.seconds},
                            {"limit_seconds", r.limit_seconds},
                            {"detail", r.detail}});
            all = all && r.passed;
        }
        Json j{{"passed", all}, {"criteria", rows}, {"source", "acceptance suite"}};
        if (!all) throw Failed{j};
        return j;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    auto finish = [&](Json report) {
        report["command"] = command;
        if (g.timing) report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        emit(g, report);
    };
    try {
        finish(action());
        return 0;
    } catch (const Failed& f) {
        finish(f.report);
        return 1;
    } catch (const ValidationError& ex) {
        std::cerr << "validation error: " << ex.what() << "\n";
        return 1;
    } catch (const BudgetExceeded& ex) {
        std::cerr << "refused: " << ex.what() << "\n";
        return 3;
    } catch (const DomainError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 1;
    }
}

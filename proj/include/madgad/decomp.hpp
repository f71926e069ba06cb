#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "madgad/designs.hpp"
#include "madgad/graph.hpp"
#include "madgad/io.hpp"
#include "madgad/mad.hpp"
#include "madgad/surd.hpp"

namespace madgad {

enum class DecompositionMode { Packing, Decomposition };

/// Ordered list of edge-disjoint spanning subgraphs of K_n. In Decomposition
/// mode the parts cover E(K_n) exactly.
struct Decomposition {
    int n = 0;
    std::vector<Graph> parts;
    DecompositionMode mode = DecompositionMode::Decomposition;
    /// Construction that produced it, for reports.
    std::string name;

    std::int64_t k() const { return static_cast<std::int64_t>(parts.size()); }
};

const char* mode_name(DecompositionMode mode);

struct MadSumReport {
    std::vector<MadCertificate> parts;
    Rational total;
    /// m_list(k, C(n,2)); absent when k > C(n,2) or n < 2.
    std::optional<Rational> upper_bound;
    Surd sqrt_cap = Surd::sqrt_of(0);  // sqrt(k) * n
    bool within_upper_bound = true;
    bool below_sqrt_cap = true;
};

/// Checks part orders, edge-disjointness and (in Decomposition mode)
/// coverage; throws ValidationError listing offending pairs. Then certifies
/// every part's Mad.
MadSumReport validate(const Decomposition& d);

/// Part 1 is a clique on floor((n+1)/2) vertices, part 2 its complement.
Decomposition construct_k2(int n);

enum class SmallKVariant { A, B };
/// First-Fit realizations for k in 3..6 from three near-equal sets (A) or
/// two halves and their halves (B).
Decomposition construct_small_k(int k, int n, SmallKVariant variant);

/// Seven parts of K_8: Fano triangles on 0..6, the three blocks through 0
/// extended by vertex 7 (one K_4 and two K_4 - e).
Decomposition construct_k7_K8();

/// One clique part per block.
Decomposition construct_from_design(const BlockDesign& d);

/// k = C(n,2) - t: t/2 triangles (or (t-1)/2 triangles and one P_3) and
/// single edges, taken from a maximum triangle packing.
Decomposition construct_psts_decomposition(int n, std::int64_t t);

/// Blocks of a complete design on v points, points replaced by classes of
/// n/v vertices; intra-class edges go round-robin to parts containing the class.
Decomposition blow_up_design_decomposition(const BlockDesign& d, int n);

/// k = q^2+q+1+r parts from a cyclic plane blown up to n vertices.
Decomposition plane_plus_r_decomposition(int q, int r, int n);

/// t cliques on classes of size n/t plus all bipartite class pairs.
Decomposition triangular_decomposition(int t, int n);

/// New vertex n joined to everything inside the last part.
Decomposition apex_extend(const Decomposition& d);
/// Moves one edge of a part with most edges into a new K_2 part, preferring
/// a free edge.
Decomposition split_edge(const Decomposition& d);

/// Each vertex becomes a class of t vertices; parts are blown up and the b
/// class cliques are appended.
Decomposition recursive_blowup(const Decomposition& d, int t);

/// Stable-sorts the subsets by size, then assigns to part j every pair inside
/// X_j not used by an earlier part.
Decomposition canonicalize_packing(int n, std::vector<VertexSet> subsets);

/// Incidence graph between the k parts (vertices 0..k-1) and the points
/// (k..k+n-1) of each part's Mad witness. Requires the witnesses to be
/// cliques; asserts the result has no 4-cycle.
Graph packing_to_c4free_bipartite(const Decomposition& d);
bool has_four_cycle_bipartite(const Graph& g, int left);

Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);
Json report_to_json(const MadSumReport& r);

}  // namespace madgad

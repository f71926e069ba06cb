#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "madgad/graph.hpp"
#include "madgad/io.hpp"

namespace madgad {

enum class DesignSource { Bose, Skolem, Projective, Affine, Truncated, DifferenceSet, Greedy, Input };

const char* source_name(DesignSource source);

/// Point set {0..points-1} with blocks (sorted point lists).
///
/// `complete` designs cover every pair exactly once; otherwise at most once.
struct BlockDesign {
    int points = 0;
    std::vector<VertexSet> blocks;
    DesignSource source = DesignSource::Input;
    bool complete = false;
    /// Plane order for PG/AG-derived designs, 0 otherwise.
    int plane_order = 0;
};

/// Throws ValidationError naming the first pair covered twice (or, for
/// complete designs, never).
void validate_design(const BlockDesign& d);
/// Number of blocks of each size, indexed by size.
std::vector<std::int64_t> block_size_census(const BlockDesign& d);

/// Bose construction for n = 3 (mod 6), Skolem for n = 1 (mod 6); n >= 3.
BlockDesign steiner_triple_system(int n);

struct PackingResult {
    BlockDesign design;
    Graph leave;
};

/// Maximum set of edge-disjoint triangles in K_n, with its leave graph.
/// Residues 1,3 use the Steiner system, 0,2 delete a point of STS(n+1), and
/// 4,5 run seeded hill-climbing to the known maximum size. The leave is
/// checked against its forced shape before returning.
PackingResult max_partial_triple_system(int n, std::uint64_t seed = 1);

/// Largest number of edge-disjoint triangles in K_n.
std::int64_t max_triangle_packing_size(int n);
/// Whether `leave` has the shape forced for an optimal packing of K_n.
bool leave_matches_table(int n, const Graph& leave);

/// Orders for which the Galois field is available.
bool plane_order_supported(int q);
BlockDesign projective_plane(int q);
BlockDesign affine_plane(int q);

enum class TruncateMode { DeletePoint, DeleteLine };
/// DeletePoint removes point 0 from every block; DeleteLine (affine planes
/// only) removes the points of block 0 from all lines meeting it and drops it.
BlockDesign truncate_plane(const BlockDesign& d, TruncateMode mode);

struct CyclicPlane {
    BlockDesign design;            // block i is D + i (mod v) and contains point i
    std::vector<int> difference_set;  // contains 0
};
/// PG(2,q) from a perfect difference set; q in {2,3,4,5,7,8}.
CyclicPlane cyclic_plane_difference_set(int q);
/// Every non-zero residue mod v arises exactly once as a difference.
bool is_perfect_difference_set(const std::vector<int>& d, int v);

Json design_to_json(const BlockDesign& d);
BlockDesign design_from_json(const Json& j);

}  // namespace madgad

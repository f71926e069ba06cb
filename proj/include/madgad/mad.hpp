#pragma once

#include "madgad/graph.hpp"
#include "madgad/rational.hpp"

namespace madgad {

/// Exact maximum average degree plus a vertex set attaining it.
struct MadCertificate {
    Rational value;
    VertexSet witness;
};

/// Exact Mad(g) with the canonical witness: among all vertex sets of maximum
/// density, those of minimum cardinality, and among them the lexicographically
/// least. That set is always connected.
///
/// Edgeless graphs give value 0 with witness {0}; the order-0 graph gives
/// value 0 with an empty witness.
MadCertificate mad(const Graph& g);

/// Mad(g) without witness canonicalization (one parametric cut sequence).
Rational mad_value(const Graph& g);

/// True iff deleting e leaves Mad unchanged. Throws DomainError if e is not an
/// edge of g.
bool is_free_edge(const Graph& g, Edge e);

/// Density 2e(S)/|S| of a non-empty vertex set.
Rational density(const Graph& g, const VertexSet& s);

}  // namespace madgad

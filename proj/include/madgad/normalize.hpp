#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "madgad/decomp.hpp"
#include "madgad/formulas.hpp"
#include "madgad/io.hpp"
#include "madgad/rational.hpp"

namespace madgad {

/// (p, r) with e = C(p,2) + r and 0 <= r < p; K_{p+1} is (p+1, 0).
struct ItemDescriptor {
    std::int64_t p = 1;
    std::int64_t r = 0;
    friend bool operator==(const ItemDescriptor&, const ItemDescriptor&) = default;
};

enum class ItemType { A, B, C };

ItemDescriptor describe(std::int64_t edges);
/// A: r = 0. B: 2r >= p - 1. C: otherwise. The tie 2r = p - 1 is B.
ItemType item_type(const ItemDescriptor& d);
/// Mad of the representative with that many edges (0 for no edges).
Rational item_mad(std::int64_t edges);

struct ItemChange {
    std::size_t index = 0;
    ItemDescriptor before;
    ItemDescriptor after;
};

struct NormalizationStep {
    std::string rule;  // "3a", "3b", "3b-complete", "3c", "3d-fill", "3d-grow", "3e"
    std::vector<ItemChange> changes;
    std::int64_t spare_before = 0;
    std::int64_t spare_after = 0;
    Rational mad_sum;  // after the step
};

/// Representatives are stored by edge count; s is the spare-edge pool.
struct NormalizationState {
    std::vector<std::int64_t> items;
    std::int64_t spare = 0;
    std::vector<NormalizationStep> log;
    /// Mad-sum of the graphs before representatives replaced them.
    Rational input_mad_sum;
    bool terminal = false;

    std::vector<ItemDescriptor> descriptors() const;
    Rational mad_sum() const;
    /// spare + sum of item edge counts.
    std::int64_t conserved_total() const;
};

/// Replaces each graph by the representative with the same edge count.
NormalizationState to_representative_list(const GraphList& list);
NormalizationState to_representative_list(const std::vector<Graph>& graphs);

/// Runs rules 3a..3e to the terminal list. Ties within a rule go to the
/// lexicographically smallest (p, r, index). Each rewrite strictly increases
/// the potential (Mad-sum, s, -|B|) in lexicographic order, and rule 3e ends
/// the run, so the procedure halts; the step cap only guards against bugs.
/// Throws DomainError if the list does not have k members and N edges.
NormalizationState normalize(const GraphList& list, std::int64_t k, std::int64_t n_edges);
NormalizationState normalize(const std::vector<Graph>& graphs, std::int64_t k, std::int64_t n_edges);
NormalizationState normalize_state(NormalizationState state);

/// Whether the items form {a*K_p, b*K_{p+1}} or {a*K_p, b*K_{p+1}, 1*G_{p,r}}
/// with (p, q, r) = param_triple(k, N) and the matching counts.
bool has_terminal_shape(const NormalizationState& state);

Json state_to_json(const NormalizationState& state);

}  // namespace madgad

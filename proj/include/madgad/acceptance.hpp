#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "madgad/normalize.hpp"

namespace madgad {

/// Replays a normalization log from the initial item edge counts. Returns an
/// empty string when every step conserves spare + edges, keeps the Mad-sum
/// non-decreasing (strictly on 3b steps between different p), applies rules
/// 3c..3e only with no Type-C item and at most one Type-B item, and ends at
/// the terminal multiset with Mad-sum m_list(k, N); otherwise the first
/// violation.
std::string audit_normalization(const std::vector<std::int64_t>& initial, const NormalizationState& final_state);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 20240611;
    /// Echo one line per criterion as it finishes.
    std::ostream* progress = nullptr;
};

/// Runs criteria 1..12 in order; criterion 10 audits every decomposition the
/// other criteria produced. A criterion passes only if all its checks hold
/// and it finishes within its pinned time limit.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

std::string format_result(const CriterionResult& r);

}  // namespace madgad

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/reduction.hpp"

namespace rainbow {

enum class PeelStrategy {
    FirstFeasible,  ///< color 0, lowest-index left vertex carrying it, MaxDrain reduction
    Backtracking,   ///< every (color, pivot) pair and both donor policies, within a node budget
};

enum class ConstructionStatus { Matched, StepFailed };

enum class FailureReason { NoPivotEdge, ReductionStalled, CountDeficit, RecursiveFailure };

struct ConstructionFailure {
    int depth = 0;
    FailureReason reason = FailureReason::RecursiveFailure;
    std::uint64_t digest = 0;  ///< canonical_digest of the level graph where the step broke
    std::string detail;
};

/// One peeled level: the level graph after normalization, the peeled color,
/// and the pivot's edge of that color, in level and original coordinates.
struct ConstructionLevel {
    int depth = 0;
    DonorPolicy policy = DonorPolicy::MaxDrain;
    ColoredMultigraph graph;
    int color = 0;
    Edge edge;
    Edge original_edge;
};

struct ConstructionOutcome {
    ConstructionStatus status = ConstructionStatus::StepFailed;
    Matching matching;  ///< original coordinates; empty unless Matched
    std::optional<ConstructionFailure> failure;
    std::vector<ConstructionLevel> trace;
    int lift_attempts = 0;    ///< base cases whose matching was lifted to the input
    int lift_rejections = 0;  ///< lifted matchings that were not in the input graph
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
};

struct ConstructOptions {
    PeelStrategy strategy = PeelStrategy::FirstFeasible;
    std::uint64_t node_budget = 10'000;
};

/// Inductive construction of a size-n rainbow matching.
///
/// Every level normalizes its graph by shifting, then either solves the n = 2
/// base case with the oracle or peels one color K together with a pivot's
/// K-edge (pivot, v), deletes the color and both endpoints, checks that every
/// remaining color kept exactly n edges, and recurses. Matchings are lifted to
/// input coordinates through the index maps of every deletion and compaction,
/// then re-verified against the input; a lifted matching missing from the input
/// is rejected as a RecursiveFailure. A Matched outcome is always a valid
/// rainbow matching of the input.
///
/// Throws InputError unless g is proper with n+1 edges per color and n >= 2.
ConstructionOutcome construct(const ColoredMultigraph& g, const ConstructOptions& options = {});

std::string to_string(FailureReason reason);
std::string to_string(PeelStrategy strategy);
std::optional<PeelStrategy> parse_peel_strategy(const std::string& name);

}  // namespace rainbow

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Exchanges the two parts: (u, v, c) becomes (v, u, c). An involution.
ColoredMultigraph mirror(const ColoredMultigraph& g);

/// Result of dropping isolated vertices. `left_origin[i]` is the input index of
/// output left vertex i; likewise for the right side.
struct Compaction {
    ColoredMultigraph graph;
    std::vector<int> left_origin;
    std::vector<int> right_origin;
};

Compaction compact(const ColoredMultigraph& g);

int non_isolated_count(const ColoredMultigraph& g, Side side);

/// True iff exactly n+1 non-isolated vertices remain on each side.
/// Throws InputError unless g is proper with n+1 edges per color.
bool is_normal_form(const ColoredMultigraph& g);

enum class DonorPolicy {
    MaxDrain,    ///< most colors absent at the pivot; ties go to the highest index
    LastVertex,  ///< highest-index vertex other than the pivot
};

enum class ReductionStatus { Normalized, Stalled, IterationCapHit };

struct ReductionStep {
    Side side = Side::Left;
    int pivot = 0;
    int donor = 0;
    int moves = 0;
    int swaps = 0;

    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionOutcome {
    ReductionStatus status = ReductionStatus::Normalized;
    ColoredMultigraph graph;
    std::vector<ReductionStep> trace;
    int iterations = 0;
    /// Input-graph index of every vertex left in `graph`.
    std::vector<int> left_origin;
    std::vector<int> right_origin;
};

/// Budget used when no explicit cap is given: 10 * n * (left + right).
int default_max_iters(const ColoredMultigraph& g);

/// Repeated shifting toward normal form.
///
/// Each iteration compacts isolated vertices, stops if both sides have n+1
/// vertices, and otherwise shifts on a side with more than n+1 vertices (both
/// qualifying: alternate, Left first). The pivot is the lowest-index vertex
/// missing a color; right-side shifts run on the mirrored graph. An iteration
/// makes progress when it moves an edge or isolates a vertex. Two consecutive
/// idle iterations on the same (side, pivot, donor) end with Stalled.
///
/// Throws InputError unless g is proper with n+1 edges per color and n >= 1.
ReductionOutcome reduce_to_normal_form(const ColoredMultigraph& g, DonorPolicy policy = DonorPolicy::MaxDrain,
                                       std::optional<int> max_iters = std::nullopt);

/// Re-applies a reduction trace to its input: compact, then per step shift and
/// compact again. Used to check trace coherence.
Compaction replay_reduction(const ColoredMultigraph& g, const std::vector<ReductionStep>& trace);

std::string to_string(ReductionStatus status);
std::string to_string(DonorPolicy policy);
std::optional<DonorPolicy> parse_donor_policy(const std::string& name);

}  // namespace rainbow

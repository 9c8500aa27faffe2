#pragma once

#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

enum class RewriteKind { Move, Swap };

/// One applied rule instance.
///
/// Move: removed = {(donor, b, c)}, added = {(pivot, b, c)}.
/// Swap: removed = {(pivot, g, c), (donor, a, c)}, added = {(pivot, a, c), (donor, g, c)}.
struct ShiftRewrite {
    RewriteKind kind = RewriteKind::Move;
    int color = 0;
    std::vector<Edge> removed;
    std::vector<Edge> added;

    friend bool operator==(const ShiftRewrite&, const ShiftRewrite&) = default;
};

struct ShiftOutcome {
    ColoredMultigraph graph;
    std::vector<ShiftRewrite> rewrites;
    int moves = 0;
    int swaps = 0;
};

/// True iff the left vertex `pivot` misses at least one color.
bool shift_applicable(const ColoredMultigraph& g, int pivot);

/// Rewrites every edge at left vertex `donor` onto left vertex `pivot`.
///
/// Donor edges are taken in ascending color order against the working graph.
/// If the pivot lacks the color, the edge moves to the pivot. Otherwise the pivot
/// holds exactly one edge of that color and the two edges exchange right
/// endpoints. Rewritten edges keep their position in the edge list.
///
/// Throws InputError when pivot == donor, either is out of range, or g is not proper.
ShiftOutcome shift(const ColoredMultigraph& g, int pivot, int donor);

/// Applies a rewrite list to `g`, replacing each removed edge in place.
/// Throws InputError if a removed edge is missing.
ColoredMultigraph apply_rewrites(const ColoredMultigraph& g, const std::vector<ShiftRewrite>& rewrites);

}  // namespace rainbow

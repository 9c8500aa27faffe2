#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "rainbow/graph.hpp"

namespace rainbow {

struct OracleResult {
    std::size_t max_size = 0;
    Matching witness;
    std::uint64_t nodes_explored = 0;
};

/// Exact maximum rainbow matching by color-major backtracking.
///
/// Colors are visited in ascending order. At each color the search first tries
/// every still-feasible edge of that color in edge-list order, then skipping the
/// color. A branch is cut once current size plus remaining colors cannot beat
/// the best found, and the search stops as soon as min(n, left, right) is hit.
/// The first maximum found is returned, so the witness is deterministic.
///
/// Throws InputError when the graph is not proper.
OracleResult max_rainbow(const ColoredMultigraph& g);

/// Early-exit search for a rainbow matching of size k. Returns the first one
/// found under the same branch order as max_rainbow.
std::optional<Matching> has_rainbow(const ColoredMultigraph& g, std::size_t k);

inline constexpr std::size_t kNaiveEdgeLimit = 24;

/// Enumerates every edge subset. Independent of max_rainbow; only for graphs
/// with at most kNaiveEdgeLimit edges.
OracleResult max_rainbow_naive(const ColoredMultigraph& g);

}  // namespace rainbow

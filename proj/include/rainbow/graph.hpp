#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rainbow {

enum class Side { Left, Right };

/// One colored edge between left vertex `u` and right vertex `v`.
struct Edge {
    int u = 0;
    int v = 0;
    int c = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Orders edges by (color, left, right); the order used by the instance format
/// and by canonical_digest.
struct CanonicalEdgeLess {
    bool operator()(const Edge& a, const Edge& b) const noexcept {
        if (a.c != b.c) return a.c < b.c;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    }
};

/// Edge-colored bipartite multigraph with dense 0-based vertex and color indices.
///
/// The edge list is ordered (order is part of the value), but every semantic
/// operation treats it as a multiset. A graph is proper when each color class is
/// a matching; parallel edges are allowed only between distinct colors.
struct ColoredMultigraph {
    int n = 0;
    int left_size = 0;
    int right_size = 0;
    std::vector<Edge> edges;

    friend bool operator==(const ColoredMultigraph&, const ColoredMultigraph&) = default;

    int side_size(Side side) const noexcept { return side == Side::Left ? left_size : right_size; }
};

/// Edges assumed pairwise vertex-disjoint and color-distinct. Checked by
/// is_rainbow_matching, never by construction.
struct Matching {
    std::vector<Edge> edges;

    friend bool operator==(const Matching&, const Matching&) = default;
    std::size_t size() const noexcept { return edges.size(); }
};

struct Violation {
    std::string rule;
    std::string detail;
    std::vector<std::size_t> edge_indices;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Reports every broken invariant; never throws. With `require_counts`, each
/// color must additionally carry exactly n+1 edges.
ValidationReport validate(const ColoredMultigraph& g, bool require_counts = false);

/// Sorted set of colors incident to `vertex`. Throws InputError when out of range.
std::vector<int> colors_at(const ColoredMultigraph& g, Side side, int vertex);

int degree(const ColoredMultigraph& g, Side side, int vertex);

/// Per-vertex degree table for one side.
std::vector<int> degrees(const ColoredMultigraph& g, Side side);

/// Per-color edge counts, indexed by color.
std::vector<int> color_counts(const ColoredMultigraph& g);

/// Removes color `c`; colors above it shift down by one and n decrements.
ColoredMultigraph delete_color(const ColoredMultigraph& g, int c);

/// Removes a vertex with its incident edges; higher indices on that side shift down.
ColoredMultigraph delete_vertex(const ColoredMultigraph& g, Side side, int vertex);

bool contains_edge(const ColoredMultigraph& g, const Edge& e);

bool is_rainbow_matching(const ColoredMultigraph& g, const Matching& m, std::size_t k);

/// Same graph with edges sorted by (c, u, v).
ColoredMultigraph canonicalized(ColoredMultigraph g);

/// 64-bit FNV-1a over the header and the canonically sorted edge list.
/// Invariant under edge-list order, not under relabeling.
std::uint64_t canonical_digest(const ColoredMultigraph& g);

std::string digest_hex(std::uint64_t digest);

}  // namespace rainbow

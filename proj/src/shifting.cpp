#include "rainbow/shifting.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

void check_left(const ColoredMultigraph& g, int vertex, const char* role) {
    if (vertex < 0 || vertex >= g.left_size) {
        throw InputError(std::string(role) + " " + std::to_string(vertex) + " out of range [0," +
                         std::to_string(g.left_size) + ")");
    }
}

std::optional<std::size_t> find_at_left(const std::vector<Edge>& edges, int u, int c) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].u == u && edges[i].c == c) return i;
    }
    return std::nullopt;
}

}  // namespace

bool shift_applicable(const ColoredMultigraph& g, int pivot) {
    check_left(g, pivot, "pivot");
    return static_cast<int>(colors_at(g, Side::Left, pivot).size()) < g.n;
}

ShiftOutcome shift(const ColoredMultigraph& g, int pivot, int donor) {
    check_left(g, pivot, "pivot");
    check_left(g, donor, "donor");
    if (pivot == donor) throw InputError("pivot and donor must differ");
    ValidationReport report = validate(g, false);
    if (!report.ok) throw InputError("shift requires a proper graph: " + report.violations.front().detail);

    ShiftOutcome out{g, {}, 0, 0};
    std::vector<Edge>& edges = out.graph.edges;

    std::vector<std::size_t> donor_edges;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].u == donor) donor_edges.push_back(i);
    }
    std::sort(donor_edges.begin(), donor_edges.end(),
              [&](std::size_t a, std::size_t b) { return edges[a].c < edges[b].c; });

    for (std::size_t i : donor_edges) {
        const Edge donor_edge = edges[i];
        const int c = donor_edge.c;
        if (auto j = find_at_left(edges, pivot, c)) {
            const Edge pivot_edge = edges[*j];
            edges[*j] = {pivot, donor_edge.v, c};
            edges[i] = {donor, pivot_edge.v, c};
            out.rewrites.push_back({RewriteKind::Swap, c, {pivot_edge, donor_edge}, {edges[*j], edges[i]}});
            ++out.swaps;
        } else {
            edges[i] = {pivot, donor_edge.v, c};
            out.rewrites.push_back({RewriteKind::Move, c, {donor_edge}, {edges[i]}});
            ++out.moves;
        }
    }
    return out;
}

ColoredMultigraph apply_rewrites(const ColoredMultigraph& g, const std::vector<ShiftRewrite>& rewrites) {
    ColoredMultigraph out = g;
    for (const ShiftRewrite& r : rewrites) {
        if (r.removed.size() != r.added.size()) throw InputError("rewrite must remove and add equally many edges");
        std::vector<std::size_t> slots;
        for (const Edge& e : r.removed) {
            auto it = std::find(out.edges.begin(), out.edges.end(), e);
            if (it == out.edges.end()) throw InputError("rewrite removes an edge that is not present");
            slots.push_back(static_cast<std::size_t>(it - out.edges.begin()));
        }
        for (std::size_t k = 0; k < slots.size(); ++k) out.edges[slots[k]] = r.added[k];
    }
    return out;
}

}  // namespace rainbow

#include "rainbow/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <utility>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + "," + std::to_string(e.c) + ")";
}

const char* side_name(Side side) { return side == Side::Left ? "left" : "right"; }

void check_vertex(const ColoredMultigraph& g, Side side, int vertex) {
    if (vertex < 0 || vertex >= g.side_size(side)) {
        throw InputError(std::string(side_name(side)) + " vertex " + std::to_string(vertex) +
                         " out of range [0," + std::to_string(g.side_size(side)) + ")");
    }
}

bool in_bounds(const ColoredMultigraph& g, const Edge& e) {
    return e.u >= 0 && e.u < g.left_size && e.v >= 0 && e.v < g.right_size && e.c >= 0 &&
           e.c < g.n;
}

}  // namespace

ValidationReport validate(const ColoredMultigraph& g, bool require_counts) {
    ValidationReport report;
    auto add = [&](std::string rule, std::string detail, std::vector<std::size_t> idx) {
        report.violations.push_back({std::move(rule), std::move(detail), std::move(idx)});
    };

    if (g.n < 0) add("n-range", "n must be non-negative, got " + std::to_string(g.n), {});
    if (g.left_size < 0) add("size-range", "left_size is negative", {});
    if (g.right_size < 0) add("size-range", "right_size is negative", {});

    // (color, vertex) -> first edge index carrying it
    std::map<std::pair<int, int>, std::size_t> seen_left;
    std::map<std::pair<int, int>, std::size_t> seen_right;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        if (!in_bounds(g, e)) {
            add("edge-range", "edge " + edge_str(e) + " has an index out of range", {i});
            continue;
        }
        auto [lit, lnew] = seen_left.try_emplace({e.c, e.u}, i);
        if (!lnew) {
            add("proper-left",
                "color " + std::to_string(e.c) + " appears twice at left vertex " + std::to_string(e.u),
                {lit->second, i});
        }
        auto [rit, rnew] = seen_right.try_emplace({e.c, e.v}, i);
        if (!rnew) {
            add("proper-right",
                "color " + std::to_string(e.c) + " appears twice at right vertex " +
                    std::to_string(e.v),
                {rit->second, i});
        }
    }

    if (require_counts && g.n >= 0) {
        std::vector<std::vector<std::size_t>> by_color(static_cast<std::size_t>(g.n));
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            if (in_bounds(g, g.edges[i])) by_color[static_cast<std::size_t>(g.edges[i].c)].push_back(i);
        }
        for (int c = 0; c < g.n; ++c) {
            const auto& idx = by_color[static_cast<std::size_t>(c)];
            if (static_cast<int>(idx.size()) != g.n + 1) {
                add("color-count",
                    "color " + std::to_string(c) + " has " + std::to_string(idx.size()) +
                        " edges, expected " + std::to_string(g.n + 1),
                    idx);
            }
        }
    }

    report.ok = report.violations.empty();
    return report;
}

std::vector<int> colors_at(const ColoredMultigraph& g, Side side, int vertex) {
    check_vertex(g, side, vertex);
    std::vector<int> colors;
    for (const Edge& e : g.edges) {
        if ((side == Side::Left ? e.u : e.v) == vertex) colors.push_back(e.c);
    }
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    return colors;
}

int degree(const ColoredMultigraph& g, Side side, int vertex) {
    check_vertex(g, side, vertex);
    return static_cast<int>(std::count_if(g.edges.begin(), g.edges.end(), [&](const Edge& e) {
        return (side == Side::Left ? e.u : e.v) == vertex;
    }));
}

std::vector<int> degrees(const ColoredMultigraph& g, Side side) {
    std::vector<int> deg(static_cast<std::size_t>(std::max(g.side_size(side), 0)), 0);
    for (const Edge& e : g.edges) ++deg[static_cast<std::size_t>(side == Side::Left ? e.u : e.v)];
    return deg;
}

std::vector<int> color_counts(const ColoredMultigraph& g) {
    std::vector<int> counts(static_cast<std::size_t>(std::max(g.n, 0)), 0);
    for (const Edge& e : g.edges) ++counts[static_cast<std::size_t>(e.c)];
    return counts;
}

ColoredMultigraph delete_color(const ColoredMultigraph& g, int c) {
    if (c < 0 || c >= g.n) {
        throw InputError("color " + std::to_string(c) + " out of range [0," + std::to_string(g.n) + ")");
    }
    ColoredMultigraph out{g.n - 1, g.left_size, g.right_size, {}};
    out.edges.reserve(g.edges.size());
    for (Edge e : g.edges) {
        if (e.c == c) continue;
        if (e.c > c) --e.c;
        out.edges.push_back(e);
    }
    return out;
}

ColoredMultigraph delete_vertex(const ColoredMultigraph& g, Side side, int vertex) {
    check_vertex(g, side, vertex);
    ColoredMultigraph out = g;
    out.edges.clear();
    (side == Side::Left ? out.left_size : out.right_size) -= 1;
    for (Edge e : g.edges) {
        int& idx = side == Side::Left ? e.u : e.v;
        if (idx == vertex) continue;
        if (idx > vertex) --idx;
        out.edges.push_back(e);
    }
    return out;
}

bool contains_edge(const ColoredMultigraph& g, const Edge& e) {
    return std::find(g.edges.begin(), g.edges.end(), e) != g.edges.end();
}

bool is_rainbow_matching(const ColoredMultigraph& g, const Matching& m, std::size_t k) {
    if (m.edges.size() != k) return false;
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        const Edge& a = m.edges[i];
        if (!contains_edge(g, a)) return false;
        for (std::size_t j = i + 1; j < m.edges.size(); ++j) {
            const Edge& b = m.edges[j];
            if (a.u == b.u || a.v == b.v || a.c == b.c) return false;
        }
    }
    return true;
}

ColoredMultigraph canonicalized(ColoredMultigraph g) {
    std::sort(g.edges.begin(), g.edges.end(), CanonicalEdgeLess{});
    return g;
}

std::uint64_t canonical_digest(const ColoredMultigraph& g) {
    constexpr std::uint64_t kOffset = 0xcbf29ce484222325ULL;
    constexpr std::uint64_t kPrime = 0x100000001b3ULL;
    std::uint64_t h = kOffset;
    auto mix = [&](int value) {
        auto word = static_cast<std::uint32_t>(value);
        for (int b = 0; b < 4; ++b) {
            h ^= (word >> (8 * b)) & 0xffU;
            h *= kPrime;
        }
    };
    mix(g.n);
    mix(g.left_size);
    mix(g.right_size);
    mix(static_cast<int>(g.edges.size()));
    std::vector<Edge> sorted = g.edges;
    std::sort(sorted.begin(), sorted.end(), CanonicalEdgeLess{});
    for (const Edge& e : sorted) {
        mix(e.c);
        mix(e.u);
        mix(e.v);
    }
    return h;
}

std::string digest_hex(std::uint64_t digest) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
    return buf;
}

}  // namespace rainbow

#pragma once

// Test-only reference implementations. None of these call into the code paths
// they are used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow::testing {

/// n=2, 3+3 vertices; color 0: (0,0),(1,1),(2,2); color 1: (0,1),(1,2),(2,0).
inline ColoredMultigraph instance_i2() {
    return {2, 3, 3, {{0, 0, 0}, {1, 1, 0}, {2, 2, 0}, {0, 1, 1}, {1, 2, 1}, {2, 0, 1}}};
}

inline std::multiset<std::tuple<int, int, int>> edge_multiset(const ColoredMultigraph& g) {
    std::multiset<std::tuple<int, int, int>> s;
    for (const Edge& e : g.edges) s.insert({e.u, e.v, e.c});
    return s;
}

/// Rainbow-matching check written against the definition with sets.
inline bool reference_is_rainbow(const ColoredMultigraph& g, const std::vector<Edge>& m, std::size_t k) {
    if (m.size() != k) return false;
    auto host = edge_multiset(g);
    std::set<int> lefts, rights, colors;
    for (const Edge& e : m) {
        if (!host.count({e.u, e.v, e.c})) return false;
        lefts.insert(e.u);
        rights.insert(e.v);
        colors.insert(e.c);
    }
    return lefts.size() == k && rights.size() == k && colors.size() == k;
}

/// Properness by pairwise comparison.
inline bool reference_proper(const ColoredMultigraph& g) {
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& a = g.edges[i];
        if (a.u < 0 || a.u >= g.left_size || a.v < 0 || a.v >= g.right_size || a.c < 0 || a.c >= g.n) return false;
        for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
            const Edge& b = g.edges[j];
            if (a.c == b.c && (a.u == b.u || a.v == b.v)) return false;
        }
    }
    return true;
}

/// Shift with every rule decided on the input snapshot and applied at once.
inline ColoredMultigraph snapshot_shift(const ColoredMultigraph& g, int pivot, int donor) {
    std::map<int, int> pivot_right;  // color -> right endpoint at pivot, in the input
    for (const Edge& e : g.edges) {
        if (e.u == pivot) pivot_right[e.c] = e.v;
    }
    std::map<int, int> donor_right;
    for (const Edge& e : g.edges) {
        if (e.u == donor) donor_right[e.c] = e.v;
    }
    ColoredMultigraph out = g;
    for (Edge& e : out.edges) {
        if (e.u == donor) {
            auto it = pivot_right.find(e.c);
            if (it == pivot_right.end()) {
                e.u = pivot;
            } else {
                e.v = it->second;
            }
        } else if (e.u == pivot) {
            auto it = donor_right.find(e.c);
            if (it != donor_right.end()) e.v = it->second;
        }
    }
    return out;
}

/// Counts size-k partial matchings of K_{left,right} by scanning every k-subset
/// of the left x right grid.
inline std::uint64_t brute_partial_matchings(int left, int right, int k) {
    const int cells = left * right;
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (1U << cells); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::set<int> rows, cols;
        for (int i = 0; i < cells; ++i) {
            if (mask >> i & 1U) {
                rows.insert(i / right);
                cols.insert(i % right);
            }
        }
        if (static_cast<int>(rows.size()) == k && static_cast<int>(cols.size()) == k) ++count;
    }
    return count;
}

/// Random proper graph: each color gets a random matching of size up to `max_class`.
inline ColoredMultigraph random_proper_graph(std::mt19937_64& rng, int n, int left, int right, int max_class) {
    ColoredMultigraph g{n, left, right, {}};
    std::vector<int> ls(static_cast<std::size_t>(left)), rs(static_cast<std::size_t>(right));
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < left; ++i) ls[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < right; ++i) rs[static_cast<std::size_t>(i)] = i;
        std::shuffle(ls.begin(), ls.end(), rng);
        std::shuffle(rs.begin(), rs.end(), rng);
        int limit = std::min({max_class, left, right});
        int size = limit == 0 ? 0 : static_cast<int>(rng() % static_cast<std::uint64_t>(limit + 1));
        for (int i = 0; i < size; ++i) g.edges.push_back({ls[static_cast<std::size_t>(i)], rs[static_cast<std::size_t>(i)], c});
    }
    std::shuffle(g.edges.begin(), g.edges.end(), rng);
    return g;
}

}  // namespace rainbow::testing

#include <doctest.h>

#include <algorithm>
#include <random>

#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/shifting.hpp"
#include "support/oracles.hpp"

using namespace rainbow;
using rainbow::testing::instance_i2;

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void check_shift_laws(const ColoredMultigraph& g, int pivot, int donor) {
    ShiftOutcome out = shift(g, pivot, donor);
    REQUIRE(validate(out.graph).ok);
    CHECK(color_counts(out.graph) == color_counts(g));
    CHECK(out.moves + out.swaps == degree(g, Side::Left, donor));

    std::vector<int> ld_before = degrees(g, Side::Left), ld_after = degrees(out.graph, Side::Left);
    for (int u = 0; u < g.left_size; ++u) {
        int expected = ld_before[u] + (u == pivot ? out.moves : 0) - (u == donor ? out.moves : 0);
        CHECK(ld_after[u] == expected);
    }
    CHECK(degrees(out.graph, Side::Right) == degrees(g, Side::Right));
    CHECK(subset(colors_at(out.graph, Side::Left, donor), colors_at(out.graph, Side::Left, pivot)));
    CHECK(apply_rewrites(g, out.rewrites) == out.graph);
    CHECK(rainbow::testing::edge_multiset(out.graph) ==
          rainbow::testing::edge_multiset(rainbow::testing::snapshot_shift(g, pivot, donor)));
}

}  // namespace

TEST_CASE("shift_applicable") {
    ColoredMultigraph g = instance_i2();
    CHECK_FALSE(shift_applicable(g, 0));
    g.edges.erase(std::find(g.edges.begin(), g.edges.end(), Edge{0, 1, 1}));
    CHECK(shift_applicable(g, 0));
    CHECK(shift_applicable({2, 1, 1, {}}, 0));
    CHECK_THROWS_AS(shift_applicable(g, 5), InputError);
}

TEST_CASE("Move rule") {
    ShiftOutcome out = shift({1, 2, 1, {{1, 0, 0}}}, 0, 1);
    CHECK(out.graph.edges == std::vector<Edge>{{0, 0, 0}});
    CHECK(out.moves == 1);
    CHECK(out.swaps == 0);
    REQUIRE(out.rewrites.size() == 1);
    CHECK(out.rewrites[0] == ShiftRewrite{RewriteKind::Move, 0, {{1, 0, 0}}, {{0, 0, 0}}});
}

TEST_CASE("Swap rule") {
    ShiftOutcome out = shift({1, 2, 3, {{0, 1, 0}, {1, 2, 0}}}, 0, 1);
    CHECK(out.graph.edges == std::vector<Edge>{{0, 2, 0}, {1, 1, 0}});
    CHECK(out.moves == 0);
    CHECK(out.swaps == 1);
    REQUIRE(out.rewrites.size() == 1);
    CHECK(out.rewrites[0] == ShiftRewrite{RewriteKind::Swap, 0, {{0, 1, 0}, {1, 2, 0}}, {{0, 2, 0}, {1, 1, 0}}});
}

TEST_CASE("Swap then Move in color order") {
    ShiftOutcome out = shift({2, 2, 3, {{0, 1, 0}, {1, 2, 0}, {1, 0, 1}}}, 0, 1);
    CHECK(rainbow::testing::edge_multiset(out.graph) ==
          rainbow::testing::edge_multiset({2, 2, 3, {{0, 2, 0}, {1, 1, 0}, {0, 0, 1}}}));
    CHECK(out.swaps == 1);
    CHECK(out.moves == 1);
    CHECK(rainbow::testing::reference_proper(out.graph));
    REQUIRE(out.rewrites.size() == 2);
    CHECK(out.rewrites[0].kind == RewriteKind::Swap);
    CHECK(out.rewrites[1].kind == RewriteKind::Move);
}

TEST_CASE("shift errors") {
    ColoredMultigraph g = instance_i2();
    CHECK_THROWS_AS(shift(g, 1, 1), InputError);
    CHECK_THROWS_AS(shift(g, 0, 3), InputError);
    CHECK_THROWS_AS(shift({1, 2, 1, {{0, 0, 0}, {1, 0, 0}}}, 0, 1), InputError);
}

TEST_CASE("shift laws on every enumerated n=2 instance on 3x4") {
    for (const ColoredMultigraph& g : enumerate_instances(2, 3, 4)) {
        for (int p = 0; p < 3; ++p)
            for (int d = 0; d < 3; ++d)
                if (p != d) check_shift_laws(g, p, d);
    }
}

TEST_CASE("shift laws on random proper graphs") {
    std::mt19937_64 rng(404);
    for (int t = 0; t < 3000; ++t) {
        int left = 2 + t % 5;
        ColoredMultigraph g = rainbow::testing::random_proper_graph(rng, 1 + t % 5, left, 2 + t % 4, 4);
        int p = static_cast<int>(rng() % left);
        int d = static_cast<int>(rng() % left);
        if (p == d) d = (d + 1) % left;
        check_shift_laws(g, p, d);
    }
}

TEST_CASE("apply_rewrites rejects missing edges") {
    ShiftRewrite r{RewriteKind::Move, 0, {{1, 0, 0}}, {{0, 0, 0}}};
    CHECK_THROWS_AS(apply_rewrites(instance_i2(), {r}), InputError);
}

#include <doctest.h>

#include <algorithm>
#include <random>

#include "rainbow/error.hpp"
#include "rainbow/graph.hpp"
#include "support/oracles.hpp"

using namespace rainbow;
using rainbow::testing::instance_i2;

namespace {

bool has_rule(const ValidationReport& r, const std::string& rule) {
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

}  // namespace

TEST_CASE("validate") {
    SUBCASE("shared right vertex in one color") {
        ColoredMultigraph g{1, 2, 1, {{0, 0, 0}, {1, 0, 0}}};
        ValidationReport r = validate(g);
        CHECK_FALSE(r.ok);
        CHECK(has_rule(r, "proper-right"));
        CHECK(r.violations.front().edge_indices == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("count rule") {
        ColoredMultigraph g{2, 1, 1, {{0, 0, 0}}};
        CHECK(validate(g, false).ok);
        ValidationReport r = validate(g, true);
        CHECK_FALSE(r.ok);
        CHECK(r.violations.size() == 2);
        CHECK(r.violations[0].detail.find("color 0 has 1 edges") != std::string::npos);
        CHECK(r.violations[1].detail.find("color 1 has 0 edges") != std::string::npos);
    }
    SUBCASE("I2 is proper with n+1 edges per color") {
        CHECK(validate(instance_i2(), true).ok);
        CHECK(rainbow::testing::reference_proper(instance_i2()));
    }
    SUBCASE("out-of-range indices") {
        ColoredMultigraph g{1, 1, 1, {{0, 0, 1}, {2, 0, 0}}};
        ValidationReport r = validate(g);
        CHECK(r.violations.size() == 2);
        CHECK(has_rule(r, "edge-range"));
    }
    SUBCASE("parallel edges of different colors are allowed") {
        ColoredMultigraph g{2, 1, 1, {{0, 0, 0}, {0, 0, 1}}};
        CHECK(validate(g).ok);
        g.edges.push_back({0, 0, 0});
        CHECK_FALSE(validate(g).ok);
    }
    SUBCASE("ok iff no violations") {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 200; ++t) {
            ColoredMultigraph g{2, 3, 3, {}};
            for (int i = 0; i < 5; ++i) g.edges.push_back({int(rng() % 3), int(rng() % 3), int(rng() % 2)});
            ValidationReport r = validate(g);
            CHECK(r.ok == r.violations.empty());
            CHECK(r.ok == rainbow::testing::reference_proper(g));
        }
    }
}

TEST_CASE("colors_at and degree") {
    const ColoredMultigraph g = instance_i2();
    CHECK(colors_at(g, Side::Left, 0) == std::vector<int>{0, 1});
    CHECK(colors_at(g, Side::Right, 2) == std::vector<int>{0, 1});
    CHECK(degree(g, Side::Left, 0) == 2);
    CHECK(degree(g, Side::Right, 1) == 2);

    const ColoredMultigraph empty{1, 1, 1, {}};
    CHECK(colors_at(empty, Side::Left, 0).empty());
    CHECK(degree(empty, Side::Left, 0) == 0);

    CHECK_THROWS_AS(colors_at(g, Side::Left, 3), InputError);
    CHECK_THROWS_AS(degree(g, Side::Right, -1), InputError);
}

TEST_CASE("valid graphs respect the degree bound") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        ColoredMultigraph g = rainbow::testing::random_proper_graph(rng, 1 + t % 4, 2 + t % 5, 2 + t % 3, 4);
        REQUIRE(validate(g).ok);
        for (Side side : {Side::Left, Side::Right}) {
            for (int v = 0; v < g.side_size(side); ++v) {
                int d = degree(g, side, v);
                CHECK(d <= g.n);
                CHECK(static_cast<int>(colors_at(g, side, v).size()) == d);
            }
        }
    }
}

TEST_CASE("delete_color") {
    const ColoredMultigraph g = instance_i2();
    ColoredMultigraph without1 = delete_color(g, 1);
    CHECK(without1 == ColoredMultigraph{1, 3, 3, {{0, 0, 0}, {1, 1, 0}, {2, 2, 0}}});

    ColoredMultigraph without0 = delete_color(g, 0);
    CHECK(without0 == ColoredMultigraph{1, 3, 3, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}}});

    ColoredMultigraph single{1, 1, 1, {{0, 0, 0}}};
    ColoredMultigraph degenerate = delete_color(single, 0);
    CHECK(degenerate.n == 0);
    CHECK(degenerate.edges.empty());
    CHECK(validate(degenerate).ok);

    CHECK_THROWS_AS(delete_color(g, 2), InputError);
    CHECK_THROWS_AS(delete_color(g, -1), InputError);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        ColoredMultigraph h = rainbow::testing::random_proper_graph(rng, 1 + t % 5, 4, 4, 4);
        int c = static_cast<int>(rng() % static_cast<std::uint64_t>(h.n));
        CHECK(validate(delete_color(h, c)).ok);
    }
}

TEST_CASE("delete_vertex") {
    const ColoredMultigraph g = instance_i2();
    ColoredMultigraph a = delete_vertex(g, Side::Left, 0);
    CHECK(a.left_size == 2);
    CHECK(a.edges.size() == 4);
    CHECK(a.edges == std::vector<Edge>{{0, 1, 0}, {1, 2, 0}, {0, 2, 1}, {1, 0, 1}});

    ColoredMultigraph b = delete_vertex(g, Side::Right, 2);
    CHECK(b.right_size == 2);
    CHECK(b.edges == std::vector<Edge>{{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {2, 0, 1}});

    ColoredMultigraph isolated{1, 3, 2, {{0, 0, 0}, {2, 1, 0}}};
    ColoredMultigraph c = delete_vertex(isolated, Side::Left, 1);
    CHECK(c.left_size == 2);
    CHECK(c.edges == std::vector<Edge>{{0, 0, 0}, {1, 1, 0}});

    CHECK_THROWS_AS(delete_vertex(g, Side::Left, 3), InputError);
}

TEST_CASE("is_rainbow_matching") {
    const ColoredMultigraph g = instance_i2();
    CHECK(is_rainbow_matching(g, {{{0, 0, 0}, {1, 2, 1}}}, 2));
    CHECK_FALSE(is_rainbow_matching(g, {{{0, 0, 0}, {0, 1, 1}}}, 2));
    CHECK(is_rainbow_matching(g, {}, 0));
    CHECK_FALSE(is_rainbow_matching(g, {{{0, 0, 0}}}, 2));
    CHECK_FALSE(is_rainbow_matching(g, {{{0, 0, 0}, {1, 1, 0}}}, 2));
    CHECK_FALSE(is_rainbow_matching(g, {{{0, 2, 1}}}, 1));
}

TEST_CASE("is_rainbow_matching agrees with the set-based reference") {
    std::mt19937_64 rng(2024);
    int positives = 0;
    for (int t = 0; t < 1000; ++t) {
        ColoredMultigraph g = rainbow::testing::random_proper_graph(rng, 2 + t % 3, 4, 4, 4);
        std::vector<Edge> m;
        std::size_t take = rng() % 4;
        for (std::size_t i = 0; i < take && !g.edges.empty(); ++i) {
            if (rng() % 8 == 0) {
                m.push_back({int(rng() % 4), int(rng() % 4), int(rng() % 3)});
            } else {
                m.push_back(g.edges[rng() % g.edges.size()]);
            }
        }
        std::size_t k = m.size() + (rng() % 5 == 0 ? 1 : 0);
        bool expected = rainbow::testing::reference_is_rainbow(g, m, k);
        positives += expected;
        CHECK(is_rainbow_matching(g, Matching{m}, k) == expected);
    }
    CHECK(positives > 100);
}

TEST_CASE("canonical_digest") {
    const ColoredMultigraph g = instance_i2();
    ColoredMultigraph reordered = g;
    std::reverse(reordered.edges.begin(), reordered.edges.end());
    CHECK(canonical_digest(g) == canonical_digest(reordered));

    ColoredMultigraph smaller = g;
    smaller.edges.pop_back();
    CHECK(canonical_digest(g) != canonical_digest(smaller));

    ColoredMultigraph wider = g;
    wider.left_size = 4;
    CHECK(canonical_digest(g) != canonical_digest(wider));

    // pinned at first build; a change here breaks every stored record file
    CHECK(digest_hex(canonical_digest(g)) == "6aefcd5490aa1060");

    std::mt19937_64 rng(99);
    for (int t = 0; t < 500; ++t) {
        ColoredMultigraph h = rainbow::testing::random_proper_graph(rng, 3, 5, 5, 5);
        ColoredMultigraph shuffled = h;
        std::shuffle(shuffled.edges.begin(), shuffled.edges.end(), rng);
        CHECK(canonical_digest(h) == canonical_digest(shuffled));
    }
}

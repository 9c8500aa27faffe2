#include <doctest.h>

#include <set>

#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/instance_io.hpp"
#include "rainbow/reduction.hpp"
#include "support/oracles.hpp"

using namespace rainbow;

namespace {

bool is_latin(const LatinSquare& sq) {
    const std::size_t m = sq.size();
    for (std::size_t i = 0; i < m; ++i) {
        std::set<int> row(sq[i].begin(), sq[i].end()), col;
        for (std::size_t j = 0; j < m; ++j) col.insert(sq[j][i]);
        if (row.size() != m || col.size() != m || *row.rbegin() != static_cast<int>(m) - 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("gen_random") {
    GenSpec spec{GenKind::Random, 2, 3, 3, 42, 0, 0};
    ColoredMultigraph g = gen_random(spec);
    CHECK(validate(g, true).ok);
    CHECK(gen_random(spec) == g);
    CHECK(g == canonicalized(g));
    // engine output is portable, so the instance is too
    CHECK(digest_hex(canonical_digest(g)) == "9860cf8679ee84a0");

    spec.seed = 43;
    CHECK(gen_random(spec) != g);

    CHECK_THROWS_AS(gen_random({GenKind::Random, 2, 2, 3, 1, 0, 0}), InputError);
    CHECK_THROWS_AS(gen_random({GenKind::Random, 0, 3, 3, 1, 0, 0}), InputError);

    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        GenSpec s{GenKind::Random, 1 + int(seed % 5), 0, 0, seed, 0, 0};
        s.left_size = s.n + 1 + int(seed % 4);
        s.right_size = s.n + 1 + int(seed % 3);
        CHECK(validate(gen_random(s), true).ok);
    }
}

TEST_CASE("Latin squares") {
    CHECK(cyclic_latin_square(3) == LatinSquare{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CHECK(is_latin(shuffled_latin_square(2 + int(seed % 5), seed)));
    }
    CHECK(shuffled_latin_square(5, 9) == shuffled_latin_square(5, 9));
}

TEST_CASE("instance_from_latin") {
    ColoredMultigraph g = instance_from_latin(cyclic_latin_square(3), 2);
    CHECK(g == ColoredMultigraph{2, 3, 3, {{0, 0, 0}, {1, 2, 0}, {2, 1, 0}, {0, 1, 1}, {1, 0, 1}, {2, 2, 1}}});
    CHECK(is_normal_form(g));

    ColoredMultigraph two = instance_from_latin(cyclic_latin_square(2), 0);
    CHECK(two == ColoredMultigraph{1, 2, 2, {{0, 1, 0}, {1, 0, 0}}});

    CHECK_THROWS_AS(instance_from_latin(cyclic_latin_square(3), 3), InputError);
    CHECK_THROWS_AS(gen_latin(3, -1, 0), InputError);
    CHECK_THROWS_AS(gen_latin(1, 0, 0), InputError);

    CHECK(gen_latin(4, 3, 77) == gen_latin(4, 3, 77));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        ColoredMultigraph h = gen_latin(2 + int(seed % 5), int(seed % 2), seed);
        CHECK(validate(h, true).ok);
        CHECK(is_normal_form(h));
    }
}

TEST_CASE("partial_matching_count against brute force") {
    for (int l = 1; l <= 4; ++l)
        for (int r = 1; r <= 4; ++r)
            for (int k = 0; k <= 4; ++k) {
                CHECK(partial_matching_count(l, r, k) == rainbow::testing::brute_partial_matchings(l, r, k));
            }
    CHECK(partial_matching_count(3, 3, 3) == 6);
}

TEST_CASE("enumerate_instances") {
    auto k22 = enumerate_instances(1, 2, 2);
    REQUIRE(k22.size() == 2);
    CHECK(k22[0] == ColoredMultigraph{1, 2, 2, {{0, 0, 0}, {1, 1, 0}}});
    CHECK(k22[1] == ColoredMultigraph{1, 2, 2, {{0, 1, 0}, {1, 0, 0}}});

    auto i33 = enumerate_instances(2, 3, 3);
    CHECK(i33.size() == 36);
    std::set<std::uint64_t> digests;
    std::string previous;
    for (const auto& g : i33) {
        CHECK(validate(g, true).ok);
        digests.insert(canonical_digest(g));
        CHECK(g == canonicalized(g));
    }
    CHECK(digests.size() == 36);
    CHECK(enumerate_instances(2, 3, 3, true).size() == 36);

    for (auto [n, l, r] : {std::tuple{1, 3, 3}, std::tuple{2, 3, 4}, std::tuple{2, 4, 3}, std::tuple{1, 2, 4}}) {
        std::uint64_t m = partial_matching_count(l, r, n + 1);
        std::uint64_t expected = 1;
        for (int c = 0; c < n; ++c) expected *= m;
        InstanceEnumerator it(n, l, r);
        CHECK(it.total() == expected);
        std::uint64_t seen = 0;
        while (auto g = it.next()) {
            CHECK(*g == it.at(seen));
            ++seen;
        }
        CHECK(seen == expected);
    }

    CHECK_THROWS_AS(InstanceEnumerator(4, 8, 8), InputError);
    CHECK_THROWS_AS(InstanceEnumerator(0, 2, 2), InputError);
    CHECK(enumerate_instances(2, 2, 2).empty());
}

TEST_CASE("enumeration follows lexicographic order of color classes") {
    auto all = enumerate_instances(2, 3, 3);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].edges < all[i].edges);
}

TEST_CASE("instantiate") {
    CHECK(instantiate({GenKind::Exhaustive, 2, 3, 3, 0, 0, 5}) == enumerate_instances(2, 3, 3)[5]);
    CHECK(instantiate({GenKind::Latin, 3, 4, 4, 8, 3, 0}) == gen_latin(4, 3, 8));
    CHECK(instantiate({GenKind::Random, 2, 3, 3, 42, 0, 0}) == gen_random({GenKind::Random, 2, 3, 3, 42, 0, 0}));
}

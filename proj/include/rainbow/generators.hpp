#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

enum class GenKind { Random, Latin, Exhaustive };

struct GenSpec {
    GenKind kind = GenKind::Random;
    int n = 0;
    int left_size = 0;
    int right_size = 0;
    std::uint64_t seed = 0;
    int drop_symbol = 0;       ///< Latin only
    std::uint64_t index = 0;   ///< position within an enumeration stream

    friend bool operator==(const GenSpec&, const GenSpec&) = default;
};


/// Each color independently gets a random partial matching of size n+1.
/// Throws InputError when n < 1 or either side has fewer than n+1 vertices.
ColoredMultigraph gen_random(const GenSpec& spec);

using LatinSquare = std::vector<std::vector<int>>;

/// L[r][c] = (r + c) mod m.
LatinSquare cyclic_latin_square(int m);

/// Cyclic square with seeded row, column and symbol permutations.
LatinSquare shuffled_latin_square(int m, std::uint64_t seed);

/// Cell (r, c) holding symbol s becomes edge (r, c, s); `drop_symbol` is
/// removed and the rest renumbered densely, giving n = m - 1.
ColoredMultigraph instance_from_latin(const LatinSquare& square, int drop_symbol);

ColoredMultigraph gen_latin(int m, int drop_symbol, std::uint64_t seed);

/// Number of partial matchings with `size` edges in the complete bipartite
/// graph on left x right vertices.
std::uint64_t partial_matching_count(int left, int right, int size);

inline constexpr std::uint64_t kEnumerationLimit = 100'000'000;
inline constexpr std::uint64_t kColorClassLimit = 1'000'000;

/// Lexicographic stream over every n-tuple of size-(n+1) color classes.
class InstanceEnumerator {
public:
    /// Throws InputError when the stream would exceed kEnumerationLimit or a
    /// single color has more than kColorClassLimit candidate classes.
    InstanceEnumerator(int n, int left_size, int right_size, bool dedup = false);

    std::uint64_t total() const noexcept { return total_; }
    std::uint64_t emitted() const noexcept { return emitted_; }

    std::optional<ColoredMultigraph> next();

    /// The instance at a stream position, ignoring dedup.
    ColoredMultigraph at(std::uint64_t index) const;

private:
    int n_;
    int left_size_;
    int right_size_;
    bool dedup_;
    std::vector<std::vector<Edge>> classes_;  // uncolored color-class templates
    std::vector<std::size_t> odometer_;
    bool exhausted_ = false;
    std::uint64_t total_ = 0;
    std::uint64_t emitted_ = 0;
    std::unordered_set<std::uint64_t> seen_;
};

std::vector<ColoredMultigraph> enumerate_instances(int n, int left_size, int right_size, bool dedup = false);

/// Materializes the instance a spec describes. Exhaustive specs select the
/// `index`-th instance of their enumeration.
ColoredMultigraph instantiate(const GenSpec& spec);

std::string to_string(GenKind kind);
std::optional<GenKind> parse_gen_kind(const std::string& name);

}  // namespace rainbow

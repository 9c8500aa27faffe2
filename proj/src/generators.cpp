#include "rainbow/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

// Unbiased draw in [0, bound); std distributions are not portable across
// standard libraries, the raw engine output is.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = draw_below(rng, i);
        std::swap(v[i - 1], v[j]);
    }
}

// First `k` entries of a uniformly random permutation of [0, size).
std::vector<int> sample_distinct(int size, int k, std::mt19937_64& rng) {
    std::vector<int> pool(static_cast<std::size_t>(size));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) {
        auto j = static_cast<std::size_t>(i) + draw_below(rng, static_cast<std::uint64_t>(size - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    return pool;
}

std::vector<int> random_permutation(int m, std::mt19937_64& rng) {
    std::vector<int> p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    shuffle(p, rng);
    return p;
}

// Saturating product so guards can compare against limits without overflow.
std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

void collect_classes(int left, int right, int size, std::vector<std::vector<Edge>>& out) {
    std::vector<Edge> current;
    std::vector<bool> right_used(static_cast<std::size_t>(right), false);
    // Left endpoints strictly increase along `current`, so each class is built once.
    auto rec = [&](auto&& self, int next_left) -> void {
        if (static_cast<int>(current.size()) == size) {
            out.push_back(current);
            return;
        }
        const int needed = size - static_cast<int>(current.size());
        for (int u = next_left; u <= left - needed; ++u) {
            for (int v = 0; v < right; ++v) {
                if (right_used[static_cast<std::size_t>(v)]) continue;
                right_used[static_cast<std::size_t>(v)] = true;
                current.push_back({u, v, 0});
                self(self, u + 1);
                current.pop_back();
                right_used[static_cast<std::size_t>(v)] = false;
            }
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
}

}  // namespace

ColoredMultigraph gen_random(const GenSpec& spec) {
    if (spec.n < 1) throw InputError("gen_random requires n >= 1");
    if (spec.left_size < spec.n + 1 || spec.right_size < spec.n + 1) {
        throw InputError("gen_random needs at least n+1 = " + std::to_string(spec.n + 1) +
                         " vertices per side, got " + std::to_string(spec.left_size) + "x" +
                         std::to_string(spec.right_size));
    }
    std::mt19937_64 rng(spec.seed);
    ColoredMultigraph g{spec.n, spec.left_size, spec.right_size, {}};
    for (int c = 0; c < spec.n; ++c) {
        std::vector<int> lefts = sample_distinct(spec.left_size, spec.n + 1, rng);
        std::vector<int> rights = sample_distinct(spec.right_size, spec.n + 1, rng);
        for (int i = 0; i <= spec.n; ++i) {
            g.edges.push_back({lefts[static_cast<std::size_t>(i)], rights[static_cast<std::size_t>(i)], c});
        }
    }
    return canonicalized(std::move(g));
}

LatinSquare cyclic_latin_square(int m) {
    if (m < 1) throw InputError("Latin square order must be positive");
    LatinSquare sq(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) sq[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = (r + c) % m;
    }
    return sq;
}

LatinSquare shuffled_latin_square(int m, std::uint64_t seed) {
    const LatinSquare base = cyclic_latin_square(m);
    std::mt19937_64 rng(seed);
    std::vector<int> rows = random_permutation(m, rng);
    std::vector<int> cols = random_permutation(m, rng);
    std::vector<int> symbols = random_permutation(m, rng);
    LatinSquare sq = base;
    for (std::size_t r = 0; r < sq.size(); ++r) {
        for (std::size_t c = 0; c < sq.size(); ++c) {
            int s = base[static_cast<std::size_t>(rows[r])][static_cast<std::size_t>(cols[c])];
            sq[r][c] = symbols[static_cast<std::size_t>(s)];
        }
    }
    return sq;
}

ColoredMultigraph instance_from_latin(const LatinSquare& square, int drop_symbol) {
    const int m = static_cast<int>(square.size());
    if (m < 2) throw InputError("Latin square order must be at least 2");
    if (drop_symbol < 0 || drop_symbol >= m) {
        throw InputError("drop symbol " + std::to_string(drop_symbol) + " out of range [0," + std::to_string(m) + ")");
    }
    ColoredMultigraph g{m - 1, m, m, {}};
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            int s = square[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (s == drop_symbol) continue;
            g.edges.push_back({r, c, s > drop_symbol ? s - 1 : s});
        }
    }
    return canonicalized(std::move(g));
}

ColoredMultigraph gen_latin(int m, int drop_symbol, std::uint64_t seed) {
    if (m < 2) throw InputError("Latin square order must be at least 2");
    if (drop_symbol < 0 || drop_symbol >= m) {
        throw InputError("drop symbol " + std::to_string(drop_symbol) + " out of range [0," + std::to_string(m) + ")");
    }
    return instance_from_latin(shuffled_latin_square(m, seed), drop_symbol);
}

std::uint64_t partial_matching_count(int left, int right, int size) {
    if (size < 0 || size > left || size > right) return 0;
    // C(left, size) * right! / (right - size)!
    std::uint64_t choose = 1;
    for (int i = 0; i < size; ++i) choose = choose * static_cast<std::uint64_t>(left - i) / static_cast<std::uint64_t>(i + 1);
    std::uint64_t arrange = 1;
    for (int i = 0; i < size; ++i) arrange = mul_sat(arrange, static_cast<std::uint64_t>(right - i));
    return mul_sat(choose, arrange);
}

InstanceEnumerator::InstanceEnumerator(int n, int left_size, int right_size, bool dedup)
    : n_(n), left_size_(left_size), right_size_(right_size), dedup_(dedup) {
    if (n < 1) throw InputError("enumeration requires n >= 1");
    const std::uint64_t per_color = partial_matching_count(left_size, right_size, n + 1);
    total_ = 1;
    for (int c = 0; c < n; ++c) total_ = mul_sat(total_, per_color);
    if (total_ > kEnumerationLimit || per_color > kColorClassLimit) {
        throw InputError("enumeration of n=" + std::to_string(n) + " on " + std::to_string(left_size) + "x" +
                         std::to_string(right_size) + " has " +
                         (total_ == UINT64_MAX ? std::string("more than 2^64") : std::to_string(total_)) +
                         " instances, limit is " + std::to_string(kEnumerationLimit));
    }
    collect_classes(left_size, right_size, n + 1, classes_);
    odometer_.assign(static_cast<std::size_t>(n), 0);
    exhausted_ = classes_.empty();
    if (exhausted_) total_ = 0;
}

ColoredMultigraph InstanceEnumerator::at(std::uint64_t index) const {
    if (index >= total_) throw InputError("enumeration index " + std::to_string(index) + " out of range");
    ColoredMultigraph g{n_, left_size_, right_size_, {}};
    std::vector<std::size_t> digits(static_cast<std::size_t>(n_));
    for (int c = n_ - 1; c >= 0; --c) {
        digits[static_cast<std::size_t>(c)] = static_cast<std::size_t>(index % classes_.size());
        index /= classes_.size();
    }
    for (int c = 0; c < n_; ++c) {
        for (Edge e : classes_[digits[static_cast<std::size_t>(c)]]) {
            e.c = c;
            g.edges.push_back(e);
        }
    }
    return g;
}

std::optional<ColoredMultigraph> InstanceEnumerator::next() {
    while (!exhausted_) {
        ColoredMultigraph g{n_, left_size_, right_size_, {}};
        for (int c = 0; c < n_; ++c) {
            for (Edge e : classes_[odometer_[static_cast<std::size_t>(c)]]) {
                e.c = c;
                g.edges.push_back(e);
            }
        }
        // advance, last color fastest
        int pos = n_ - 1;
        while (pos >= 0 && ++odometer_[static_cast<std::size_t>(pos)] == classes_.size()) {
            odometer_[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) exhausted_ = true;
        if (dedup_ && !seen_.insert(canonical_digest(g)).second) continue;
        ++emitted_;
        return g;
    }
    return std::nullopt;
}

std::vector<ColoredMultigraph> enumerate_instances(int n, int left_size, int right_size, bool dedup) {
    InstanceEnumerator it(n, left_size, right_size, dedup);
    std::vector<ColoredMultigraph> out;
    while (auto g = it.next()) out.push_back(std::move(*g));
    return out;
}

ColoredMultigraph instantiate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenKind::Random: return gen_random(spec);
        case GenKind::Latin: return gen_latin(spec.n + 1, spec.drop_symbol, spec.seed);
        case GenKind::Exhaustive: return InstanceEnumerator(spec.n, spec.left_size, spec.right_size).at(spec.index);
    }
    throw InputError("unknown generator kind");
}

std::string to_string(GenKind kind) {
    switch (kind) {
        case GenKind::Random: return "random";
        case GenKind::Latin: return "latin";
        case GenKind::Exhaustive: return "enumerate";
    }
    return "unknown";
}

std::optional<GenKind> parse_gen_kind(const std::string& name) {
    if (name == "random") return GenKind::Random;
    if (name == "latin") return GenKind::Latin;
    if (name == "enumerate") return GenKind::Exhaustive;
    return std::nullopt;
}

}  // namespace rainbow

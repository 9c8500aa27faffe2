#include "rainbow/oracle.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

void require_proper(const ColoredMultigraph& g) {
    ValidationReport report = validate(g, false);
    if (!report.ok) {
        throw InputError("oracle requires a properly colored graph: " + report.violations.front().detail);
    }
}

class RainbowSearch {
public:
    // target == 0 means "find the maximum"; otherwise stop at the first matching
    // of size target.
    RainbowSearch(const ColoredMultigraph& g, std::size_t target)
        : target_(target),
          by_color_(static_cast<std::size_t>(g.n)),
          left_used_(static_cast<std::size_t>(g.left_size), false),
          right_used_(static_cast<std::size_t>(g.right_size), false) {
        for (const Edge& e : g.edges) by_color_[static_cast<std::size_t>(e.c)].push_back(e);
        ceiling_ = static_cast<std::size_t>(std::min({g.n, g.left_size, g.right_size}));
        if (target_ != 0) ceiling_ = std::min(ceiling_, target_);
    }

    void run() { descend(0); }

    std::size_t best_size() const { return best_.size(); }
    const std::vector<Edge>& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }
    bool reached(std::size_t k) const { return best_.size() >= k; }

private:
    bool done() const { return best_.size() >= ceiling_; }

    void descend(std::size_t color) {
        ++nodes_;
        if (current_.size() > best_.size()) best_ = current_;
        if (done() || color == by_color_.size()) return;
        std::size_t remaining = by_color_.size() - color;
        std::size_t bound = std::max(best_.size(), target_ == 0 ? 0 : target_ - 1);
        if (current_.size() + remaining <= bound) return;

        for (const Edge& e : by_color_[color]) {
            auto u = static_cast<std::size_t>(e.u);
            auto v = static_cast<std::size_t>(e.v);
            if (left_used_[u] || right_used_[v]) continue;
            left_used_[u] = right_used_[v] = true;
            current_.push_back(e);
            descend(color + 1);
            current_.pop_back();
            left_used_[u] = right_used_[v] = false;
            if (done()) return;
        }
        descend(color + 1);
    }

    std::size_t target_;
    std::size_t ceiling_ = 0;
    std::vector<std::vector<Edge>> by_color_;
    std::vector<bool> left_used_;
    std::vector<bool> right_used_;
    std::vector<Edge> current_;
    std::vector<Edge> best_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult max_rainbow(const ColoredMultigraph& g) {
    require_proper(g);
    RainbowSearch search(g, 0);
    search.run();
    return {search.best_size(), Matching{search.best()}, search.nodes()};
}

std::optional<Matching> has_rainbow(const ColoredMultigraph& g, std::size_t k) {
    require_proper(g);
    if (k == 0) return Matching{};
    if (k > static_cast<std::size_t>(std::min({g.n, g.left_size, g.right_size}))) return std::nullopt;
    RainbowSearch search(g, k);
    search.run();
    if (!search.reached(k)) return std::nullopt;
    return Matching{search.best()};
}

OracleResult max_rainbow_naive(const ColoredMultigraph& g) {
    require_proper(g);
    if (g.edges.size() > kNaiveEdgeLimit) {
        throw InputError("max_rainbow_naive accepts at most " + std::to_string(kNaiveEdgeLimit) +
                         " edges (got " + std::to_string(g.edges.size()) + "); use max_rainbow");
    }
    const std::size_t m = g.edges.size();
    OracleResult result;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        ++result.nodes_explored;
        auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= result.max_size) continue;
        std::vector<const Edge*> chosen;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1U) chosen.push_back(&g.edges[i]);
        }
        bool ok = true;
        for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) {
                const Edge& a = *chosen[i];
                const Edge& b = *chosen[j];
                ok = a.u != b.u && a.v != b.v && a.c != b.c;
            }
        }
        if (ok) {
            result.max_size = size;
            best_mask = mask;
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (best_mask >> i & 1U) result.witness.edges.push_back(g.edges[i]);
    }
    return result;
}

}  // namespace rainbow

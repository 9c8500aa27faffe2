#include "rainbow/constructor.hpp"

#include <algorithm>
#include <numeric>

#include "rainbow/error.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

namespace {

// Maps indices of the current level graph to indices of the input graph.
struct Frame {
    std::vector<int> left;
    std::vector<int> right;
    std::vector<int> color;
};

std::vector<int> identity(int size) {
    std::vector<int> v(static_cast<std::size_t>(size));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner) {
    std::vector<int> out;
    out.reserve(inner.size());
    for (int i : inner) out.push_back(outer[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<int> without(std::vector<int> v, int index) {
    v.erase(v.begin() + index);
    return v;
}

Edge lift(const Frame& f, const Edge& e) {
    return {f.left[static_cast<std::size_t>(e.u)], f.right[static_cast<std::size_t>(e.v)],
            f.color[static_cast<std::size_t>(e.c)]};
}

class Constructor {
public:
    Constructor(const ColoredMultigraph& g, const ConstructOptions& options) : original_(g), options_(options) {}

    ConstructionOutcome run() {
        Frame top{identity(original_.left_size), identity(original_.right_size), identity(original_.n)};
        if (solve(original_, top, 0)) {
            out_.status = ConstructionStatus::Matched;
            out_.failure.reset();
        } else {
            out_.status = ConstructionStatus::StepFailed;
            out_.matching = {};
            if (!out_.failure) {
                fail(0, FailureReason::RecursiveFailure, canonical_digest(original_), "node budget exhausted");
            }
        }
        return out_;
    }

private:
    bool backtracking() const { return options_.strategy == PeelStrategy::Backtracking; }

    void fail(int depth, FailureReason reason, std::uint64_t digest, std::string detail) {
        if (out_.failure) return;
        out_.failure = ConstructionFailure{depth, reason, digest, std::move(detail)};
        out_.trace = path_;
    }

    bool solve(const ColoredMultigraph& level, const Frame& frame, int depth) {
        if (++out_.nodes > options_.node_budget) {
            out_.budget_exhausted = true;
            return false;
        }
        std::vector<DonorPolicy> policies{DonorPolicy::MaxDrain};
        if (backtracking()) policies.push_back(DonorPolicy::LastVertex);

        for (DonorPolicy policy : policies) {
            ReductionOutcome red = reduce_to_normal_form(level, policy);
            if (red.status != ReductionStatus::Normalized) {
                fail(depth, FailureReason::ReductionStalled, canonical_digest(level),
                     "reduction ended " + to_string(red.status) + " under " + to_string(policy));
                continue;
            }
            Frame normalized{compose(frame.left, red.left_origin), compose(frame.right, red.right_origin),
                             frame.color};
            const bool done = red.graph.n == 2 ? solve_base(red.graph, normalized, depth)
                                               : peel(red.graph, normalized, depth, policy);
            if (done) return true;
            if (out_.budget_exhausted) return false;
        }
        return false;
    }

    bool solve_base(const ColoredMultigraph& h, const Frame& frame, int depth) {
        std::optional<Matching> base = has_rainbow(h, 2);
        if (!base) {
            fail(depth, FailureReason::RecursiveFailure, canonical_digest(h), "base case has no rainbow 2-matching");
            return false;
        }
        Matching full{prefix_};
        for (const Edge& e : base->edges) full.edges.push_back(lift(frame, e));
        ++out_.lift_attempts;
        if (!is_rainbow_matching(original_, full, static_cast<std::size_t>(original_.n))) {
            ++out_.lift_rejections;
            fail(depth, FailureReason::RecursiveFailure, canonical_digest(h),
                 "lifted matching is not a rainbow matching of the input graph");
            return false;
        }
        out_.matching = std::move(full);
        out_.trace = path_;
        return true;
    }

    bool peel(const ColoredMultigraph& h, const Frame& frame, int depth, DonorPolicy policy) {
        const int colors_to_try = backtracking() ? h.n : 1;
        for (int k = 0; k < colors_to_try; ++k) {
            std::vector<Edge> candidates;
            for (const Edge& e : h.edges) {
                if (e.c == k) candidates.push_back(e);
            }
            std::sort(candidates.begin(), candidates.end());
            if (candidates.empty()) {
                fail(depth, FailureReason::NoPivotEdge, canonical_digest(h),
                     "no left vertex carries color " + std::to_string(k));
                continue;
            }
            if (!backtracking()) candidates.resize(1);

            for (const Edge& chosen : candidates) {
                ColoredMultigraph residual =
                    delete_vertex(delete_vertex(delete_color(h, k), Side::Left, chosen.u), Side::Right, chosen.v);
                std::vector<int> counts = color_counts(residual);
                auto short_color = std::find_if(counts.begin(), counts.end(), [&](int c) { return c != h.n; });
                if (short_color != counts.end()) {
                    int rc = static_cast<int>(short_color - counts.begin());
                    fail(depth, FailureReason::CountDeficit, canonical_digest(h),
                         "peeling color " + std::to_string(k) + " at left " + std::to_string(chosen.u) +
                             " leaves residual color " + std::to_string(rc) + " with " +
                             std::to_string(*short_color) + " edges, expected " + std::to_string(h.n));
                    continue;
                }
                Frame next{without(frame.left, chosen.u), without(frame.right, chosen.v), without(frame.color, k)};
                Edge original_edge = lift(frame, chosen);
                prefix_.push_back(original_edge);
                path_.push_back({depth, policy, h, k, chosen, original_edge});
                bool ok = solve(residual, next, depth + 1);
                if (ok) return true;
                prefix_.pop_back();
                path_.pop_back();
                if (out_.budget_exhausted) return false;
            }
        }
        return false;
    }

    const ColoredMultigraph& original_;
    ConstructOptions options_;
    ConstructionOutcome out_;
    std::vector<Edge> prefix_;
    std::vector<ConstructionLevel> path_;
};

}  // namespace

ConstructionOutcome construct(const ColoredMultigraph& g, const ConstructOptions& options) {
    ValidationReport report = validate(g, true);
    if (!report.ok) {
        throw InputError("construct requires a proper graph with n+1 edges per color: " +
                         report.violations.front().detail);
    }
    if (g.n < 2) throw InputError("construct requires n >= 2");
    return Constructor(g, options).run();
}

std::string to_string(FailureReason reason) {
    switch (reason) {
        case FailureReason::NoPivotEdge: return "NoPivotEdge";
        case FailureReason::ReductionStalled: return "ReductionStalled";
        case FailureReason::CountDeficit: return "CountDeficit";
        case FailureReason::RecursiveFailure: return "RecursiveFailure";
    }
    return "unknown";
}

std::string to_string(PeelStrategy strategy) {
    return strategy == PeelStrategy::FirstFeasible ? "first" : "backtrack";
}

std::optional<PeelStrategy> parse_peel_strategy(const std::string& name) {
    if (name == "first") return PeelStrategy::FirstFeasible;
    if (name == "backtrack") return PeelStrategy::Backtracking;
    return std::nullopt;
}

}  // namespace rainbow

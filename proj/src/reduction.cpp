#include "rainbow/reduction.hpp"

#include <algorithm>

#include "rainbow/error.hpp"
#include "rainbow/shifting.hpp"

namespace rainbow {

namespace {

void require_counted(const ColoredMultigraph& g, const char* who) {
    ValidationReport report = validate(g, true);
    if (!report.ok) {
        throw InputError(std::string(who) + " requires a proper graph with n+1 edges per color: " +
                         report.violations.front().detail);
    }
}

std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner) {
    std::vector<int> out;
    out.reserve(inner.size());
    for (int i : inner) out.push_back(outer[static_cast<std::size_t>(i)]);
    return out;
}

// Colors present at `vertex` as a bitmap over [0, n).
std::vector<bool> color_mask(const ColoredMultigraph& g, int vertex) {
    std::vector<bool> mask(static_cast<std::size_t>(g.n), false);
    for (const Edge& e : g.edges) {
        if (e.u == vertex) mask[static_cast<std::size_t>(e.c)] = true;
    }
    return mask;
}

std::optional<int> lowest_deficient(const ColoredMultigraph& g) {
    std::vector<int> deg = degrees(g, Side::Left);
    for (int u = 0; u < g.left_size; ++u) {
        if (deg[static_cast<std::size_t>(u)] < g.n) return u;
    }
    return std::nullopt;
}

std::optional<int> pick_donor(const ColoredMultigraph& g, int pivot, DonorPolicy policy) {
    if (g.left_size < 2) return std::nullopt;
    if (policy == DonorPolicy::LastVertex) {
        return pivot == g.left_size - 1 ? g.left_size - 2 : g.left_size - 1;
    }
    std::vector<bool> at_pivot = color_mask(g, pivot);
    std::vector<int> drain(static_cast<std::size_t>(g.left_size), 0);
    for (const Edge& e : g.edges) {
        if (!at_pivot[static_cast<std::size_t>(e.c)]) ++drain[static_cast<std::size_t>(e.u)];
    }
    int best = -1;
    for (int u = 0; u < g.left_size; ++u) {
        if (u == pivot) continue;
        if (best < 0 || drain[static_cast<std::size_t>(u)] >= drain[static_cast<std::size_t>(best)]) best = u;
    }
    return best;
}

ShiftOutcome shift_on(const ColoredMultigraph& g, Side side, int pivot, int donor) {
    if (side == Side::Left) return shift(g, pivot, donor);
    ShiftOutcome out = shift(mirror(g), pivot, donor);
    out.graph = mirror(out.graph);
    return out;
}

}  // namespace

ColoredMultigraph mirror(const ColoredMultigraph& g) {
    ColoredMultigraph out{g.n, g.right_size, g.left_size, {}};
    out.edges.reserve(g.edges.size());
    for (const Edge& e : g.edges) out.edges.push_back({e.v, e.u, e.c});
    return out;
}

Compaction compact(const ColoredMultigraph& g) {
    std::vector<int> ldeg = degrees(g, Side::Left);
    std::vector<int> rdeg = degrees(g, Side::Right);
    Compaction out;
    std::vector<int> lnew(ldeg.size(), -1), rnew(rdeg.size(), -1);
    for (std::size_t i = 0; i < ldeg.size(); ++i) {
        if (ldeg[i] > 0) {
            lnew[i] = static_cast<int>(out.left_origin.size());
            out.left_origin.push_back(static_cast<int>(i));
        }
    }
    for (std::size_t i = 0; i < rdeg.size(); ++i) {
        if (rdeg[i] > 0) {
            rnew[i] = static_cast<int>(out.right_origin.size());
            out.right_origin.push_back(static_cast<int>(i));
        }
    }
    out.graph.n = g.n;
    out.graph.left_size = static_cast<int>(out.left_origin.size());
    out.graph.right_size = static_cast<int>(out.right_origin.size());
    out.graph.edges.reserve(g.edges.size());
    for (const Edge& e : g.edges) {
        out.graph.edges.push_back({lnew[static_cast<std::size_t>(e.u)], rnew[static_cast<std::size_t>(e.v)], e.c});
    }
    return out;
}

int non_isolated_count(const ColoredMultigraph& g, Side side) {
    std::vector<int> deg = degrees(g, side);
    return static_cast<int>(std::count_if(deg.begin(), deg.end(), [](int d) { return d > 0; }));
}

bool is_normal_form(const ColoredMultigraph& g) {
    require_counted(g, "is_normal_form");
    return non_isolated_count(g, Side::Left) == g.n + 1 && non_isolated_count(g, Side::Right) == g.n + 1;
}

int default_max_iters(const ColoredMultigraph& g) { return 10 * g.n * (g.left_size + g.right_size); }

ReductionOutcome reduce_to_normal_form(const ColoredMultigraph& g, DonorPolicy policy, std::optional<int> max_iters) {
    require_counted(g, "reduce_to_normal_form");
    if (g.n < 1) throw InputError("reduce_to_normal_form requires n >= 1");
    const int cap = max_iters.value_or(default_max_iters(g));
    if (cap < 0) throw InputError("max_iters must be non-negative");

    ReductionOutcome out;
    Compaction c = compact(g);
    out.graph = std::move(c.graph);
    out.left_origin = std::move(c.left_origin);
    out.right_origin = std::move(c.right_origin);

    std::optional<Side> last_side;
    ReductionStep last_idle;
    bool have_idle = false;
    const int target = g.n + 1;

    while (true) {
        const bool left_big = out.graph.left_size > target;
        const bool right_big = out.graph.right_size > target;
        if (!left_big && !right_big) {
            out.status = ReductionStatus::Normalized;
            return out;
        }
        if (out.iterations >= cap) {
            out.status = ReductionStatus::IterationCapHit;
            return out;
        }

        Side side = left_big ? Side::Left : Side::Right;
        if (left_big && right_big && last_side == Side::Left) side = Side::Right;
        last_side = side;

        const ColoredMultigraph working = side == Side::Left ? out.graph : mirror(out.graph);
        auto pivot = lowest_deficient(working);
        auto donor = pivot ? pick_donor(working, *pivot, policy) : std::nullopt;
        if (!pivot || !donor) {
            out.status = ReductionStatus::Stalled;
            return out;
        }

        ShiftOutcome shifted = shift_on(out.graph, side, *pivot, *donor);
        ++out.iterations;
        ReductionStep step{side, *pivot, *donor, shifted.moves, shifted.swaps};
        out.trace.push_back(step);

        Compaction next = compact(shifted.graph);
        const bool isolated_some = next.graph.left_size < shifted.graph.left_size ||
                                   next.graph.right_size < shifted.graph.right_size;
        out.left_origin = compose(out.left_origin, next.left_origin);
        out.right_origin = compose(out.right_origin, next.right_origin);
        out.graph = std::move(next.graph);

        if (step.moves > 0 || isolated_some) {
            have_idle = false;
            continue;
        }
        auto same_pair = [&](const ReductionStep& s) {
            return s.side == step.side && s.pivot == step.pivot && s.donor == step.donor;
        };
        if (have_idle && same_pair(last_idle)) {
            out.status = ReductionStatus::Stalled;
            return out;
        }
        last_idle = step;
        have_idle = true;
    }
}

Compaction replay_reduction(const ColoredMultigraph& g, const std::vector<ReductionStep>& trace) {
    Compaction cur = compact(g);
    for (const ReductionStep& step : trace) {
        ShiftOutcome shifted = shift_on(cur.graph, step.side, step.pivot, step.donor);
        Compaction next = compact(shifted.graph);
        cur.graph = std::move(next.graph);
        cur.left_origin = compose(cur.left_origin, next.left_origin);
        cur.right_origin = compose(cur.right_origin, next.right_origin);
    }
    return cur;
}

std::string to_string(ReductionStatus status) {
    switch (status) {
        case ReductionStatus::Normalized: return "normalized";
        case ReductionStatus::Stalled: return "stalled";
        case ReductionStatus::IterationCapHit: return "iteration_cap_hit";
    }
    return "unknown";
}

std::string to_string(DonorPolicy policy) {
    return policy == DonorPolicy::MaxDrain ? "maxdrain" : "lastvertex";
}

std::optional<DonorPolicy> parse_donor_policy(const std::string& name) {
    if (name == "maxdrain") return DonorPolicy::MaxDrain;
    if (name == "lastvertex") return DonorPolicy::LastVertex;
    return std::nullopt;
}

}  // namespace rainbow

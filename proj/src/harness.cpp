#include "rainbow/harness.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <istream>
#include <ostream>
#include <thread>

#include "rainbow/error.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/shifting.hpp"

namespace rainbow {

namespace {

constexpr std::size_t kDetailSamples = 8;

std::string side_name(Side side) { return side == Side::Left ? "left" : "right"; }

bool has_full(const ColoredMultigraph& g) {
    return has_rainbow(g, static_cast<std::size_t>(g.n)).has_value();
}

Json step_json(const ReductionStep& s) {
    return {{"side", side_name(s.side)}, {"pivot", s.pivot}, {"donor", s.donor}, {"moves", s.moves},
            {"swaps", s.swaps}};
}

ColoredMultigraph shift_side(const ColoredMultigraph& g, Side side, int pivot, int donor) {
    if (side == Side::Left) return shift(g, pivot, donor).graph;
    return mirror(shift(mirror(g), pivot, donor).graph);
}

Evaluation evaluate_conj(const ColoredMultigraph& g) {
    OracleResult r = max_rainbow(g);
    Evaluation ev;
    ev.consistent = is_rainbow_matching(g, r.witness, r.max_size);
    ev.verdict = r.max_size >= static_cast<std::size_t>(g.n) ? Verdict::Holds : Verdict::Violated;
    ev.detail = {{"max", r.max_size}, {"witness", edges_to_json(r.witness.edges)}};
    return ev;
}

struct ShiftCheck {
    Side side;
    int pivot;
    int donor;
    ColoredMultigraph before;
    ColoredMultigraph after;
};

Evaluation evaluate_h1(const ColoredMultigraph& g, const HypothesisParams& params) {
    std::vector<ShiftCheck> checks;
    if (params.h1_mode == H1Mode::All) {
        for (Side side : {Side::Left, Side::Right}) {
            const ColoredMultigraph working = side == Side::Left ? g : mirror(g);
            for (int pivot = 0; pivot < working.left_size; ++pivot) {
                if (!shift_applicable(working, pivot)) continue;
                for (int donor = 0; donor < working.left_size; ++donor) {
                    if (donor == pivot) continue;
                    checks.push_back({side, pivot, donor, g, shift_side(g, side, pivot, donor)});
                }
            }
        }
    } else {
        ReductionOutcome red = reduce_to_normal_form(g, params.policy);
        Compaction cur = compact(g);
        for (const ReductionStep& step : red.trace) {
            ColoredMultigraph after = shift_side(cur.graph, step.side, step.pivot, step.donor);
            checks.push_back({step.side, step.pivot, step.donor, cur.graph, after});
            cur = compact(after);
        }
    }

    Evaluation ev;
    Json forward = Json::array();
    Json backward = Json::array();
    std::size_t forward_count = 0, backward_count = 0;
    // in All mode every shift starts from g itself
    const std::optional<bool> fixed_base =
        params.h1_mode == H1Mode::All ? std::optional<bool>(has_full(g)) : std::nullopt;
    for (const ShiftCheck& chk : checks) {
        const bool base = fixed_base ? *fixed_base : has_full(chk.before);
        bool after = has_full(chk.after);
        Json where = {{"side", side_name(chk.side)}, {"pivot", chk.pivot}, {"donor", chk.donor}};
        if (base && !after) {
            if (++forward_count <= kDetailSamples) forward.push_back(where);
        }
        if (!base && after) {
            if (++backward_count <= kDetailSamples) backward.push_back(where);
        }
    }
    ev.detail = {{"mode", params.h1_mode == H1Mode::All ? "all" : "policy"},
                 {"shifts_checked", checks.size()},
                 {"lost_matching", forward_count},
                 {"gained_matching", backward_count},
                 {"lost_examples", forward},
                 {"gained_examples", backward}};
    if (checks.empty()) {
        ev.verdict = Verdict::Inconclusive;
    } else {
        ev.verdict = forward_count + backward_count > 0 ? Verdict::Violated : Verdict::Holds;
    }
    return ev;
}

Evaluation evaluate_h2(const ColoredMultigraph& g, const HypothesisParams& params) {
    ReductionOutcome red = reduce_to_normal_form(g, params.policy);
    Evaluation ev;
    ev.verdict = red.status == ReductionStatus::Normalized ? Verdict::Holds : Verdict::Violated;
    Json tail = Json::array();
    std::size_t from = red.trace.size() > kDetailSamples ? red.trace.size() - kDetailSamples : 0;
    for (std::size_t i = from; i < red.trace.size(); ++i) tail.push_back(step_json(red.trace[i]));
    ev.detail = {{"status", to_string(red.status)},
                 {"policy", to_string(params.policy)},
                 {"iterations", red.iterations},
                 {"trace_tail", tail}};
    if (red.status == ReductionStatus::Normalized) ev.consistent = is_normal_form(red.graph);
    return ev;
}

Evaluation evaluate_h3(const ColoredMultigraph& g, const HypothesisParams& params) {
    Evaluation ev;
    if (g.n < 3) {
        ev.detail = {{"reason", "n <= 2 is the base case, nothing is peeled"}};
        return ev;
    }
    ReductionOutcome red = reduce_to_normal_form(g, params.policy);
    if (red.status != ReductionStatus::Normalized) {
        ev.detail = {{"reason", "reduction " + to_string(red.status)}};
        return ev;
    }
    const ColoredMultigraph& h = red.graph;
    std::size_t pairs = 0, clean = 0;
    Json first_deficit = nullptr;
    for (const Edge& e : h.edges) {
        ++pairs;
        ColoredMultigraph residual =
            delete_vertex(delete_vertex(delete_color(h, e.c), Side::Left, e.u), Side::Right, e.v);
        std::vector<int> counts = color_counts(residual);
        auto bad = std::find_if(counts.begin(), counts.end(), [&](int c) { return c != h.n; });
        if (bad == counts.end()) {
            ++clean;
        } else if (first_deficit.is_null()) {
            first_deficit = {{"color", e.c},
                             {"pivot", e.u},
                             {"partner", e.v},
                             {"residual_color", bad - counts.begin()},
                             {"count", *bad},
                             {"expected", h.n}};
        }
    }
    ev.verdict = clean > 0 ? Verdict::Holds : Verdict::Violated;
    ev.detail = {{"peels_checked", pairs}, {"peels_without_deficit", clean}, {"first_deficit", first_deficit}};
    return ev;
}

Json failure_json(const ConstructionOutcome& out) {
    if (!out.failure) return nullptr;
    return {{"depth", out.failure->depth},
            {"reason", to_string(out.failure->reason)},
            {"digest", digest_hex(out.failure->digest)},
            {"detail", out.failure->detail}};
}

Evaluation evaluate_construct(Hypothesis hyp, const ColoredMultigraph& g, const HypothesisParams& params) {
    Evaluation ev;
    if (hyp == Hypothesis::H4 && !has_full(g)) {
        ev.detail = {{"reason", "oracle finds no rainbow n-matching"}};
        return ev;
    }
    ConstructionOutcome out = construct(g, params.construct);
    const bool matched = out.status == ConstructionStatus::Matched;
    if (matched) ev.consistent = is_rainbow_matching(g, out.matching, static_cast<std::size_t>(g.n));
    ev.detail = {{"status", matched ? "matched" : "step_failed"},
                 {"failure", failure_json(out)},
                 {"lift_attempts", out.lift_attempts},
                 {"lift_rejections", out.lift_rejections},
                 {"nodes", out.nodes}};
    if (matched) ev.detail["matching"] = edges_to_json(out.matching.edges);
    if (hyp == Hypothesis::H4) {
        ev.verdict = matched ? Verdict::Holds : Verdict::Violated;
    } else if (out.lift_attempts == 0) {
        ev.verdict = Verdict::Inconclusive;
    } else {
        ev.verdict = out.lift_rejections > 0 ? Verdict::Violated : Verdict::Holds;
    }
    return ev;
}

Json build_witness(Hypothesis hyp, const ColoredMultigraph& g, const HypothesisParams& params, const Evaluation& ev,
                   bool minimize_it) {
    Json w;
    w["instance"] = instance_to_json(g);
    w["params"] = params_to_json(params);
    w["detail"] = ev.detail;
    if (minimize_it) {
        ColoredMultigraph small = minimize(g, [&](const ColoredMultigraph& h) { return violates(hyp, h, params); });
        w["minimized"] = instance_to_json(small);
    }
    return w;
}

}  // namespace

Evaluation evaluate(Hypothesis hyp, const ColoredMultigraph& g, const HypothesisParams& params) {
    switch (hyp) {
        case Hypothesis::Conj: return evaluate_conj(g);
        case Hypothesis::H1: return evaluate_h1(g, params);
        case Hypothesis::H2: return evaluate_h2(g, params);
        case Hypothesis::H3: return evaluate_h3(g, params);
        case Hypothesis::H4:
        case Hypothesis::H5: return evaluate_construct(hyp, g, params);
    }
    throw InputError("unknown hypothesis");
}

bool violates(Hypothesis hyp, const ColoredMultigraph& g, const HypothesisParams& params) {
    try {
        return evaluate(hyp, g, params).verdict == Verdict::Violated;
    } catch (const InputError&) {
        return false;
    }
}

ColoredMultigraph minimize(const ColoredMultigraph& g, const Predicate& predicate) {
    if (!predicate(g)) throw InputError("minimize: predicate does not hold on the input");
    ColoredMultigraph cur = g;
    auto accept = [&](const ColoredMultigraph& h) { return validate(h, false).ok && predicate(h); };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int c = 0; c < cur.n && !changed; ++c) {
            ColoredMultigraph h = delete_color(cur, c);
            if (accept(h)) cur = std::move(h), changed = true;
        }
        for (Side side : {Side::Left, Side::Right}) {
            for (int v = 0; v < cur.side_size(side) && !changed; ++v) {
                ColoredMultigraph h = delete_vertex(cur, side, v);
                if (accept(h)) cur = std::move(h), changed = true;
            }
        }
    }
    return cur;
}

CampaignResult run_campaign(const CampaignConfig& config, const std::vector<GenSpec>& stream) {
    CampaignResult result;
    result.summary.hyp = config.hyp;
    std::size_t count = stream.size();
    if (config.budget != 0 && count > config.budget) {
        count = config.budget;
        result.summary.truncated = true;
    }

    std::vector<ColoredMultigraph> instances;
    instances.reserve(count);
    result.records.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        instances.push_back(instantiate(stream[i]));
        result.records[i].hyp = config.hyp;
        result.records[i].spec = stream[i];
        result.records[i].digest = canonical_digest(instances.back());
    }

    std::vector<char> consistent(count, 1);
    auto work = [&](unsigned shard, unsigned shards) {
        for (std::size_t i = 0; i < count; ++i) {
            CampaignRecord& rec = result.records[i];
            if (rec.digest % shards != shard) continue;
            auto start = std::chrono::steady_clock::now();
            Evaluation ev = evaluate(config.hyp, instances[i], config.params);
            rec.verdict = ev.verdict;
            consistent[i] = ev.consistent ? 1 : 0;
            if (ev.verdict == Verdict::Violated) {
                rec.witness = build_witness(config.hyp, instances[i], config.params, ev, config.minimize_witnesses);
            }
            rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
    };

    const unsigned shards = std::max(1U, config.workers);
    if (shards == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned s = 0; s < shards; ++s) pool.emplace_back(work, s, shards);
        for (auto& t : pool) t.join();
    }

    CampaignSummary& sum = result.summary;
    sum.trials = count;
    for (std::size_t i = 0; i < count; ++i) {
        switch (result.records[i].verdict) {
            case Verdict::Holds: ++sum.holds; break;
            case Verdict::Violated: ++sum.violated; break;
            case Verdict::Inconclusive: ++sum.inconclusive; break;
        }
        if (!consistent[i]) ++sum.consistency_failures;
    }
    return result;
}

std::vector<GenSpec> random_specs(int n, int left, int right, std::uint64_t seed, std::size_t count) {
    std::vector<GenSpec> specs;
    specs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) specs.push_back({GenKind::Random, n, left, right, seed + i, 0, 0});
    return specs;
}

std::vector<GenSpec> latin_specs(int order, int drop_symbol, std::uint64_t seed, std::size_t count) {
    std::vector<GenSpec> specs;
    specs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        specs.push_back({GenKind::Latin, order - 1, order, order, seed + i, drop_symbol, 0});
    }
    return specs;
}

std::vector<GenSpec> enumeration_specs(int n, int left, int right) {
    InstanceEnumerator it(n, left, right);
    std::vector<GenSpec> specs;
    specs.reserve(it.total());
    for (std::uint64_t i = 0; i < it.total(); ++i) specs.push_back({GenKind::Exhaustive, n, left, right, 0, 0, i});
    return specs;
}

Json spec_to_json(const GenSpec& spec) {
    Json j;
    j["kind"] = to_string(spec.kind);
    j["n"] = spec.n;
    j["left"] = spec.left_size;
    j["right"] = spec.right_size;
    j["seed"] = spec.seed;
    if (spec.kind == GenKind::Latin) j["drop_symbol"] = spec.drop_symbol;
    if (spec.kind == GenKind::Exhaustive) j["index"] = spec.index;
    return j;
}

GenSpec spec_from_json(const Json& j) {
    GenSpec spec;
    auto kind = parse_gen_kind(j.value("kind", std::string{}));
    if (!kind) throw InputError("record spec has an unknown kind");
    spec.kind = *kind;
    spec.n = j.value("n", 0);
    spec.left_size = j.value("left", 0);
    spec.right_size = j.value("right", 0);
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.drop_symbol = j.value("drop_symbol", 0);
    spec.index = j.value("index", std::uint64_t{0});
    return spec;
}

Json params_to_json(const HypothesisParams& params) {
    return {{"h1_mode", params.h1_mode == H1Mode::All ? "all" : "policy"},
            {"policy", to_string(params.policy)},
            {"strategy", to_string(params.construct.strategy)},
            {"budget", params.construct.node_budget}};
}

HypothesisParams params_from_json(const Json& j) {
    HypothesisParams params;
    std::string mode = j.value("h1_mode", std::string{"all"});
    if (mode != "all" && mode != "policy") throw InputError("unknown h1_mode '" + mode + "'");
    params.h1_mode = mode == "all" ? H1Mode::All : H1Mode::Policy;
    auto policy = parse_donor_policy(j.value("policy", std::string{"maxdrain"}));
    auto strategy = parse_peel_strategy(j.value("strategy", std::string{"first"}));
    if (!policy || !strategy) throw InputError("record params name an unknown policy or strategy");
    params.policy = *policy;
    params.construct.strategy = *strategy;
    params.construct.node_budget = j.value("budget", std::uint64_t{10'000});
    return params;
}

std::string dump_record(const CampaignRecord& record, bool with_time) {
    Json j;
    j["hyp"] = to_string(record.hyp);
    j["digest"] = digest_hex(record.digest);
    j["verdict"] = to_string(record.verdict);
    j["spec"] = spec_to_json(record.spec);
    j["witness"] = record.witness ? *record.witness : Json(nullptr);
    j["ms"] = with_time ? record.ms : 0.0;
    return j.dump();
}

Json summary_to_json(const CampaignSummary& s) {
    return {{"hyp", to_string(s.hyp)},
            {"trials", s.trials},
            {"holds", s.holds},
            {"violated", s.violated},
            {"inconclusive", s.inconclusive},
            {"consistency_failures", s.consistency_failures},
            {"truncated", s.truncated}};
}

void write_records(std::ostream& out, const std::vector<CampaignRecord>& records, bool with_time) {
    for (const CampaignRecord& r : records) out << dump_record(r, with_time) << '\n';
}

ReplayReport replay(std::istream& in) {
    ReplayReport report;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            throw InputError("record line " + std::to_string(lineno) + " is not a JSON object");
        }
        ++report.records;
        auto verdict = parse_verdict(j.value("verdict", std::string{}));
        auto hyp = parse_hypothesis(j.value("hyp", std::string{}));
        if (!verdict || !hyp) throw InputError("record line " + std::to_string(lineno) + " lacks hyp or verdict");
        if (*verdict != Verdict::Violated) continue;
        ++report.checked;

        const Json& w = j.contains("witness") ? j.at("witness") : Json(nullptr);
        if (!w.is_object() || !w.contains("instance")) {
            report.mismatches.push_back({lineno, "violated record has no embedded instance"});
            continue;
        }
        ColoredMultigraph g = instance_from_json(w.at("instance"));
        HypothesisParams params = params_from_json(w.value("params", Json::object()));
        if (digest_hex(canonical_digest(g)) != j.value("digest", std::string{})) {
            report.mismatches.push_back({lineno, "digest does not match the embedded instance"});
            continue;
        }
        if (!violates(*hyp, g, params)) {
            report.mismatches.push_back({lineno, "instance no longer violates " + to_string(*hyp)});
            continue;
        }
        if (w.contains("minimized") && !violates(*hyp, instance_from_json(w.at("minimized")), params)) {
            report.mismatches.push_back({lineno, "minimized instance no longer violates " + to_string(*hyp)});
            continue;
        }
        ++report.reproduced;
    }
    return report;
}

Json replay_to_json(const ReplayReport& report) {
    Json mismatches = Json::array();
    for (const auto& m : report.mismatches) mismatches.push_back({{"line", m.line}, {"reason", m.reason}});
    return {{"records", report.records},
            {"checked", report.checked},
            {"reproduced", report.reproduced},
            {"mismatches", mismatches}};
}

std::string to_string(Hypothesis hyp) {
    switch (hyp) {
        case Hypothesis::H1: return "H1";
        case Hypothesis::H2: return "H2";
        case Hypothesis::H3: return "H3";
        case Hypothesis::H4: return "H4";
        case Hypothesis::H5: return "H5";
        case Hypothesis::Conj: return "CONJ";
    }
    return "unknown";
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::optional<Hypothesis> parse_hypothesis(const std::string& name) {
    std::string up = name;
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    if (up == "H1") return Hypothesis::H1;
    if (up == "H2") return Hypothesis::H2;
    if (up == "H3") return Hypothesis::H3;
    if (up == "H4") return Hypothesis::H4;
    if (up == "H5") return Hypothesis::H5;
    if (up == "CONJ") return Hypothesis::Conj;
    return std::nullopt;
}

std::optional<Verdict> parse_verdict(const std::string& name) {
    if (name == "holds") return Verdict::Holds;
    if (name == "violated") return Verdict::Violated;
    if (name == "inconclusive") return Verdict::Inconclusive;
    return std::nullopt;
}

}  // namespace rainbow

// rainbow: command-line front end over the instance format.
//
//   rainbow gen --kind random --n 3 --left 5 --right 5 --seed 7 | rainbow reduce | rainbow construct
//
// Exit codes: 0 success, 2 invalid input, 3 step failed or reduction stalled,
// 4 internal consistency failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rainbow/constructor.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/instance_io.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/reduction.hpp"
#include "rainbow/shifting.hpp"

namespace {

using namespace rainbow;

constexpr int kOk = 0;
constexpr int kInvalidInput = 2;
constexpr int kStepFailed = 3;
constexpr int kInconsistent = 4;

struct Globals {
    std::uint64_t seed = 0;
    std::string in;
    std::string out;
    std::string format = "json";
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw InputError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::vector<ColoredMultigraph> load(const Globals& g) {
    if (g.in.empty() || g.in == "-") return read_instances(std::cin);
    std::ifstream f(g.in);
    if (!f) throw InputError("cannot open input file " + g.in);
    return read_instances(f);
}

std::ofstream open_trace(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot open trace file " + path);
    return f;
}

Json rewrite_json(const ShiftRewrite& r) {
    return {{"kind", r.kind == RewriteKind::Move ? "move" : "swap"},
            {"color", r.color},
            {"removed", edges_to_json(r.removed)},
            {"added", edges_to_json(r.added)}};
}

struct GenArgs {
    std::string kind = "random";
    int n = 2;
    int left = 0;
    int right = 0;
    int order = 0;
    int drop_symbol = -1;
    std::size_t count = 1;
    bool dedup = false;
};

// Latin: order defaults to n+1, dropped symbol defaults to the last one.
void settle_latin(GenArgs& a) {
    if (a.order == 0) a.order = a.n + 1;
    if (a.drop_symbol < 0) a.drop_symbol = a.order - 1;
}

std::vector<GenSpec> specs_for(GenArgs a, std::uint64_t seed) {
    auto kind = parse_gen_kind(a.kind);
    if (!kind) throw InputError("unknown generator kind '" + a.kind + "'");
    if (a.left == 0) a.left = a.n + 1;
    if (a.right == 0) a.right = a.n + 1;
    switch (*kind) {
        case GenKind::Random: return random_specs(a.n, a.left, a.right, seed, a.count);
        case GenKind::Latin: settle_latin(a); return latin_specs(a.order, a.drop_symbol, seed, a.count);
        case GenKind::Exhaustive: return enumeration_specs(a.n, a.left, a.right);
    }
    return {};
}

void add_gen_options(CLI::App* cmd, GenArgs& a, const std::string& kind_flag) {
    cmd->add_option(kind_flag, a.kind, "random | latin | enumerate")->check(CLI::IsMember({"random", "latin", "enumerate"}));
    cmd->add_option("--n", a.n, "number of colors");
    cmd->add_option("--left", a.left, "left part size (default n+1)");
    cmd->add_option("--right", a.right, "right part size (default n+1)");
    cmd->add_option("--order", a.order, "Latin square order (default n+1)");
    cmd->add_option("--drop-symbol", a.drop_symbol, "Latin symbol to delete (default order-1)");
    cmd->add_option("--count", a.count, "instances to draw (random, latin)");
}

int run_gen(const Globals& g, GenArgs a) {
    Output out(g.out);
    auto kind = parse_gen_kind(a.kind);
    if (kind == GenKind::Exhaustive) {
        if (a.left == 0) a.left = a.n + 1;
        if (a.right == 0) a.right = a.n + 1;
        InstanceEnumerator it(a.n, a.left, a.right, a.dedup);
        while (auto inst = it.next()) out.stream() << dump_instance(*inst) << '\n';
        return kOk;
    }
    for (const GenSpec& spec : specs_for(a, g.seed)) out.stream() << dump_instance(instantiate(spec)) << '\n';
    return kOk;
}

int run_validate(const Globals& g, bool counts) {
    Output out(g.out);
    bool all_ok = true;
    for (const ColoredMultigraph& inst : load(g)) {
        ValidationReport report = validate(inst, counts);
        all_ok = all_ok && report.ok;
        if (g.format == "summary") {
            out.stream() << (report.ok ? "ok" : "invalid") << '\n';
            for (const Violation& v : report.violations) out.stream() << "  " << v.rule << ": " << v.detail << '\n';
            continue;
        }
        Json violations = Json::array();
        for (const Violation& v : report.violations) {
            violations.push_back({{"rule", v.rule}, {"detail", v.detail}, {"edges", v.edge_indices}});
        }
        out.stream() << Json{{"ok", report.ok}, {"violations", violations}}.dump() << '\n';
    }
    return all_ok ? kOk : kInvalidInput;
}

int run_solve(const Globals& g, bool naive) {
    Output out(g.out);
    int code = kOk;
    for (const ColoredMultigraph& inst : load(g)) {
        OracleResult r = naive ? max_rainbow_naive(inst) : max_rainbow(inst);
        if (!is_rainbow_matching(inst, r.witness, r.max_size)) code = kInconsistent;
        if (g.format == "summary") {
            out.stream() << "max " << r.max_size << " of n=" << inst.n << '\n';
            continue;
        }
        Json j{{"max", r.max_size},
               {"n", inst.n},
               {"conjecture_holds", r.max_size >= static_cast<std::size_t>(inst.n)},
               {"witness", edges_to_json(r.witness.edges)},
               {"nodes", r.nodes_explored}};
        out.stream() << j.dump() << '\n';
    }
    return code;
}

int run_shift(const Globals& g, int pivot, int donor, const std::string& side, const std::string& trace_path) {
    Output out(g.out);
    std::ofstream trace;
    if (!trace_path.empty()) trace = open_trace(trace_path);
    for (const ColoredMultigraph& inst : load(g)) {
        ShiftOutcome s = side == "right" ? shift(mirror(inst), pivot, donor) : shift(inst, pivot, donor);
        if (side == "right") s.graph = mirror(s.graph);
        if (trace) {
            for (const ShiftRewrite& r : s.rewrites) trace << rewrite_json(r).dump() << '\n';
        }
        out.stream() << dump_instance(s.graph) << '\n';
    }
    return kOk;
}

int run_reduce(const Globals& g, const std::string& policy_name, int max_iters, const std::string& trace_path) {
    auto policy = parse_donor_policy(policy_name);
    if (!policy) throw InputError("unknown policy '" + policy_name + "'");
    Output out(g.out);
    std::ofstream trace;
    if (!trace_path.empty()) trace = open_trace(trace_path);
    int code = kOk;
    for (const ColoredMultigraph& inst : load(g)) {
        ReductionOutcome r = reduce_to_normal_form(inst, *policy, max_iters < 0 ? std::nullopt : std::optional<int>(max_iters));
        if (trace) {
            for (const ReductionStep& s : r.trace) {
                trace << Json{{"side", s.side == Side::Left ? "left" : "right"},
                              {"pivot", s.pivot},
                              {"donor", s.donor},
                              {"moves", s.moves},
                              {"swaps", s.swaps}}
                             .dump()
                      << '\n';
            }
            trace << Json{{"status", to_string(r.status)}, {"iterations", r.iterations}}.dump() << '\n';
        }
        if (r.status != ReductionStatus::Normalized) {
            code = kStepFailed;
            std::cerr << "reduce: " << to_string(r.status) << " after " << r.iterations << " iterations\n";
        }
        out.stream() << dump_instance(r.graph) << '\n';
    }
    return code;
}

int run_construct(const Globals& g, const std::string& strategy_name, std::uint64_t budget) {
    auto strategy = parse_peel_strategy(strategy_name);
    if (!strategy) throw InputError("unknown strategy '" + strategy_name + "'");
    Output out(g.out);
    int code = kOk;
    for (const ColoredMultigraph& inst : load(g)) {
        ConstructionOutcome r = construct(inst, {*strategy, budget});
        const bool matched = r.status == ConstructionStatus::Matched;
        if (matched && !is_rainbow_matching(inst, r.matching, static_cast<std::size_t>(inst.n))) {
            std::cerr << "construct: Matched outcome failed verification\n";
            code = kInconsistent;
        } else if (!matched && code == kOk) {
            code = kStepFailed;
        }
        if (g.format == "summary") {
            out.stream() << (matched ? "matched" : "step_failed");
            if (r.failure) out.stream() << " " << to_string(r.failure->reason) << " at depth " << r.failure->depth;
            out.stream() << '\n';
            continue;
        }
        Json levels = Json::array();
        for (const ConstructionLevel& l : r.trace) {
            levels.push_back({{"depth", l.depth},
                              {"color", l.color},
                              {"edge", {l.edge.u, l.edge.v, l.edge.c}},
                              {"original_edge", {l.original_edge.u, l.original_edge.v, l.original_edge.c}}});
        }
        Json j{{"status", matched ? "matched" : "step_failed"}};
        if (matched) {
            j["matching"] = edges_to_json(r.matching.edges);
        } else {
            j["failure"] = {{"depth", r.failure->depth},
                            {"reason", to_string(r.failure->reason)},
                            {"digest", digest_hex(r.failure->digest)},
                            {"detail", r.failure->detail}};
        }
        j["trace"] = levels;
        j["nodes"] = r.nodes;
        out.stream() << j.dump() << '\n';
    }
    return code;
}

struct ParamArgs {
    std::string h1_mode = "all";
    std::string policy = "maxdrain";
    std::string strategy = "first";
    std::uint64_t budget = 10'000;
};

void add_param_options(CLI::App* cmd, ParamArgs& p) {
    cmd->add_option("--h1-mode", p.h1_mode, "policy | all")->check(CLI::IsMember({"policy", "all"}));
    cmd->add_option("--policy", p.policy, "maxdrain | lastvertex")->check(CLI::IsMember({"maxdrain", "lastvertex"}));
    cmd->add_option("--strategy", p.strategy, "first | backtrack")->check(CLI::IsMember({"first", "backtrack"}));
    cmd->add_option("--budget", p.budget, "constructor node budget");
}

HypothesisParams to_params(const ParamArgs& p) {
    HypothesisParams params;
    params.h1_mode = p.h1_mode == "all" ? H1Mode::All : H1Mode::Policy;
    params.policy = *parse_donor_policy(p.policy);
    params.construct.strategy = *parse_peel_strategy(p.strategy);
    params.construct.node_budget = p.budget;
    return params;
}

Hypothesis to_hypothesis(const std::string& name) {
    auto hyp = parse_hypothesis(name);
    if (!hyp) throw InputError("unknown hypothesis '" + name + "'");
    return *hyp;
}

int run_check(const Globals& g, const std::string& hyp, const GenArgs& gen, const ParamArgs& p, std::size_t max_trials,
              unsigned workers, bool minimize_it) {
    CampaignConfig config;
    config.hyp = to_hypothesis(hyp);
    config.params = to_params(p);
    config.budget = max_trials;
    config.workers = workers;
    config.minimize_witnesses = minimize_it;
    CampaignResult result = run_campaign(config, specs_for(gen, g.seed));
    if (!g.out.empty()) {
        Output out(g.out);
        write_records(out.stream(), result.records);
    }
    const CampaignSummary& s = result.summary;
    if (g.format == "summary") {
        std::cout << to_string(s.hyp) << ": " << s.trials << " trials, " << s.holds << " holds, " << s.violated
                  << " violated, " << s.inconclusive << " inconclusive"
                  << (s.truncated ? " (truncated)" : "") << '\n';
        if (s.consistency_failures) std::cout << s.consistency_failures << " internal consistency failures\n";
    } else {
        std::cout << summary_to_json(s).dump() << '\n';
    }
    return s.consistency_failures ? kInconsistent : kOk;
}

int run_minimize(const Globals& g, const std::string& hyp_name, const ParamArgs& p) {
    const Hypothesis hyp = to_hypothesis(hyp_name);
    const HypothesisParams params = to_params(p);
    Output out(g.out);
    for (const ColoredMultigraph& inst : load(g)) {
        ColoredMultigraph small =
            minimize(inst, [&](const ColoredMultigraph& h) { return violates(hyp, h, params); });
        out.stream() << dump_instance(small) << '\n';
    }
    return kOk;
}

int run_replay(const Globals& g) {
    ReplayReport report;
    if (g.in.empty() || g.in == "-") {
        report = replay(std::cin);
    } else {
        std::ifstream f(g.in);
        if (!f) throw InputError("cannot open records file " + g.in);
        report = replay(f);
    }
    Output out(g.out);
    if (g.format == "summary") {
        out.stream() << report.reproduced << "/" << report.checked << " violated records reproduced ("
                     << report.records << " records)\n";
        for (const auto& m : report.mismatches) out.stream() << "  line " << m.line << ": " << m.reason << '\n';
    } else {
        out.stream() << replay_to_json(report).dump() << '\n';
    }
    return report.ok() ? kOk : kInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rainbow matchings in properly edge-colored bipartite multigraphs"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals globals;
    app.add_option("--seed", globals.seed, "seed for every random choice");
    app.add_option("--in", globals.in, "input file (default stdin)");
    app.add_option("--out", globals.out, "output file (default stdout)");
    app.add_option("--format", globals.format, "json | summary")->check(CLI::IsMember({"json", "summary"}));

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate instances");
    add_gen_options(gen, gen_args, "--kind");
    gen->add_flag("--dedup", gen_args.dedup, "drop duplicate digests when enumerating");

    bool counts = false;
    auto* val = app.add_subcommand("validate", "check properness (and color counts)");
    val->add_flag("--counts", counts, "require n+1 edges per color");

    bool naive = false;
    auto* solve = app.add_subcommand("solve", "exact maximum rainbow matching");
    solve->add_flag("--naive", naive, "use subset enumeration (at most 24 edges)");

    int pivot = 0, donor = 1;
    std::string side = "left", shift_trace;
    auto* sh = app.add_subcommand("shift", "apply one shift");
    sh->add_option("--pivot", pivot, "receiving vertex")->required();
    sh->add_option("--donor", donor, "contributing vertex")->required();
    sh->add_option("--side", side, "left | right")->check(CLI::IsMember({"left", "right"}));
    sh->add_option("--trace", shift_trace, "write rewrites as JSON lines to this file");

    std::string policy = "maxdrain", reduce_trace;
    int max_iters = -1;
    auto* red = app.add_subcommand("reduce", "shift to normal form");
    red->add_option("--policy", policy, "maxdrain | lastvertex")->check(CLI::IsMember({"maxdrain", "lastvertex"}));
    red->add_option("--max-iters", max_iters, "iteration cap (default 10*n*(left+right))");
    red->add_option("--trace", reduce_trace, "write steps as JSON lines to this file");

    std::string strategy = "first";
    std::uint64_t budget = 10'000;
    auto* con = app.add_subcommand("construct", "inductive construction of a rainbow n-matching");
    con->add_option("--strategy", strategy, "first | backtrack")->check(CLI::IsMember({"first", "backtrack"}));
    con->add_option("--budget", budget, "node budget for backtracking");

    std::string hyp = "conj";
    GenArgs check_gen;
    ParamArgs check_params;
    std::size_t max_trials = 0;
    unsigned workers = 1;
    bool minimize_it = false;
    auto* chk = app.add_subcommand("check", "run a hypothesis campaign");
    chk->add_option("--hyp", hyp, "H1 | H2 | H3 | H4 | H5 | conj")->required();
    add_gen_options(chk, check_gen, "--gen");
    add_param_options(chk, check_params);
    chk->add_option("--max-trials", max_trials, "stop after this many trials (0 = all)");
    chk->add_option("--workers", workers, "worker threads");
    chk->add_flag("--minimize", minimize_it, "attach a minimized instance to each violation");

    std::string min_hyp = "conj";
    ParamArgs min_params;
    auto* mini = app.add_subcommand("minimize", "shrink an instance that violates a hypothesis");
    mini->add_option("--hyp", min_hyp, "H1 | H2 | H3 | H4 | H5 | conj")->required();
    add_param_options(mini, min_params);

    auto* rep = app.add_subcommand("replay", "re-verify violated records");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalidInput;
    }

    try {
        if (gen->parsed()) return run_gen(globals, gen_args);
        if (val->parsed()) return run_validate(globals, counts);
        if (solve->parsed()) return run_solve(globals, naive);
        if (sh->parsed()) return run_shift(globals, pivot, donor, side, shift_trace);
        if (red->parsed()) return run_reduce(globals, policy, max_iters, reduce_trace);
        if (con->parsed()) return run_construct(globals, strategy, budget);
        if (chk->parsed()) return run_check(globals, hyp, check_gen, check_params, max_trials, workers, minimize_it);
        if (mini->parsed()) return run_minimize(globals, min_hyp, min_params);
        if (rep->parsed()) return run_replay(globals);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

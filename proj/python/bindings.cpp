// Thin pybind11 layer. Instances and results cross the boundary as JSON text;
// rainbow/__init__.py turns them into dicts.

#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rainbow/constructor.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/instance_io.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/reduction.hpp"
#include "rainbow/shifting.hpp"

namespace py = pybind11;
using namespace rainbow;

namespace {

std::string validate_json(const std::string& text, bool counts) {
    ValidationReport r = validate(parse_instance(text), counts);
    Json v = Json::array();
    for (const Violation& x : r.violations) v.push_back({{"rule", x.rule}, {"detail", x.detail}});
    return Json{{"ok", r.ok}, {"violations", v}}.dump();
}

std::string solve_json(const std::string& text, bool naive) {
    ColoredMultigraph g = parse_instance(text);
    OracleResult r = naive ? max_rainbow_naive(g) : max_rainbow(g);
    return Json{{"max", r.max_size}, {"witness", edges_to_json(r.witness.edges)}, {"nodes", r.nodes_explored}}.dump();
}

std::string shift_json(const std::string& text, int pivot, int donor, const std::string& side) {
    ColoredMultigraph g = parse_instance(text);
    if (side != "left" && side != "right") throw InputError("side must be left or right");
    const bool right = side == "right";
    ShiftOutcome s = shift(right ? mirror(g) : g, pivot, donor);
    return Json{{"instance", instance_to_json(right ? mirror(s.graph) : s.graph)},
                {"moves", s.moves},
                {"swaps", s.swaps}}
        .dump();
}

std::string reduce_json(const std::string& text, const std::string& policy_name, std::optional<int> max_iters) {
    auto policy = parse_donor_policy(policy_name);
    if (!policy) throw InputError("unknown policy '" + policy_name + "'");
    ReductionOutcome r = reduce_to_normal_form(parse_instance(text), *policy, max_iters);
    Json trace = Json::array();
    for (const ReductionStep& s : r.trace) {
        trace.push_back({{"side", s.side == Side::Left ? "left" : "right"},
                         {"pivot", s.pivot},
                         {"donor", s.donor},
                         {"moves", s.moves},
                         {"swaps", s.swaps}});
    }
    return Json{{"status", to_string(r.status)},
                {"instance", instance_to_json(r.graph)},
                {"iterations", r.iterations},
                {"trace", trace}}
        .dump();
}

std::string construct_json(const std::string& text, const std::string& strategy_name, std::uint64_t budget) {
    auto strategy = parse_peel_strategy(strategy_name);
    if (!strategy) throw InputError("unknown strategy '" + strategy_name + "'");
    ConstructionOutcome r = construct(parse_instance(text), {*strategy, budget});
    Json j{{"status", r.status == ConstructionStatus::Matched ? "matched" : "step_failed"}};
    if (r.status == ConstructionStatus::Matched) j["matching"] = edges_to_json(r.matching.edges);
    if (r.failure) {
        j["failure"] = {{"depth", r.failure->depth},
                        {"reason", to_string(r.failure->reason)},
                        {"digest", digest_hex(r.failure->digest)}};
    }
    j["lift_attempts"] = r.lift_attempts;
    j["lift_rejections"] = r.lift_rejections;
    j["nodes"] = r.nodes;
    return j.dump();
}

std::string evaluate_json(const std::string& hyp_name, const std::string& text, const std::string& params_text) {
    auto hyp = parse_hypothesis(hyp_name);
    if (!hyp) throw InputError("unknown hypothesis '" + hyp_name + "'");
    HypothesisParams params = params_text.empty() ? HypothesisParams{} : params_from_json(Json::parse(params_text));
    Evaluation e = evaluate(*hyp, parse_instance(text), params);
    return Json{{"verdict", to_string(e.verdict)}, {"detail", e.detail}, {"consistent", e.consistent}}.dump();
}

std::string campaign_json(const std::string& hyp_name, const std::string& specs_text, const std::string& params_text,
                          unsigned workers) {
    auto hyp = parse_hypothesis(hyp_name);
    if (!hyp) throw InputError("unknown hypothesis '" + hyp_name + "'");
    CampaignConfig config;
    config.hyp = *hyp;
    config.workers = workers;
    if (!params_text.empty()) config.params = params_from_json(Json::parse(params_text));
    std::vector<GenSpec> specs;
    for (const Json& s : Json::parse(specs_text)) specs.push_back(spec_from_json(s));
    CampaignResult r = run_campaign(config, specs);
    Json records = Json::array();
    for (const CampaignRecord& rec : r.records) records.push_back(Json::parse(dump_record(rec, false)));
    return Json{{"summary", summary_to_json(r.summary)}, {"records", records}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rainbow matchings in edge-colored bipartite multigraphs";
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def("validate", &validate_json, py::arg("instance"), py::arg("counts") = false);
    m.def("digest", [](const std::string& text) { return digest_hex(canonical_digest(parse_instance(text))); });
    m.def("solve", &solve_json, py::arg("instance"), py::arg("naive") = false);
    m.def("shift", &shift_json, py::arg("instance"), py::arg("pivot"), py::arg("donor"), py::arg("side") = "left");
    m.def("reduce", &reduce_json, py::arg("instance"), py::arg("policy") = "maxdrain",
          py::arg("max_iters") = py::none());
    m.def("construct", &construct_json, py::arg("instance"), py::arg("strategy") = "first",
          py::arg("budget") = 10'000);
    m.def("gen_random", [](int n, int left, int right, std::uint64_t seed) {
        return dump_instance(gen_random({GenKind::Random, n, left, right, seed, 0, 0}));
    }, py::arg("n"), py::arg("left"), py::arg("right"), py::arg("seed") = 0);
    m.def("gen_latin", [](int order, int drop_symbol, std::uint64_t seed) {
        return dump_instance(gen_latin(order, drop_symbol, seed));
    }, py::arg("order"), py::arg("drop_symbol"), py::arg("seed") = 0);
    m.def("evaluate", &evaluate_json, py::arg("hypothesis"), py::arg("instance"), py::arg("params") = "");
    m.def("campaign", &campaign_json, py::arg("hypothesis"), py::arg("specs"), py::arg("params") = "",
          py::arg("workers") = 1);
    m.def("random_specs", [](int n, int left, int right, std::uint64_t seed, std::size_t count) {
        Json out = Json::array();
        for (const GenSpec& s : random_specs(n, left, right, seed, count)) out.push_back(spec_to_json(s));
        return out.dump();
    });
}

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/constructor.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/instance_io.hpp"
#include "rainbow/reduction.hpp"

namespace rainbow {

/// Claims measured by campaigns.
///   H1   shifting preserves (non-)existence of a rainbow n-matching
///   H2   reduction reaches normal form
///   H3   some peel leaves exactly n edges in every residual color
///   H4   construction succeeds whenever the oracle finds an n-matching
///   H5   lifted matchings lie in the input graph
///   Conj the graph has a rainbow n-matching
enum class Hypothesis { H1, H2, H3, H4, H5, Conj };

enum class Verdict { Holds, Violated, Inconclusive };

/// Which shifts H1 inspects: those the reduction performs, or every
/// applicable (pivot, donor) pair on both sides.
enum class H1Mode { Policy, All };

struct HypothesisParams {
    H1Mode h1_mode = H1Mode::All;
    DonorPolicy policy = DonorPolicy::MaxDrain;
    ConstructOptions construct;
};

struct Evaluation {
    Verdict verdict = Verdict::Inconclusive;
    Json detail = Json::object();
    /// False when a result contradicted a checkable guarantee (an oracle
    /// witness or Matched outcome that fails verification).
    bool consistent = true;
};

/// Evaluates one hypothesis on one instance. Propagates InputError.
Evaluation evaluate(Hypothesis hyp, const ColoredMultigraph& g, const HypothesisParams& params);

/// evaluate(...) == Violated, with invalid inputs counted as not violating.
bool violates(Hypothesis hyp, const ColoredMultigraph& g, const HypothesisParams& params);

using Predicate = std::function<bool(const ColoredMultigraph&)>;

/// Greedy 1-minimal shrink: repeatedly deletes the first color or vertex whose
/// removal keeps the graph proper and the predicate true. Colors are tried
/// first, then left vertices, then right vertices.
/// Throws InputError when the predicate is false on the input.
ColoredMultigraph minimize(const ColoredMultigraph& g, const Predicate& predicate);

struct CampaignRecord {
    Hypothesis hyp = Hypothesis::Conj;
    GenSpec spec;
    std::uint64_t digest = 0;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Json> witness;
    double ms = 0.0;
};

struct CampaignConfig {
    Hypothesis hyp = Hypothesis::Conj;
    HypothesisParams params;
    std::size_t budget = 0;  ///< max trials; 0 = unlimited
    unsigned workers = 1;
    bool minimize_witnesses = false;
};

struct CampaignSummary {
    Hypothesis hyp = Hypothesis::Conj;
    std::size_t trials = 0;
    std::size_t holds = 0;
    std::size_t violated = 0;
    std::size_t inconclusive = 0;
    std::size_t consistency_failures = 0;
    bool truncated = false;
};

struct CampaignResult {
    CampaignSummary summary;
    std::vector<CampaignRecord> records;
};

/// Evaluates the hypothesis on every spec in order. Work is sharded across
/// workers by digest modulo worker count; records keep stream order.
CampaignResult run_campaign(const CampaignConfig& config, const std::vector<GenSpec>& stream);

std::vector<GenSpec> random_specs(int n, int left, int right, std::uint64_t seed, std::size_t count);
std::vector<GenSpec> latin_specs(int order, int drop_symbol, std::uint64_t seed, std::size_t count);
std::vector<GenSpec> enumeration_specs(int n, int left, int right);

Json spec_to_json(const GenSpec& spec);
GenSpec spec_from_json(const Json& j);
Json params_to_json(const HypothesisParams& params);
HypothesisParams params_from_json(const Json& j);

/// One record as a JSONL line (no newline). Without `with_time`, "ms" is 0.
std::string dump_record(const CampaignRecord& record, bool with_time = true);
Json summary_to_json(const CampaignSummary& summary);

void write_records(std::ostream& out, const std::vector<CampaignRecord>& records, bool with_time = true);

struct ReplayMismatch {
    std::size_t line = 0;
    std::string reason;
};

struct ReplayReport {
    std::size_t records = 0;
    std::size_t checked = 0;     ///< Violated records re-evaluated
    std::size_t reproduced = 0;
    std::vector<ReplayMismatch> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
};

/// Re-evaluates every Violated record from its embedded instance and params.
/// Throws InputError on unparseable lines.
ReplayReport replay(std::istream& records);
Json replay_to_json(const ReplayReport& report);

std::string to_string(Hypothesis hyp);
std::string to_string(Verdict verdict);
std::optional<Hypothesis> parse_hypothesis(const std::string& name);
std::optional<Verdict> parse_verdict(const std::string& name);

}  // namespace rainbow

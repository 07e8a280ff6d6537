#pragma once

// Scenario ingestion, deterministic replay and trace output.

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "occ/dynamics.hpp"
#include "occ/expression.hpp"
#include "occ/history.hpp"
#include "occ/knowledge.hpp"
#include "occ/stimulus.hpp"

namespace occ {

// A prospect as written in a scenario. Without an explicit likelihood the
// engine uses the history's likelihood for the type key at registration.
struct ProspectDecl {
  std::string id;
  std::string type_key;
  SignedAppraisal desirability;
  std::optional<double> likelihood;

  friend bool operator==(const ProspectDecl&, const ProspectDecl&) = default;
};

struct Resolution {
  std::string prospect_id;
  Outcome outcome = Outcome::Confirmed;

  friend bool operator==(const Resolution&, const Resolution&) = default;
};

struct EffortEntry {
  std::string goal;
  double units = 0.0;

  friend bool operator==(const EffortEntry&, const EffortEntry&) = default;
};

struct ScenarioStep {
  TimestampMs t_ms = 0;
  std::variant<Stimulus, ProspectDecl, Resolution, EffortEntry> payload;

  std::string_view kind() const noexcept;
  friend bool operator==(const ScenarioStep&, const ScenarioStep&) = default;
};

struct Scenario {
  int version = 1;
  std::vector<ScenarioStep> steps;
};

Scenario parse_scenario(std::string_view document);
Scenario load_scenario_file(const std::filesystem::path& path);

Stimulus parse_stimulus(std::string_view document);
Stimulus load_stimulus_file(const std::filesystem::path& path);

// Overrides any subset of the defaults; unknown fields are rejected.
EngineParams parse_params(std::string_view document);
EngineParams load_params_file(const std::filesystem::path& path);

struct TraceRecord {
  TimestampMs t_ms = 0;
  std::vector<AppraisalSignal> fired;
  EmotionState::Values state{};
  ExpressionFrame frame;
  std::set<RegulationHint> hints;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct Trace {
  std::vector<TraceRecord> records;
};

// Starts neutral at t=0 with an empty history; emits the initial record and
// then one record per distinct step time after all of its steps. A failing
// step aborts with StepError carrying its index.
Trace run_scenario(const KnowledgeBase& kb, const Scenario& scenario,
                   const ExpressionProfile& profile, ExpressionMode mode,
                   const EngineParams& params);

enum class TraceFormat : std::uint8_t { Jsonl, Csv };

std::optional<TraceFormat> trace_format_from_string(std::string_view s) noexcept;
std::string emit_trace(const Trace& trace, TraceFormat format);

// Fixed six-decimal, locale-independent rendering used by the CSV trace.
std::string format_fixed6(double value);

}  // namespace occ

#include <array>
#include <charconv>

#include "documents_internal.hpp"
#include "occ/errors.hpp"
#include "occ/harness.hpp"

namespace occ {

namespace {

TraceRecord snapshot(const Engine& engine, TimestampMs t, std::vector<AppraisalSignal> fired,
                     const ExpressionProfile& profile, ExpressionMode mode) {
  TraceRecord rec;
  rec.t_ms = t;
  rec.fired = std::move(fired);
  rec.state = engine.state().values();
  rec.frame = map_state(engine.state(), profile, mode, engine.params());
  rec.hints = regulation_hints(engine.state(), engine.history(), t, engine.params());
  return rec;
}

void run_step(Engine& engine, const ScenarioStep& step, std::vector<AppraisalSignal>& fired) {
  auto keep = [&](std::optional<AppraisalSignal> s) {
    if (s) fired.push_back(std::move(*s));
  };
  if (const auto* stimulus = std::get_if<Stimulus>(&step.payload)) {
    auto signals = engine.process(*stimulus);
    fired.insert(fired.end(), signals.begin(), signals.end());
  } else if (const auto* decl = std::get_if<ProspectDecl>(&step.payload)) {
    Prospect p;
    p.id = decl->id;
    p.type_key = decl->type_key;
    p.desirability = decl->desirability;
    p.likelihood = decl->likelihood.value_or(
        engine.history().likelihood_of(decl->type_key, engine.kb(), step.t_ms, engine.params()));
    keep(engine.register_prospect(std::move(p)));
  } else if (const auto* res = std::get_if<Resolution>(&step.payload)) {
    keep(engine.resolve_prospect(res->prospect_id, res->outcome));
  } else {
    const auto& effort = std::get<EffortEntry>(step.payload);
    engine.log_effort(effort.goal, effort.units);
  }
}

void append_fixed6(std::string& out, double value) {
  if (value == 0.0) value = 0.0;  // drops the sign of -0.0
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, 6);
  out.append(buf.data(), end);
}

}  // namespace

Trace run_scenario(const KnowledgeBase& kb, const Scenario& scenario,
                   const ExpressionProfile& profile, ExpressionMode mode,
                   const EngineParams& params) {
  Engine engine(kb, params);
  Trace trace;
  trace.records.push_back(snapshot(engine, 0, {}, profile, mode));

  std::size_t i = 0;
  const auto& steps = scenario.steps;
  while (i < steps.size()) {
    const TimestampMs t = steps[i].t_ms;
    std::vector<AppraisalSignal> fired;
    for (; i < steps.size() && steps[i].t_ms == t; ++i) {
      try {
        engine.advance_to(t);
        run_step(engine, steps[i], fired);
      } catch (const StepError&) {
        throw;
      } catch (const Error& e) {
        throw StepError(i, e.what());
      }
    }
    trace.records.push_back(snapshot(engine, t, std::move(fired), profile, mode));
  }
  return trace;
}

std::optional<TraceFormat> trace_format_from_string(std::string_view s) noexcept {
  if (s == "jsonl") return TraceFormat::Jsonl;
  if (s == "csv") return TraceFormat::Csv;
  return std::nullopt;
}

std::string format_fixed6(double value) {
  std::string out;
  append_fixed6(out, value);
  return out;
}

std::string emit_trace(const Trace& trace, TraceFormat format) {
  std::string out;
  if (format == TraceFormat::Csv) {
    out += "t_ms";
    for (Category c : kAllCategories) {
      out += ',';
      out += to_string(c);
    }
    out += ",dominant_label\n";
    for (const auto& rec : trace.records) {
      out += std::to_string(rec.t_ms);
      for (double v : rec.state) {
        out += ',';
        append_fixed6(out, v);
      }
      out += ',';
      out += rec.frame.dominant_label;
      out += '\n';
    }
    return out;
  }

  for (const auto& rec : trace.records) {
    detail::OrderedJson j;
    j["t_ms"] = rec.t_ms;
    j["fired"] = detail::OrderedJson::array();
    for (const auto& s : rec.fired) {
      j["fired"].push_back(
          {{"category", to_string(s.category)}, {"intensity", s.intensity.value()}, {"source", s.source}});
    }
    j["state"] = rec.state;
    detail::OrderedJson channels = detail::OrderedJson::object();
    for (const auto& [name, v] : rec.frame.channels) channels[name] = v;
    j["frame"] = {{"profile", to_string(rec.frame.profile)},
                  {"mode", to_string(rec.frame.mode)},
                  {"channels", std::move(channels)},
                  {"dominant_label", rec.frame.dominant_label}};
    j["hints"] = detail::OrderedJson::array();
    for (auto h : rec.hints) j["hints"].push_back(to_string(h));
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace occ

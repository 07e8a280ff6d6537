#include <set>

#include "documents_internal.hpp"
#include "occ/errors.hpp"
#include "occ/harness.hpp"

namespace occ {

namespace {

using detail::Json;
using detail::Reader;

Stimulus stimulus_from_json(const Json& node, const std::string& path) {
  Reader r(node, path);
  r.allow_only({"id", "type_key", "event", "action", "object"});
  Stimulus s;
  s.id = r.id("id");
  s.type_key = r.id("type_key");
  if (r.has("event")) {
    Reader ev(r.object("event"), path + ".event");
    ev.allow_only({"goal_impacts_self", "others", "prospect_ref"});
    EventFacet facet;
    for (const auto& item : ev.optional_array("goal_impacts_self")) {
      Reader g(item, ev.path() + ".goal_impacts_self[]");
      g.allow_only({"goal", "contribution", "realization"});
      GoalImpact impact;
      impact.goal = g.id("goal");
      impact.contribution = g.appraisal("contribution");
      impact.realization = g.has("realization") ? g.unit("realization") : 1.0;
      facet.goal_impacts_self.push_back(std::move(impact));
    }
    for (const auto& item : ev.optional_array("others")) {
      Reader o(item, ev.path() + ".others[]");
      o.allow_only({"agent"});
      facet.others.push_back(o.id("agent"));
    }
    if (ev.has("prospect_ref")) facet.prospect_ref = ev.id("prospect_ref");
    s.event = std::move(facet);
  }
  if (r.has("action")) {
    Reader a(r.object("action"), path + ".action");
    a.allow_only({"actor", "action"});
    s.action = ActionFacet{a.id("actor"), a.id("action")};
  }
  if (r.has("object")) {
    Reader o(r.object("object"), path + ".object");
    o.allow_only({"concept"});
    s.object = ObjectFacet{o.id("concept")};
  }
  s.validate();
  return s;
}

ProspectDecl prospect_from_json(const Json& node, const std::string& path) {
  Reader r(node, path);
  r.allow_only({"id", "type_key", "desirability", "likelihood_at_registration"});
  ProspectDecl p;
  p.id = r.id("id");
  p.type_key = r.id("type_key");
  p.desirability = r.appraisal("desirability");
  if (r.has("likelihood_at_registration")) p.likelihood = r.unit("likelihood_at_registration");
  return p;
}

Resolution resolution_from_json(const Json& node, const std::string& path) {
  Reader r(node, path);
  r.allow_only({"prospect_id", "outcome"});
  Resolution res;
  res.prospect_id = r.id("prospect_id");
  const std::string outcome = r.string("outcome");
  if (outcome == "confirmed") {
    res.outcome = Outcome::Confirmed;
  } else if (outcome == "disconfirmed") {
    res.outcome = Outcome::Disconfirmed;
  } else {
    r.fail("outcome", "expected \"confirmed\" or \"disconfirmed\"");
  }
  return res;
}

EffortEntry effort_from_json(const Json& node, const std::string& path) {
  Reader r(node, path);
  r.allow_only({"goal", "units"});
  EffortEntry e{r.id("goal"), r.number("units")};
  if (!(e.units > 0.0)) r.fail("units", "must be > 0");
  return e;
}

}  // namespace

std::string_view ScenarioStep::kind() const noexcept {
  switch (payload.index()) {
    case 0: return "stimulus";
    case 1: return "prospect";
    case 2: return "resolve";
    default: return "effort";
  }
}

Scenario parse_scenario(std::string_view document) {
  const Json doc = detail::parse_json(document, "scenario");
  Reader root(doc, "scenario");
  root.allow_only({"version", "steps"});
  Scenario sc;
  if (root.integer("version") != 1) throw ValidationError("scenario: unsupported version (expected 1)");
  sc.version = 1;

  std::set<std::string> declared;
  TimestampMs last = 0;
  std::size_t index = 0;
  for (const auto& item : root.array("steps")) {
    const std::string path = "scenario.steps[" + std::to_string(index) + "]";
    Reader r(item, path);
    r.allow_only({"t_ms", "kind", "payload"});
    ScenarioStep step;
    step.t_ms = r.integer("t_ms");
    if (step.t_ms < 0) r.fail("t_ms", "must be >= 0");
    if (step.t_ms < last) {
      throw ValidationError(path + ": time regression (" + std::to_string(step.t_ms) + " after " +
                            std::to_string(last) + ")");
    }
    last = step.t_ms;

    const std::string kind = r.string("kind");
    const Json& payload = r.object("payload");
    const std::string ppath = path + ".payload";
    if (kind == "stimulus") {
      Stimulus s = stimulus_from_json(payload, ppath);
      if (s.event && s.event->prospect_ref && !declared.contains(*s.event->prospect_ref)) {
        throw ValidationError(ppath + ": unknown prospect '" + *s.event->prospect_ref + "'");
      }
      step.payload = std::move(s);
    } else if (kind == "prospect") {
      ProspectDecl p = prospect_from_json(payload, ppath);
      declared.insert(p.id);
      step.payload = std::move(p);
    } else if (kind == "resolve") {
      Resolution res = resolution_from_json(payload, ppath);
      if (!declared.contains(res.prospect_id)) {
        throw ValidationError(ppath + ": unknown prospect '" + res.prospect_id + "'");
      }
      step.payload = std::move(res);
    } else if (kind == "effort") {
      step.payload = effort_from_json(payload, ppath);
    } else {
      r.fail("kind", "unknown kind '" + kind + "'");
    }
    sc.steps.push_back(std::move(step));
    ++index;
  }
  return sc;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  return parse_scenario(detail::read_file(path));
}

Stimulus parse_stimulus(std::string_view document) {
  return stimulus_from_json(detail::parse_json(document, "stimulus"), "stimulus");
}

Stimulus load_stimulus_file(const std::filesystem::path& path) {
  return parse_stimulus(detail::read_file(path));
}

EngineParams parse_params(std::string_view document) {
  const Json doc = detail::parse_json(document, "params");
  Reader r(doc, "params");
  r.allow_only({"likelihood_alpha", "likelihood_half_life_ms", "state_half_life_ms", "gain",
                "effort_beta", "effort_cap", "familiarity_kappa", "expr_threshold",
                "compounds_enabled", "reg_neg_threshold", "reg_anger_threshold",
                "reg_repeat_count", "reg_repeat_window_ms"});
  EngineParams p;
  auto num = [&](const char* key, double& field) {
    if (r.has(key)) field = r.number(key);
  };
  auto integer = [&](const char* key, auto& field) {
    if (r.has(key)) field = static_cast<std::remove_reference_t<decltype(field)>>(r.integer(key));
  };
  num("likelihood_alpha", p.likelihood_alpha);
  integer("likelihood_half_life_ms", p.likelihood_half_life_ms);
  integer("state_half_life_ms", p.state_half_life_ms);
  num("gain", p.gain);
  num("effort_beta", p.effort_beta);
  num("effort_cap", p.effort_cap);
  num("familiarity_kappa", p.familiarity_kappa);
  num("expr_threshold", p.expr_threshold);
  if (r.has("compounds_enabled")) p.compounds_enabled = r.boolean("compounds_enabled");
  num("reg_neg_threshold", p.reg_neg_threshold);
  num("reg_anger_threshold", p.reg_anger_threshold);
  integer("reg_repeat_count", p.reg_repeat_count);
  integer("reg_repeat_window_ms", p.reg_repeat_window_ms);
  try {
    p.validate();
  } catch (const RangeError& e) {
    throw ValidationError(std::string("params: ") + e.what());
  }
  return p;
}

EngineParams load_params_file(const std::filesystem::path& path) {
  return parse_params(detail::read_file(path));
}

}  // namespace occ

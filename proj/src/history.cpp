#include "occ/history.hpp"

#include <cmath>

#include "occ/errors.hpp"

namespace occ {

std::string_view to_string(Outcome o) noexcept {
  return o == Outcome::Confirmed ? "confirmed" : "disconfirmed";
}

void Stimulus::validate() const {
  if (id.empty()) throw ValidationError("stimulus: id must be non-empty");
  if (type_key.empty()) throw ValidationError("stimulus '" + id + "': type_key must be non-empty");
  if (!event && !action && !object) {
    throw ValidationError("stimulus '" + id + "': at least one of event/action/object is required");
  }
  if (event) {
    for (const auto& impact : event->goal_impacts_self) {
      if (impact.goal.empty()) throw ValidationError("stimulus '" + id + "': goal id must be non-empty");
      if (!(impact.realization >= 0.0 && impact.realization <= 1.0)) {
        throw ValidationError("stimulus '" + id + "': realization for goal '" + impact.goal +
                              "' outside [0,1]");
      }
    }
    for (const auto& agent : event->others) {
      if (agent.empty()) throw ValidationError("stimulus '" + id + "': agent id must be non-empty");
    }
    if (event->prospect_ref && event->prospect_ref->empty()) {
      throw ValidationError("stimulus '" + id + "': prospect_ref must be non-empty");
    }
  }
  if (action && (action->actor.empty() || action->action.empty())) {
    throw ValidationError("stimulus '" + id + "': action actor and action must be non-empty");
  }
  if (object && object->concept_id.empty()) {
    throw ValidationError("stimulus '" + id + "': object concept must be non-empty");
  }
}

std::optional<AppraisalSignal> anticipation_signal(const Prospect& p) {
  const double d = p.desirability.value();
  if (d == 0.0) return std::nullopt;
  return AppraisalSignal{d > 0.0 ? Category::Hope : Category::Fear,
                         Intensity::clamped(p.likelihood * std::abs(d)), p.id};
}

std::optional<AppraisalSignal> confirmation_signal(const Prospect& p, Outcome outcome,
                                                   std::string source) {
  const double d = p.desirability.value();
  if (d == 0.0) return std::nullopt;
  Category c;
  double strength;
  if (outcome == Outcome::Confirmed) {
    c = d > 0.0 ? Category::Satisfaction : Category::FearsConfirmed;
    strength = std::abs(d) * p.likelihood;
  } else {
    c = d > 0.0 ? Category::Disappointment : Category::Relief;
    strength = std::abs(d) * (1.0 - p.likelihood);
  }
  return AppraisalSignal{c, Intensity::clamped(strength), std::move(source)};
}

void History::record(const Stimulus& stimulus, TimestampMs now, const EngineParams& params,
                     bool negative) {
  if (auto last = last_timestamp(); last && now < *last) {
    throw HistoryError("timestamp regression: " + std::to_string(now) + " < " + std::to_string(*last));
  }
  occurrences_.push_back({stimulus.type_key, now, negative});

  auto it = excitation_.find(stimulus.type_key);
  if (it == excitation_.end()) {
    excitation_.emplace(stimulus.type_key, Excitation{params.likelihood_alpha, now});
  } else {
    it->second.value = excitation_at(stimulus.type_key, now, params) + params.likelihood_alpha;
    it->second.updated = now;
  }
  if (stimulus.object) ++familiarity_[stimulus.object->concept_id];
}

double History::excitation_at(std::string_view type_key, TimestampMs now,
                              const EngineParams& params) const {
  auto it = excitation_.find(type_key);
  if (it == excitation_.end()) return 0.0;
  const auto dt = static_cast<double>(now - it->second.updated);
  return it->second.value * std::exp2(-dt / static_cast<double>(params.likelihood_half_life_ms));
}

double History::likelihood_of(std::string_view type_key, const KnowledgeBase& kb,
                              TimestampMs now, const EngineParams& params) const {
  const double d = kb.default_likelihood();
  const double e = excitation_at(type_key, now, params);
  return d + (1.0 - d) * -std::expm1(-e);
}

double History::familiarity_of(std::string_view concept_id) const {
  auto it = familiarity_.find(concept_id);
  const double n = it == familiarity_.end() ? 0.0 : static_cast<double>(it->second);
  return 1.0 - 1.0 / (1.0 + n);
}

double History::effort_of(std::string_view goal) const {
  auto it = effort_.find(goal);
  return it == effort_.end() ? 0.0 : it->second;
}

void History::add_effort(std::string_view goal, double units) {
  if (goal.empty()) throw HistoryError("effort: goal id must be non-empty");
  if (!(units > 0.0) || !std::isfinite(units)) throw HistoryError("effort: units must be > 0");
  auto it = effort_.find(goal);
  if (it == effort_.end()) {
    effort_.emplace(std::string(goal), units);
  } else {
    it->second += units;
  }
}

std::optional<AppraisalSignal> History::register_prospect(Prospect prospect) {
  if (prospect.id.empty()) throw HistoryError("prospect id must be non-empty");
  if (prospect.status != ProspectStatus::Open) {
    throw HistoryError("prospect '" + prospect.id + "' must be registered open");
  }
  if (!(prospect.likelihood >= 0.0 && prospect.likelihood <= 1.0)) {
    throw HistoryError("prospect '" + prospect.id + "' likelihood outside [0,1]");
  }
  if (prospects_.contains(prospect.id)) {
    throw HistoryError("duplicate prospect id '" + prospect.id + "'");
  }
  auto signal = anticipation_signal(prospect);
  prospects_.emplace(prospect.id, std::move(prospect));
  return signal;
}

std::optional<AppraisalSignal> History::resolve_prospect(std::string_view id, Outcome outcome) {
  return resolve_prospect(id, outcome, std::string(id));
}

std::optional<AppraisalSignal> History::resolve_prospect(std::string_view id, Outcome outcome,
                                                         std::string source) {
  auto it = prospects_.find(id);
  if (it == prospects_.end()) throw HistoryError("unknown prospect '" + std::string(id) + "'");
  Prospect& p = it->second;
  if (p.status != ProspectStatus::Open) {
    throw HistoryError("prospect '" + p.id + "' already resolved");
  }
  p.status = outcome == Outcome::Confirmed ? ProspectStatus::Confirmed : ProspectStatus::Disconfirmed;
  return confirmation_signal(p, outcome, std::move(source));
}

const Prospect* History::find_prospect(std::string_view id) const {
  auto it = prospects_.find(id);
  return it == prospects_.end() ? nullptr : &it->second;
}

std::optional<TimestampMs> History::last_timestamp() const noexcept {
  if (occurrences_.empty()) return std::nullopt;
  return occurrences_.back().t;
}

double History::anticipation_of(std::string_view prospect_id) const {
  auto it = anticipation_.find(prospect_id);
  return it == anticipation_.end() ? 0.0 : it->second;
}

void History::set_anticipation(std::string_view prospect_id, double amount) {
  auto it = anticipation_.find(prospect_id);
  if (it == anticipation_.end()) {
    anticipation_.emplace(std::string(prospect_id), amount);
  } else {
    it->second = amount;
  }
}

double History::take_anticipation(std::string_view prospect_id) {
  auto it = anticipation_.find(prospect_id);
  if (it == anticipation_.end()) return 0.0;
  const double amount = it->second;
  anticipation_.erase(it);
  return amount;
}

void History::scale_anticipation(double factor) {
  for (auto& [id, amount] : anticipation_) amount *= factor;
}

}  // namespace occ

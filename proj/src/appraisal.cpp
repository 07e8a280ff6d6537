#include "occ/appraisal.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "occ/errors.hpp"

namespace occ {

namespace {

// `outcome` is the stimulus' own well-being result (joy/distress, or
// satisfaction/fears-confirmed on the prospect route).
std::optional<Category> compound_for(Category attribution, Category outcome) {
  const bool positive = valence_of(attribution) == Valence::Positive;
  if (positive != (valence_of(outcome) == Valence::Positive)) return std::nullopt;
  switch (attribution) {
    case Category::Pride: return Category::Gratification;
    case Category::Shame: return Category::Remorse;
    case Category::Admiration: return Category::Gratitude;
    case Category::Reproach: return Category::Anger;
    default: return std::nullopt;
  }
}

const Prospect& open_prospect(const History& history, const std::string& id) {
  const Prospect* p = history.find_prospect(id);
  if (p == nullptr) throw HistoryError("unknown prospect '" + id + "'");
  if (p->status != ProspectStatus::Open) throw HistoryError("prospect '" + id + "' already resolved");
  return *p;
}

}  // namespace

double self_desirability(const EventFacet& event, const KnowledgeBase& kb) {
  double sum = 0.0;
  for (const auto& impact : event.goal_impacts_self) {
    if (!kb.has_goal(impact.goal)) continue;
    sum += kb.goal_weight(impact.goal) * impact.contribution.value() * impact.realization;
  }
  return std::clamp(sum, -1.0, 1.0);
}

double effort_boost(const EventFacet& event, const History& history, const EngineParams& params) {
  std::set<std::string_view> goals;
  double effort = 0.0;
  for (const auto& impact : event.goal_impacts_self) {
    if (goals.insert(impact.goal).second) effort += history.effort_of(impact.goal);
  }
  return 1.0 + params.effort_beta * std::min(1.0, effort / params.effort_cap);
}

std::vector<Candidate> categorize(const Stimulus& stimulus, const KnowledgeBase& kb,
                                  const History& history, const EngineParams& params) {
  stimulus.validate();
  std::vector<Candidate> out;
  std::optional<Category> outcome;

  if (stimulus.event) {
    const EventFacet& ev = *stimulus.event;
    if (ev.prospect_ref) {
      const Prospect& p = open_prospect(history, *ev.prospect_ref);
      const double d = p.desirability.value();
      if (d != 0.0) {
        Candidate c{.category = d > 0.0 ? Category::Satisfaction : Category::FearsConfirmed};
        c.desirability = d;
        c.likelihood = p.likelihood;
        c.target = p.id;
        outcome = c.category;
        out.push_back(std::move(c));
      }
    } else {
      const double d = self_desirability(ev, kb);
      if (d != 0.0) {
        Candidate c{.category = d > 0.0 ? Category::Joy : Category::Distress};
        c.desirability = d;
        outcome = c.category;
        out.push_back(std::move(c));
      }
    }

    // Without a user model the fortunes of others cannot be judged at all.
    if (kb.has_user_models()) {
      for (const auto& agent : ev.others) {
        const OtherDesirability other = kb.desirability_for_other(agent, stimulus.type_key);
        if (other.status != UserModelLookup::Found) continue;
        const double d = other.value.value();
        const double liking = kb.relation_to(agent);
        if (d == 0.0 || liking == 0.0) continue;
        Category cat;
        if (liking > 0.0) {
          cat = d > 0.0 ? Category::HappyFor : Category::Pity;
        } else {
          cat = d > 0.0 ? Category::Resentment : Category::Gloating;
        }
        Candidate c{.category = cat};
        c.desirability = d;
        c.liking = liking;
        c.target = agent;
        out.push_back(std::move(c));
      }
    }
  }

  if (stimulus.action) {
    const ActionFacet& act = *stimulus.action;
    const bool self = act.by_self();
    const double p = kb.standard_of(act.action, self ? ActorRole::Self : ActorRole::Other).value();
    if (p != 0.0) {
      Category cat;
      if (self) {
        cat = p > 0.0 ? Category::Pride : Category::Shame;
      } else {
        cat = p > 0.0 ? Category::Admiration : Category::Reproach;
      }
      Candidate c{.category = cat};
      c.praiseworthiness = p;
      c.target = act.action;
      out.push_back(std::move(c));

      if (params.compounds_enabled && outcome) {
        if (auto compound = compound_for(cat, *outcome)) {
          Candidate k{.category = *compound};
          k.praiseworthiness = p;
          k.target = act.action;
          k.constituents = std::pair{cat, *outcome};
          out.push_back(std::move(k));
        }
      }
    }
  }

  if (stimulus.object) {
    const double a = kb.resolve_appealingness(stimulus.object->concept_id).value();
    if (a != 0.0) {
      Candidate c{.category = a > 0.0 ? Category::Love : Category::Hate};
      c.appealingness = a;
      c.target = stimulus.object->concept_id;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<AppraisalSignal> quantify(const std::vector<Candidate>& categorized,
                                      const Stimulus& stimulus, const KnowledgeBase& kb,
                                      const History& history, TimestampMs now,
                                      const EngineParams& params) {
  std::vector<AppraisalSignal> out;
  out.reserve(categorized.size());
  std::array<double, kCategoryCount> computed{};

  for (const auto& c : categorized) {
    if (c.constituents) continue;
    double strength = 0.0;
    switch (group_of(c.category)) {
      case Group::WellBeing: {
        const double boosted =
            std::clamp(c.desirability * effort_boost(*stimulus.event, history, params), -1.0, 1.0);
        const double likelihood = history.likelihood_of(stimulus.type_key, kb, now, params);
        strength = std::abs(boosted) * (1.0 - likelihood);
        break;
      }
      case Group::FortunesOfOthers:
        strength = std::abs(c.desirability) * std::abs(c.liking);
        break;
      case Group::Attribution:
        strength = std::abs(c.praiseworthiness);
        break;
      case Group::Attraction:
        strength = std::abs(c.appealingness) *
                   (1.0 - params.familiarity_kappa * history.familiarity_of(c.target));
        break;
      case Group::Prospect:
      case Group::Confirmation:
        strength = std::abs(c.desirability) * c.likelihood;
        break;
      case Group::Compound:
        break;
    }
    computed[index_of(c.category)] = std::clamp(strength, 0.0, 1.0);
    out.push_back({c.category, Intensity::clamped(strength), stimulus.id});
  }

  for (const auto& c : categorized) {
    if (!c.constituents) continue;
    const double strength = std::sqrt(computed[index_of(c.constituents->first)] *
                                      computed[index_of(c.constituents->second)]);
    out.push_back({c.category, Intensity::clamped(strength), stimulus.id});
  }

  std::erase_if(out, [](const AppraisalSignal& s) { return s.intensity.value() == 0.0; });
  return out;
}

std::vector<AppraisalSignal> appraise(const Stimulus& stimulus, const KnowledgeBase& kb,
                                      const History& history, TimestampMs now,
                                      const EngineParams& params) {
  return quantify(categorize(stimulus, kb, history, params), stimulus, kb, history, now, params);
}

}  // namespace occ

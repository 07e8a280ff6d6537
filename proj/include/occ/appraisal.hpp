#pragma once

// Categorization (which categories a stimulus touches) and quantification
// (how strongly), read against the knowledge base and the history.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "occ/core.hpp"
#include "occ/history.hpp"
#include "occ/knowledge.hpp"
#include "occ/stimulus.hpp"

namespace occ {

// One affected category with the raw appraisal variables that selected it.
// Only the fields relevant to the category's group are set.
struct Candidate {
  Category category = Category::Joy;
  double desirability = 0.0;  // d_self (before effort), d_other, or the prospect's d
  double liking = 0.0;
  double praiseworthiness = 0.0;
  double appealingness = 0.0;
  double likelihood = 0.0;  // confirmation route: likelihood at registration
  std::string target{};     // other agent, prospect id, action id or concept id
  // Compound categories: (attribution, well-being) constituents.
  std::optional<std::pair<Category, Category>> constituents{};

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Net self-desirability: clamp(sum weight(g) * contribution * realization).
// Goals outside the KB contribute nothing.
double self_desirability(const EventFacet& event, const KnowledgeBase& kb);

// Effort boost factor 1 + beta * min(1, effort/cap), effort summed over the
// distinct goals the event touches.
double effort_boost(const EventFacet& event, const History& history, const EngineParams& params);

// Throws ValidationError for an invalid stimulus and HistoryError when the
// event's prospect_ref is unknown or already resolved.
std::vector<Candidate> categorize(const Stimulus& stimulus, const KnowledgeBase& kb,
                                  const History& history, const EngineParams& params);

std::vector<AppraisalSignal> quantify(const std::vector<Candidate>& categorized,
                                      const Stimulus& stimulus, const KnowledgeBase& kb,
                                      const History& history, TimestampMs now,
                                      const EngineParams& params);

// categorize + quantify.
std::vector<AppraisalSignal> appraise(const Stimulus& stimulus, const KnowledgeBase& kb,
                                      const History& history, TimestampMs now,
                                      const EngineParams& params);

}  // namespace occ

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "occ/core.hpp"

namespace occ {

struct GoalImpact {
  std::string goal;
  SignedAppraisal contribution;
  double realization = 1.0;  // [0,1]

  friend bool operator==(const GoalImpact&, const GoalImpact&) = default;
};

struct EventFacet {
  std::vector<GoalImpact> goal_impacts_self;
  std::vector<std::string> others;  // agents whose fortunes the event touches
  std::optional<std::string> prospect_ref;

  friend bool operator==(const EventFacet&, const EventFacet&) = default;
};

inline constexpr std::string_view kSelfActor = "self";

struct ActionFacet {
  std::string actor;  // agent id, or "self"
  std::string action;

  bool by_self() const noexcept { return actor == kSelfActor; }
  friend bool operator==(const ActionFacet&, const ActionFacet&) = default;
};

struct ObjectFacet {
  std::string concept_id;

  friend bool operator==(const ObjectFacet&, const ObjectFacet&) = default;
};

// One occurrence; a single occurrence can carry all three facets at once.
struct Stimulus {
  std::string id;
  std::string type_key;
  std::optional<EventFacet> event;
  std::optional<ActionFacet> action;
  std::optional<ObjectFacet> object;

  // Throws ValidationError.
  void validate() const;

  friend bool operator==(const Stimulus&, const Stimulus&) = default;
};

struct AppraisalSignal {
  Category category = Category::Joy;
  Intensity intensity;
  std::string source;

  friend bool operator==(const AppraisalSignal&, const AppraisalSignal&) = default;
};

}  // namespace occ

#pragma once

// The character's world model: concept taxonomy, goal hierarchy, attitudes,
// standards, relations and (optionally) models of other agents. Immutable
// once loaded; lookups for unknown ids degrade to neutral.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "occ/core.hpp"

namespace occ {

enum class ActorRole : std::uint8_t { Self, Other };

std::string_view to_string(ActorRole r) noexcept;

struct Concept {
  std::string id;
  std::optional<std::string> isa;

  friend bool operator==(const Concept&, const Concept&) = default;
};

struct Goal {
  std::string id;
  std::optional<std::string> parent;
  double weight = 1.0;  // (0,1]

  friend bool operator==(const Goal&, const Goal&) = default;
};

// agent -> (event type key -> desirability of that event for the agent)
using UserModelTable = std::map<std::string, std::map<std::string, SignedAppraisal>>;

enum class UserModelLookup : std::uint8_t { Found, NoUserModel, NoEntry };

struct OtherDesirability {
  UserModelLookup status = UserModelLookup::NoUserModel;
  SignedAppraisal value;  // zero unless status == Found
};

class KnowledgeBase {
public:
  struct Tables {
    std::map<std::string, Concept> concepts;
    std::map<std::string, SignedAppraisal> attitudes;
    std::map<std::string, Goal> goals;
    std::map<std::pair<std::string, ActorRole>, SignedAppraisal> standards;
    std::map<std::string, double> relations;
    std::optional<UserModelTable> user_models;
    double default_likelihood = 0.1;

    friend bool operator==(const Tables&, const Tables&) = default;
  };

  // Validates every invariant; throws ValidationError with the offending id.
  explicit KnowledgeBase(Tables tables);

  const Tables& tables() const noexcept { return tables_; }
  double default_likelihood() const noexcept { return tables_.default_likelihood; }
  bool has_user_models() const noexcept { return tables_.user_models.has_value(); }
  bool has_goal(std::string_view goal) const;

  // Own attitude, else nearest ancestor's, else 0.
  SignedAppraisal resolve_appealingness(std::string_view concept_id) const;

  // Product of weights from the root down to `goal`. Throws LookupError.
  double goal_weight(std::string_view goal) const;

  double relation_to(std::string_view agent) const;
  SignedAppraisal standard_of(std::string_view action, ActorRole role) const;
  OtherDesirability desirability_for_other(std::string_view agent,
                                           std::string_view event_type) const;

  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
    return a.tables_ == b.tables_;
  }

private:
  Tables tables_;
};

// JSON document (version 1, strict keys) <-> KnowledgeBase.
KnowledgeBase load_kb(std::string_view document);
KnowledgeBase load_kb_file(const std::filesystem::path& path);
std::string serialize_kb(const KnowledgeBase& kb);

}  // namespace occ

#pragma once

// Occurrence log plus the derived quantities the appraisal reads from it:
// per-type excitation (likelihood), per-concept familiarity, per-goal effort
// and the prospect registry.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "occ/core.hpp"
#include "occ/knowledge.hpp"
#include "occ/stimulus.hpp"

namespace occ {

enum class ProspectStatus : std::uint8_t { Open, Confirmed, Disconfirmed };
enum class Outcome : std::uint8_t { Confirmed, Disconfirmed };

std::string_view to_string(Outcome o) noexcept;

struct Prospect {
  std::string id;
  std::string type_key;
  SignedAppraisal desirability;
  double likelihood = 0.0;  // at registration, [0,1]
  ProspectStatus status = ProspectStatus::Open;

  friend bool operator==(const Prospect&, const Prospect&) = default;
};

// hope (d > 0) or fear (d < 0) at L*|d|; nothing for d == 0.
std::optional<AppraisalSignal> anticipation_signal(const Prospect& p);

// satisfaction / fears-confirmed at |d|*L when confirmed,
// disappointment / relief at |d|*(1-L) when disconfirmed.
std::optional<AppraisalSignal> confirmation_signal(const Prospect& p, Outcome outcome,
                                                   std::string source);

class History {
public:
  struct Occurrence {
    std::string type_key;
    TimestampMs t = 0;
    // The occurrence produced at least one negative-valence signal.
    bool negative = false;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
  };

  // e <- e * 2^(-dt/half_life) + alpha for the stimulus type; familiarity of
  // the object concept +1. Throws HistoryError on timestamp regression.
  void record(const Stimulus& stimulus, TimestampMs now, const EngineParams& params,
              bool negative = false);

  // Excitation of `type_key` decayed to `now` (>= its last update).
  double excitation_at(std::string_view type_key, TimestampMs now,
                       const EngineParams& params) const;

  // d + (1-d)(1-exp(-e_now)); never below the KB default, always < 1.
  double likelihood_of(std::string_view type_key, const KnowledgeBase& kb, TimestampMs now,
                       const EngineParams& params) const;

  // 1 - 1/(1+n) for n sightings of the concept.
  double familiarity_of(std::string_view concept_id) const;

  double effort_of(std::string_view goal) const;
  // units must be > 0.
  void add_effort(std::string_view goal, double units);

  std::optional<AppraisalSignal> register_prospect(Prospect prospect);
  std::optional<AppraisalSignal> resolve_prospect(std::string_view id, Outcome outcome);
  // Like resolve_prospect, attributing the signal to `source`.
  std::optional<AppraisalSignal> resolve_prospect(std::string_view id, Outcome outcome,
                                                  std::string source);

  const Prospect* find_prospect(std::string_view id) const;
  const std::map<std::string, Prospect, std::less<>>& prospects() const noexcept { return prospects_; }
  const std::vector<Occurrence>& occurrences() const noexcept { return occurrences_; }
  std::optional<TimestampMs> last_timestamp() const noexcept;

  // Portion of the current hope/fear state owed to an open prospect. The
  // engine keeps it decayed in lockstep with the state so it can be
  // discharged exactly when the prospect resolves.
  double anticipation_of(std::string_view prospect_id) const;
  void set_anticipation(std::string_view prospect_id, double amount);
  double take_anticipation(std::string_view prospect_id);
  void scale_anticipation(double factor);

  friend bool operator==(const History&, const History&) = default;

private:
  struct Excitation {
    double value = 0.0;
    TimestampMs updated = 0;

    friend bool operator==(const Excitation&, const Excitation&) = default;
  };

  std::vector<Occurrence> occurrences_;
  std::map<std::string, Excitation, std::less<>> excitation_;
  std::map<std::string, std::uint64_t, std::less<>> familiarity_;
  std::map<std::string, double, std::less<>> effort_;
  std::map<std::string, Prospect, std::less<>> prospects_;
  std::map<std::string, double, std::less<>> anticipation_;
};

}  // namespace occ

#pragma once

// The character's current emotion state, how appraisal signals fold into it,
// and how it decays between stimuli.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "occ/appraisal.hpp"
#include "occ/core.hpp"
#include "occ/history.hpp"
#include "occ/knowledge.hpp"

namespace occ {

class EmotionState {
public:
  using Values = std::array<double, kCategoryCount>;

  EmotionState() = default;
  // Throws RangeError if any entry is outside [0,1].
  EmotionState(const Values& values, TimestampMs last_update);

  double operator[](Category c) const noexcept { return values_[index_of(c)]; }
  Intensity intensity(Category c) const { return Intensity(values_[index_of(c)]); }
  const Values& values() const noexcept { return values_; }
  TimestampMs last_update() const noexcept { return last_update_; }

  // Clamps into [0,1].
  void set(Category c, double value);
  void scale(double factor) noexcept;
  void set_last_update(TimestampMs t) noexcept { last_update_ = t; }

  friend bool operator==(const EmotionState&, const EmotionState&) = default;

private:
  Values values_{};
  TimestampMs last_update_ = 0;
};

// 2^(-dt / state_half_life).
double decay_factor(DurationMs dt, const EngineParams& params);

// v <- v + gain * i * (1 - v), folded in canonical category order, then
// input order.
EmotionState apply_signals(EmotionState state, std::span<const AppraisalSignal> signals,
                           const EngineParams& params);

// Throws RangeError for negative dt.
EmotionState decay(EmotionState state, DurationMs dt, const EngineParams& params);

// Owns one character's state and history and runs the pipeline on them.
// Single-owner; may be moved across threads but not shared.
class Engine {
public:
  Engine(const KnowledgeBase& kb, EngineParams params);
  Engine(const KnowledgeBase& kb, EngineParams params, EmotionState state, History history);

  // Decays the state (and pending prospect anticipation) to `now`.
  void advance_to(TimestampMs now);

  // categorize, quantify, apply, record; at the current state time.
  std::vector<AppraisalSignal> process(const Stimulus& stimulus);

  std::optional<AppraisalSignal> register_prospect(Prospect prospect);
  std::optional<AppraisalSignal> resolve_prospect(std::string_view id, Outcome outcome);
  void log_effort(std::string_view goal, double units);

  const EmotionState& state() const noexcept { return state_; }
  const History& history() const noexcept { return history_; }
  const EngineParams& params() const noexcept { return params_; }
  const KnowledgeBase& kb() const noexcept { return *kb_; }
  TimestampMs now() const noexcept { return state_.last_update(); }

  EmotionState take_state() && { return std::move(state_); }
  History take_history() && { return std::move(history_); }

private:
  // Removes a resolved prospect's outstanding hope/fear contribution.
  void discharge(const Prospect& prospect);
  void apply_anticipation(const Prospect& prospect, const AppraisalSignal& signal);

  const KnowledgeBase* kb_;
  EngineParams params_;
  EmotionState state_;
  History history_;
};

struct StepResult {
  EmotionState state;
  History history;
  std::vector<AppraisalSignal> signals;
};

// Decay to `now`, then process each stimulus in input order.
StepResult step(EmotionState state, History history, const KnowledgeBase& kb,
                std::span<const Stimulus> stimuli, TimestampMs now, const EngineParams& params);

}  // namespace occ

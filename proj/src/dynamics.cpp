#include "occ/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "occ/errors.hpp"

namespace occ {

EmotionState::EmotionState(const Values& values, TimestampMs last_update)
    : values_(values), last_update_(last_update) {
  for (std::size_t i = 0; i < kCategoryCount; ++i) {
    if (!(values_[i] >= 0.0 && values_[i] <= 1.0)) {
      throw RangeError("emotion state entry '" + std::string(to_string(kAllCategories[i])) +
                       "' outside [0,1]");
    }
  }
}

void EmotionState::set(Category c, double value) {
  if (std::isnan(value)) throw RangeError("emotion state entry is NaN");
  values_[index_of(c)] = std::clamp(value, 0.0, 1.0);
}

void EmotionState::scale(double factor) noexcept {
  for (double& v : values_) v *= factor;
}

double decay_factor(DurationMs dt, const EngineParams& params) {
  return std::exp2(-static_cast<double>(dt) / static_cast<double>(params.state_half_life_ms));
}

EmotionState apply_signals(EmotionState state, std::span<const AppraisalSignal> signals,
                           const EngineParams& params) {
  std::vector<std::size_t> order(signals.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return index_of(signals[a].category) < index_of(signals[b].category);
  });
  for (std::size_t i : order) {
    const auto& s = signals[i];
    const double v = state[s.category];
    state.set(s.category, v + params.gain * s.intensity.value() * (1.0 - v));
  }
  return state;
}

EmotionState decay(EmotionState state, DurationMs dt, const EngineParams& params) {
  if (dt < 0) throw RangeError("decay: negative dt " + std::to_string(dt));
  if (dt > 0) state.scale(decay_factor(dt, params));
  state.set_last_update(state.last_update() + dt);
  return state;
}

Engine::Engine(const KnowledgeBase& kb, EngineParams params)
    : Engine(kb, params, EmotionState{}, History{}) {}

Engine::Engine(const KnowledgeBase& kb, EngineParams params, EmotionState state, History history)
    : kb_(&kb), params_(params), state_(std::move(state)), history_(std::move(history)) {
  params_.validate();
}

void Engine::advance_to(TimestampMs now) {
  const DurationMs dt = now - state_.last_update();
  if (dt < 0) {
    throw HistoryError("time regression: " + std::to_string(now) + " < " +
                       std::to_string(state_.last_update()));
  }
  if (dt == 0) return;
  const double f = decay_factor(dt, params_);
  state_ = decay(std::move(state_), dt, params_);
  history_.scale_anticipation(f);
}

std::vector<AppraisalSignal> Engine::process(const Stimulus& stimulus) {
  const TimestampMs now = state_.last_update();
  auto signals = appraise(stimulus, *kb_, history_, now, params_);

  if (stimulus.event && stimulus.event->prospect_ref) {
    // categorize already checked the prospect is open.
    const std::string& ref = *stimulus.event->prospect_ref;
    history_.resolve_prospect(ref, Outcome::Confirmed, stimulus.id);
    discharge(*history_.find_prospect(ref));
  }
  state_ = apply_signals(std::move(state_), signals, params_);

  const bool negative = std::any_of(signals.begin(), signals.end(), [](const AppraisalSignal& s) {
    return valence_of(s.category) == Valence::Negative;
  });
  history_.record(stimulus, now, params_, negative);
  return signals;
}

std::optional<AppraisalSignal> Engine::register_prospect(Prospect prospect) {
  const Prospect copy = prospect;
  auto signal = history_.register_prospect(std::move(prospect));
  if (signal) apply_anticipation(copy, *signal);
  return signal;
}

std::optional<AppraisalSignal> Engine::resolve_prospect(std::string_view id, Outcome outcome) {
  auto signal = history_.resolve_prospect(id, outcome);
  discharge(*history_.find_prospect(id));
  if (signal) state_ = apply_signals(std::move(state_), std::span(&*signal, 1), params_);
  return signal;
}

void Engine::log_effort(std::string_view goal, double units) { history_.add_effort(goal, units); }

void Engine::apply_anticipation(const Prospect& prospect, const AppraisalSignal& signal) {
  const double before = state_[signal.category];
  state_ = apply_signals(std::move(state_), std::span(&signal, 1), params_);
  history_.set_anticipation(prospect.id, state_[signal.category] - before);
}

void Engine::discharge(const Prospect& prospect) {
  const double owed = history_.take_anticipation(prospect.id);
  if (owed == 0.0) return;
  const Category c = prospect.desirability.value() > 0.0 ? Category::Hope : Category::Fear;
  state_.set(c, state_[c] - owed);
}

StepResult step(EmotionState state, History history, const KnowledgeBase& kb,
                std::span<const Stimulus> stimuli, TimestampMs now, const EngineParams& params) {
  if (now < state.last_update()) {
    throw HistoryError("step: now " + std::to_string(now) + " precedes state time " +
                       std::to_string(state.last_update()));
  }
  Engine engine(kb, params, std::move(state), std::move(history));
  engine.advance_to(now);
  std::vector<AppraisalSignal> fired;
  for (const auto& s : stimuli) {
    auto signals = engine.process(s);
    fired.insert(fired.end(), std::make_move_iterator(signals.begin()),
                 std::make_move_iterator(signals.end()));
  }
  StepResult result;
  result.history = std::move(engine).take_history();
  result.state = std::move(engine).take_state();
  result.signals = std::move(fired);
  return result;
}

}  // namespace occ

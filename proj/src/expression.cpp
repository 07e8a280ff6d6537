#include "occ/expression.hpp"

#include <algorithm>
#include <map>

namespace occ {

namespace {

using Bucket = std::array<std::optional<std::size_t>, kCategoryCount>;

}  // namespace

std::string_view to_string(ProfileName p) noexcept {
  switch (p) {
    case ProfileName::Full22: return "full22";
    case ProfileName::OrtonyReduced: return "ortony-reduced";
    case ProfileName::Ekman6: return "ekman6";
  }
  return "?";
}

std::string_view to_string(ExpressionMode m) noexcept {
  return m == ExpressionMode::Dominant ? "dominant" : "blend";
}

std::optional<ProfileName> profile_from_string(std::string_view s) noexcept {
  if (s == "full22") return ProfileName::Full22;
  if (s == "ortony" || s == "ortony-reduced") return ProfileName::OrtonyReduced;
  if (s == "ekman6") return ProfileName::Ekman6;
  return std::nullopt;
}

std::optional<ExpressionMode> mode_from_string(std::string_view s) noexcept {
  if (s == "dominant") return ExpressionMode::Dominant;
  if (s == "blend") return ExpressionMode::Blend;
  return std::nullopt;
}

std::string_view to_string(RegulationHint h) noexcept {
  switch (h) {
    case RegulationHint::SelfRegulation: return "self-regulation";
    case RegulationHint::OtherModulation: return "other-modulation";
    case RegulationHint::ProblemSolving: return "problem-solving";
  }
  return "?";
}

ExpressionProfile::ExpressionProfile(ProfileName name, std::vector<std::string> channels,
                                     Bucket bucket)
    : name_(name), channels_(std::move(channels)), bucket_(bucket) {}

const ExpressionProfile& ExpressionProfile::get(ProfileName name) {
  using C = Category;
  static const ExpressionProfile full22 = [] {
    std::vector<std::string> channels;
    Bucket bucket;
    for (Category c : kAllCategories) {
      bucket[index_of(c)] = channels.size();
      channels.emplace_back(to_string(c));
    }
    return ExpressionProfile(ProfileName::Full22, std::move(channels), bucket);
  }();

  static const ExpressionProfile ekman6 = [] {
    std::vector<std::string> channels{"happiness", "sadness", "anger", "disgust", "fear", "surprise"};
    Bucket bucket;
    for (Category c : kAllCategories) {
      if (valence_of(c) == Valence::Positive) bucket[index_of(c)] = 0;
    }
    for (C c : {C::Distress, C::Pity, C::Disappointment, C::Remorse, C::Shame, C::FearsConfirmed}) {
      bucket[index_of(c)] = 1;
    }
    for (C c : {C::Anger, C::Reproach, C::Resentment}) bucket[index_of(c)] = 2;
    bucket[index_of(C::Hate)] = 3;
    bucket[index_of(C::Fear)] = 4;
    // surprise (5) has no source category.
    return ExpressionProfile(ProfileName::Ekman6, std::move(channels), bucket);
  }();

  static const ExpressionProfile ortony = [] {
    const std::vector<std::pair<std::string, std::vector<C>>> table = {
        {"joy", {C::Joy}},
        {"hope", {C::Hope}},
        {"relief", {C::Relief, C::Satisfaction}},
        {"pride", {C::Pride, C::Gratification}},
        {"gratitude", {C::Gratitude, C::Admiration}},
        {"love", {C::Love}},
        {"distress", {C::Distress}},
        {"fear", {C::Fear, C::FearsConfirmed}},
        {"disappointment", {C::Disappointment}},
        {"remorse", {C::Remorse, C::Shame}},
        {"anger", {C::Anger, C::Reproach}},
        {"hate", {C::Hate}},
    };
    // happy-for, gloating, pity and resentment are dropped: they need a
    // model of the other agent.
    std::vector<std::string> channels;
    Bucket bucket;
    for (const auto& [channel, sources] : table) {
      for (C c : sources) bucket[index_of(c)] = channels.size();
      channels.push_back(channel);
    }
    return ExpressionProfile(ProfileName::OrtonyReduced, std::move(channels), bucket);
  }();

  switch (name) {
    case ProfileName::Full22: return full22;
    case ProfileName::OrtonyReduced: return ortony;
    case ProfileName::Ekman6: return ekman6;
  }
  return full22;
}

std::vector<Category> ExpressionProfile::sources_of(std::size_t channel) const {
  std::vector<Category> out;
  for (Category c : kAllCategories) {
    if (bucket_[index_of(c)] == channel) out.push_back(c);
  }
  return out;
}

std::optional<std::size_t> ExpressionProfile::find_channel(std::string_view channel) const noexcept {
  for (std::size_t i = 0; i < channels_.size(); ++i) {
    if (channels_[i] == channel) return i;
  }
  return std::nullopt;
}

double ExpressionFrame::channel(std::string_view name) const {
  for (const auto& [n, v] : channels) {
    if (n == name) return v;
  }
  return 0.0;
}

std::pair<Category, Intensity> dominant_category(const EmotionState& state) {
  std::size_t best = 0;
  const auto& v = state.values();
  for (std::size_t i = 1; i < kCategoryCount; ++i) {
    if (v[i] > v[best]) best = i;
  }
  return {kAllCategories[best], Intensity(v[best])};
}

ExpressionFrame map_state(const EmotionState& state, const ExpressionProfile& profile,
                          ExpressionMode mode, const EngineParams& params) {
  std::vector<double> values(profile.channels().size(), 0.0);
  if (mode == ExpressionMode::Blend) {
    for (Category c : kAllCategories) {
      if (auto ch = profile.channel_of(c)) values[*ch] = std::max(values[*ch], state[c]);
    }
  } else {
    const auto [c, intensity] = dominant_category(state);
    if (auto ch = profile.channel_of(c)) values[*ch] = intensity.value();
  }

  ExpressionFrame frame;
  frame.profile = profile.name();
  frame.mode = mode;
  std::optional<std::size_t> label;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < params.expr_threshold) values[i] = 0.0;
    if (values[i] > 0.0 && (!label || values[i] > values[*label])) label = i;
    frame.channels.emplace_back(profile.channels()[i], values[i]);
  }
  frame.dominant_label = label ? profile.channels()[*label] : std::string(kNeutralLabel);
  return frame;
}

std::set<RegulationHint> regulation_hints(const EmotionState& state, const History& history,
                                          TimestampMs now, const EngineParams& params) {
  std::set<RegulationHint> hints;

  double negative = 0.0;
  for (Category c : kAllCategories) {
    if (valence_of(c) == Valence::Negative) negative += state[c];
  }
  if (negative >= params.reg_neg_threshold) hints.insert(RegulationHint::SelfRegulation);

  if (std::max(state[Category::Anger], state[Category::Reproach]) >= params.reg_anger_threshold) {
    hints.insert(RegulationHint::OtherModulation);
  }

  std::map<std::string_view, int> repeats;
  for (const auto& o : history.occurrences()) {
    if (!o.negative || o.t > now || now - o.t > params.reg_repeat_window_ms) continue;
    if (++repeats[o.type_key] >= params.reg_repeat_count) {
      hints.insert(RegulationHint::ProblemSolving);
      break;
    }
  }
  return hints;
}

}  // namespace occ

#pragma once

// Reduction of the 22-category state onto the channels a character can
// actually show, and behaviour-regulation hints derived from the state.

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "occ/core.hpp"
#include "occ/dynamics.hpp"
#include "occ/history.hpp"

namespace occ {

enum class ProfileName : std::uint8_t { Full22, OrtonyReduced, Ekman6 };
enum class ExpressionMode : std::uint8_t { Dominant, Blend };

std::string_view to_string(ProfileName p) noexcept;
std::string_view to_string(ExpressionMode m) noexcept;
// Accepts "full22", "ortony" / "ortony-reduced", "ekman6".
std::optional<ProfileName> profile_from_string(std::string_view s) noexcept;
std::optional<ExpressionMode> mode_from_string(std::string_view s) noexcept;

inline constexpr std::string_view kNeutralLabel = "neutral";

class ExpressionProfile {
public:
  static const ExpressionProfile& get(ProfileName name);

  ProfileName name() const noexcept { return name_; }
  const std::vector<std::string>& channels() const noexcept { return channels_; }
  // Channel index for the category, or nullopt when the profile drops it.
  std::optional<std::size_t> channel_of(Category c) const noexcept { return bucket_[index_of(c)]; }
  std::vector<Category> sources_of(std::size_t channel) const;
  std::optional<std::size_t> find_channel(std::string_view channel) const noexcept;

private:
  ExpressionProfile(ProfileName name, std::vector<std::string> channels,
                    std::array<std::optional<std::size_t>, kCategoryCount> bucket);

  ProfileName name_;
  std::vector<std::string> channels_;
  std::array<std::optional<std::size_t>, kCategoryCount> bucket_;
};

struct ExpressionFrame {
  ProfileName profile = ProfileName::Full22;
  ExpressionMode mode = ExpressionMode::Blend;
  // Parallel to ExpressionProfile::channels(), values in [0,1].
  std::vector<std::pair<std::string, double>> channels;
  std::string dominant_label{kNeutralLabel};

  double channel(std::string_view name) const;
  friend bool operator==(const ExpressionFrame&, const ExpressionFrame&) = default;
};

// Argmax over the 22 entries; ties go to the lowest canonical index.
std::pair<Category, Intensity> dominant_category(const EmotionState& state);

ExpressionFrame map_state(const EmotionState& state, const ExpressionProfile& profile,
                          ExpressionMode mode, const EngineParams& params);

enum class RegulationHint : std::uint8_t { SelfRegulation, OtherModulation, ProblemSolving };

std::string_view to_string(RegulationHint h) noexcept;

std::set<RegulationHint> regulation_hints(const EmotionState& state, const History& history,
                                          TimestampMs now, const EngineParams& params);

}  // namespace occ

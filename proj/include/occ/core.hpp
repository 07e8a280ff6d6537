#pragma once

// Shared domain types: the 22 emotion categories, bounded scalars and the
// engine parameter bundle.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace occ {

using TimestampMs = std::int64_t;
using DurationMs = std::int64_t;

inline constexpr std::size_t kCategoryCount = 22;

// Canonical order; the underlying value is the canonical index used for
// tie-breaking and for state vectors.
enum class Category : std::uint8_t {
  Joy,
  Distress,
  HappyFor,
  Pity,
  Gloating,
  Resentment,
  Hope,
  Fear,
  Satisfaction,
  FearsConfirmed,
  Relief,
  Disappointment,
  Pride,
  Shame,
  Admiration,
  Reproach,
  Gratification,
  Remorse,
  Gratitude,
  Anger,
  Love,
  Hate,
};

enum class Group : std::uint8_t {
  WellBeing,
  FortunesOfOthers,
  Prospect,
  Confirmation,
  Attribution,
  Compound,
  Attraction,
};

enum class Valence : std::uint8_t { Positive, Negative };

extern const std::array<Category, kCategoryCount> kAllCategories;

constexpr std::size_t index_of(Category c) noexcept {
  return static_cast<std::size_t>(c);
}

Valence valence_of(Category c) noexcept;
Group group_of(Category c) noexcept;

// Hyphenated lower-case names ("happy-for", "fears-confirmed").
std::string_view to_string(Category c) noexcept;
std::string_view to_string(Group g) noexcept;
std::string_view to_string(Valence v) noexcept;
std::optional<Category> category_from_string(std::string_view name) noexcept;

// Value in [0,1]. Construction outside the range (or NaN) throws RangeError.
class Intensity {
public:
  constexpr Intensity() noexcept = default;
  explicit Intensity(double value);

  // Clamps into [0,1]; NaN still throws.
  static Intensity clamped(double value);

  constexpr double value() const noexcept { return value_; }
  friend constexpr bool operator==(Intensity, Intensity) noexcept = default;

private:
  double value_ = 0.0;
};

// Value in [-1,1]; the sign is the valence, the magnitude the strength.
class SignedAppraisal {
public:
  constexpr SignedAppraisal() noexcept = default;
  explicit SignedAppraisal(double value);

  static SignedAppraisal clamped(double value);

  constexpr double value() const noexcept { return value_; }
  friend constexpr bool operator==(SignedAppraisal, SignedAppraisal) noexcept = default;

private:
  double value_ = 0.0;
};

struct EngineParams {
  double likelihood_alpha = 0.3;
  DurationMs likelihood_half_life_ms = 30000;
  DurationMs state_half_life_ms = 5000;
  double gain = 1.0;
  double effort_beta = 0.25;
  double effort_cap = 10.0;
  double familiarity_kappa = 0.5;
  double expr_threshold = 0.05;
  bool compounds_enabled = false;
  double reg_neg_threshold = 0.6;
  double reg_anger_threshold = 0.5;
  int reg_repeat_count = 3;
  DurationMs reg_repeat_window_ms = 60000;

  // Throws RangeError naming the first offending field.
  void validate() const;

  friend bool operator==(const EngineParams&, const EngineParams&) = default;
};

}  // namespace occ

#include "occ/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "occ/errors.hpp"

namespace occ {

namespace {

struct CategoryInfo {
  std::string_view name;
  Group group;
  Valence valence;
};

constexpr std::array<CategoryInfo, kCategoryCount> kTable = {{
    {"joy", Group::WellBeing, Valence::Positive},
    {"distress", Group::WellBeing, Valence::Negative},
    {"happy-for", Group::FortunesOfOthers, Valence::Positive},
    {"pity", Group::FortunesOfOthers, Valence::Negative},
    // Pleasure at another's misfortune.
    {"gloating", Group::FortunesOfOthers, Valence::Positive},
    {"resentment", Group::FortunesOfOthers, Valence::Negative},
    {"hope", Group::Prospect, Valence::Positive},
    {"fear", Group::Prospect, Valence::Negative},
    {"satisfaction", Group::Confirmation, Valence::Positive},
    {"fears-confirmed", Group::Confirmation, Valence::Negative},
    {"relief", Group::Confirmation, Valence::Positive},
    {"disappointment", Group::Confirmation, Valence::Negative},
    {"pride", Group::Attribution, Valence::Positive},
    {"shame", Group::Attribution, Valence::Negative},
    {"admiration", Group::Attribution, Valence::Positive},
    {"reproach", Group::Attribution, Valence::Negative},
    {"gratification", Group::Compound, Valence::Positive},
    {"remorse", Group::Compound, Valence::Negative},
    {"gratitude", Group::Compound, Valence::Positive},
    {"anger", Group::Compound, Valence::Negative},
    {"love", Group::Attraction, Valence::Positive},
    {"hate", Group::Attraction, Valence::Negative},
}};

constexpr std::array<Category, kCategoryCount> make_all() {
  std::array<Category, kCategoryCount> all{};
  for (std::size_t i = 0; i < kCategoryCount; ++i) all[i] = static_cast<Category>(i);
  return all;
}

void require(bool ok, const char* field, const char* range) {
  if (!ok) throw RangeError(std::string("engine param ") + field + " must be " + range);
}

}  // namespace

const std::array<Category, kCategoryCount> kAllCategories = make_all();

Valence valence_of(Category c) noexcept { return kTable[index_of(c)].valence; }

Group group_of(Category c) noexcept { return kTable[index_of(c)].group; }

std::string_view to_string(Category c) noexcept { return kTable[index_of(c)].name; }

std::string_view to_string(Group g) noexcept {
  switch (g) {
    case Group::WellBeing: return "well-being";
    case Group::FortunesOfOthers: return "fortunes-of-others";
    case Group::Prospect: return "prospect";
    case Group::Confirmation: return "confirmation";
    case Group::Attribution: return "attribution";
    case Group::Compound: return "compound";
    case Group::Attraction: return "attraction";
  }
  return "?";
}

std::string_view to_string(Valence v) noexcept {
  return v == Valence::Positive ? "positive" : "negative";
}

std::optional<Category> category_from_string(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kCategoryCount; ++i) {
    if (kTable[i].name == name) return static_cast<Category>(i);
  }
  return std::nullopt;
}

Intensity::Intensity(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw RangeError("intensity " + std::to_string(value) + " outside [0,1]");
  }
}

Intensity Intensity::clamped(double value) {
  if (std::isnan(value)) throw RangeError("intensity is NaN");
  return Intensity(std::clamp(value, 0.0, 1.0));
}

SignedAppraisal::SignedAppraisal(double value) : value_(value) {
  if (!(value >= -1.0 && value <= 1.0)) {
    throw RangeError("appraisal " + std::to_string(value) + " outside [-1,1]");
  }
}

SignedAppraisal SignedAppraisal::clamped(double value) {
  if (std::isnan(value)) throw RangeError("appraisal is NaN");
  return SignedAppraisal(std::clamp(value, -1.0, 1.0));
}

void EngineParams::validate() const {
  require(likelihood_alpha > 0.0 && std::isfinite(likelihood_alpha), "likelihood_alpha", "> 0");
  require(likelihood_half_life_ms > 0, "likelihood_half_life_ms", "> 0");
  require(state_half_life_ms > 0, "state_half_life_ms", "> 0");
  require(gain > 0.0 && gain <= 1.0, "gain", "in (0,1]");
  require(effort_beta >= 0.0 && std::isfinite(effort_beta), "effort_beta", ">= 0");
  require(effort_cap > 0.0 && std::isfinite(effort_cap), "effort_cap", "> 0");
  require(familiarity_kappa >= 0.0 && familiarity_kappa <= 1.0, "familiarity_kappa", "in [0,1]");
  require(expr_threshold >= 0.0 && expr_threshold < 1.0, "expr_threshold", "in [0,1)");
  require(std::isfinite(reg_neg_threshold), "reg_neg_threshold", "finite");
  require(std::isfinite(reg_anger_threshold), "reg_anger_threshold", "finite");
  require(reg_repeat_count >= 1, "reg_repeat_count", ">= 1");
  require(reg_repeat_window_ms > 0, "reg_repeat_window_ms", "> 0");
}

}  // namespace occ

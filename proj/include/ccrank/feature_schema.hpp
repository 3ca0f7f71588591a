#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ccrank {

/// Missing-value sentinel. Trees route it by a learned default direction, so
/// zero stays a meaningful value for counts.
inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

inline bool is_missing(double v) { return std::isnan(v); }

/// Dense per-candidate (or per-look-up) value row aligned to a schema.
struct FeatureVector {
  std::vector<double> values;

  FeatureVector() = default;
  explicit FeatureVector(std::size_t arity, double fill = 0.0) : values(arity, fill) {}
  explicit FeatureVector(std::vector<double> v) : values(std::move(v)) {}

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  std::span<const double> span() const { return values; }

  // Missing slots compare equal to each other.
  friend bool operator==(const FeatureVector& a, const FeatureVector& b);
};

enum class FeatureKind { Numeric, Boolean, OneHot };

struct FeatureDef {
  std::string name;
  FeatureKind kind = FeatureKind::Numeric;
  std::vector<std::string> categories;  // OneHot only

  std::size_t width() const { return kind == FeatureKind::OneHot ? categories.size() : 1; }
  friend bool operator==(const FeatureDef&, const FeatureDef&) = default;
};

/// Versioned, ordered feature declaration. The hash covers names, kinds and
/// categories in order; the version number is bookkeeping and is not hashed.
class FeatureSchema {
 public:
  FeatureSchema() = default;
  FeatureSchema(int version, std::vector<FeatureDef> features);

  int version() const { return version_; }
  const std::vector<FeatureDef>& features() const { return features_; }

  // Number of value slots (one-hot groups expand to one slot per category).
  std::size_t arity() const { return slot_names_.size(); }
  const std::vector<std::string>& slot_names() const { return slot_names_; }
  std::size_t first_slot(std::size_t feature) const { return first_slot_[feature]; }
  std::size_t feature_of_slot(std::size_t slot) const { return slot_feature_[slot]; }

  // Slot index for a slot name; npos when absent.
  std::size_t find_slot(std::string_view slot_name) const;

  std::uint64_t hash() const { return hash_; }
  std::string hash_hex() const;

  FeatureSchema with_version(int version) const { return FeatureSchema(version, features_); }

  nlohmann::json to_json() const;
  static FeatureSchema from_json(const nlohmann::json& doc);

  // Checks a vector against arity, boolean domain and one-hot exclusivity.
  bool conforms(const FeatureVector& v) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  int version_ = 1;
  std::vector<FeatureDef> features_;
  std::vector<std::string> slot_names_;
  std::vector<std::size_t> first_slot_;
  std::vector<std::size_t> slot_feature_;
  std::uint64_t hash_ = 0;
};

/// Rebuilds `v` (laid out by `from`) in the slot order of `to`. Every slot of
/// `to` must exist in `from`; throws Error(SchemaMismatch) otherwise.
FeatureVector project(const FeatureVector& v, const FeatureSchema& from, const FeatureSchema& to);

// Slot positions of the default 25-slot candidate schema.
namespace slot {
inline constexpr std::size_t kPrefixLength = 0;
inline constexpr std::size_t kMatchedChars = 1;
inline constexpr std::size_t kCaseSensitiveMatch = 2;
inline constexpr std::size_t kExactMatch = 3;
inline constexpr std::size_t kMatchRatio = 4;
inline constexpr std::size_t kIsKeyword = 5;
inline constexpr std::size_t kIsSameFile = 6;
inline constexpr std::size_t kIsSameModule = 7;
inline constexpr std::size_t kIsCorpusOnly = 8;
inline constexpr std::size_t kSameFileCount = 9;
inline constexpr std::size_t kGlobalCount = 10;
inline constexpr std::size_t kCandidateLength = 11;
inline constexpr std::size_t kBlockTopLevel = 12;  // one-hot, 4 slots
inline constexpr std::size_t kTokensSinceLastUse = 16;
inline constexpr std::size_t kNavigatedBefore = 17;
inline constexpr std::size_t kSelectedBefore = 18;
inline constexpr std::size_t kSelectionsInBuffer = 19;
inline constexpr std::size_t kSessionDuration = 20;
inline constexpr std::size_t kLookupOrdinal = 21;
inline constexpr std::size_t kPrevBaselineRank = 22;
inline constexpr std::size_t kTriggerManual = 23;  // one-hot, 2 slots
inline constexpr std::size_t kTriggerAuto = 24;
inline constexpr std::size_t kCandidateArity = 25;

// Look-up shared slice.
inline constexpr std::size_t kCtxSessionDuration = 0;
inline constexpr std::size_t kCtxLookupOrdinal = 1;
inline constexpr std::size_t kCtxTriggerManual = 2;
inline constexpr std::size_t kCtxTriggerAuto = 3;
inline constexpr std::size_t kContextArity = 4;
}  // namespace slot

FeatureSchema default_candidate_schema();
FeatureSchema default_context_schema();

}  // namespace ccrank

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccrank/log_schema.hpp"
#include "ccrank/ranker.hpp"

namespace ccrank {

// Binary layout, little-endian, no padding:
//   header (28 bytes)
//     char[4]  magic "RNKL"
//     u16      format version
//     u16      depth
//     u32      n_trees
//     u64      schema hash
//     f64      base_score
//   per tree
//     depth x { u16 feature, f32 threshold, u8 missing_goes_right }
//     2^depth x f32 leaf value
inline constexpr char kFlatMagic[4] = {'R', 'N', 'K', 'L'};
inline constexpr std::uint16_t kFlatFormatVersion = 1;
inline constexpr std::size_t kFlatHeaderSize = 28;
inline constexpr std::size_t kSplitRecordSize = 7;
inline constexpr std::size_t kMaxDepth = 16;
inline constexpr std::size_t kDefaultModelBudget = 2u * 1024u * 1024u;

std::size_t flat_size(std::size_t n_trees, std::size_t depth);

/// Loaded artifact in structure-of-arrays form.
class FlatModel {
 public:
  struct Header {
    std::uint16_t format_version = kFlatFormatVersion;
    std::uint16_t depth = 0;
    std::uint32_t n_trees = 0;
    std::uint64_t schema_hash = 0;
    double base_score = 0.0;
  };

  const Header& header() const { return header_; }
  std::size_t byte_size() const { return flat_size(header_.n_trees, header_.depth); }

  double predict(std::span<const double> features) const;
  std::vector<std::size_t> rank(const LookupRecord& lookup) const;
  // Slots tested by at least one split (pass-through levels excluded).
  std::vector<bool> used_slots(std::size_t arity) const;

 private:
  friend FlatModel load_flat(std::span<const std::uint8_t> bytes,
                             std::optional<std::uint64_t> expected_schema_hash);

  Header header_;
  std::vector<std::uint16_t> features_;
  std::vector<float> thresholds_;
  std::vector<std::uint8_t> missing_right_;
  std::vector<float> leaves_;
  std::size_t required_arity_ = 0;
};

/// Serializes the ensemble. All trees must share one depth (<= 16). Throws
/// Error(BudgetExceeded) when the artifact is larger than `budget_bytes`.
std::vector<std::uint8_t> export_flat(const TreeEnsemble& ensemble,
                                      std::size_t budget_bytes = kDefaultModelBudget);

/// Throws BadMagic, VersionUnsupported, Truncated, MalformedArtifact or
/// SchemaHashMismatch. Never reads outside `bytes`.
FlatModel load_flat(std::span<const std::uint8_t> bytes,
                    std::optional<std::uint64_t> expected_schema_hash = std::nullopt);

std::vector<std::uint8_t> read_bytes(const std::string& path);
void write_bytes(const std::string& path, std::span<const std::uint8_t> bytes);

struct BudgetReport {
  std::size_t size_bytes = 0;
  std::size_t limit_bytes = 0;
  bool size_ok = false;
  double median_latency_ms = 0.0;
  int repetitions = 0;
  std::size_t candidates = 0;
};

/// A deterministic 100-candidate benchmark look-up over `arity` slots.
LookupRecord benchmark_lookup(std::size_t arity, std::size_t candidates = 100,
                              std::uint64_t seed = 7);

/// Loads `bytes` and times ranking `lookup` `repetitions` times.
BudgetReport check_budget(std::span<const std::uint8_t> bytes, std::size_t limit_bytes,
                          const LookupRecord& lookup, int repetitions = 1000);

/// Header fields as "key: value" lines.
std::string describe(const FlatModel& model);

}  // namespace ccrank

#pragma once

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ccrank/candidate_provider.hpp"
#include "ccrank/feature_schema.hpp"
#include "ccrank/log_schema.hpp"

namespace ccrank {

/// Per-user interaction history. Holds candidate hashes only.
class UserHistory {
 public:
  static constexpr std::size_t kCapacity = 100;

  void record_selection(CandidateId id);
  void record_navigation(CandidateId id) { navigated_.insert(id); }

  bool navigated_to(CandidateId id) const { return navigated_.contains(id); }
  std::size_t selections_of(CandidateId id) const;
  std::size_t size() const { return recent_.size(); }

  std::int64_t session_start_ms = 0;

 private:
  std::deque<CandidateId> recent_;
  std::unordered_map<CandidateId, std::uint32_t> counts_;
  std::unordered_set<CandidateId> navigated_;
};

/// Session-level state at the moment a look-up is shown.
struct LookupState {
  std::int64_t offset_ms = 0;
  std::uint32_t ordinal = 0;
  Trigger trigger = Trigger::Auto;
  // Baseline ranks in the previous look-up; null on the first look-up.
  const std::unordered_map<CandidateId, std::uint32_t>* previous_ranks = nullptr;
};

/// Fills a feature vector laid out by `schema`, whose slots must be a subset
/// of the default candidate schema (throws Error(SchemaMismatch) otherwise).
class FeatureExtractor {
 public:
  explicit FeatureExtractor(FeatureSchema schema = default_candidate_schema());

  const FeatureSchema& schema() const { return schema_; }

  FeatureVector extract(const CaretView& caret, const CandidateStats& stats, CandidateId id,
                        const UserHistory& history, const LookupState& state) const;

 private:
  FeatureSchema schema_;
  std::vector<std::size_t> source_slot_;  // schema slot -> default slot
  bool identity_ = true;
};

/// Default-schema candidate row.
FeatureVector extract_candidate_features(const CaretView& caret, ScopeIndex::TokenId candidate,
                                         CandidateId id, const UserHistory& history,
                                         const LookupState& state);

/// Look-up shared slice laid out by default_context_schema().
FeatureVector extract_context_features(const CaretContext& ctx, const LookupState& state);

}  // namespace ccrank

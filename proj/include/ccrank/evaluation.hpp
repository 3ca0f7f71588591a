#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccrank/log_schema.hpp"
#include "ccrank/lookup_ranker.hpp"

namespace ccrank {

enum class Scope { All, Initial };

/// A look-up after re-ranking: where the ground truth landed, if listed.
struct RankedLookup {
  std::uint32_t ordinal = 0;
  std::optional<std::size_t> position;
};

/// Fraction of in-scope look-ups with the ground truth in the top k.
/// Throws Error(EmptyScope).
double recall_at_k(std::span<const RankedLookup> lookups, std::size_t k, Scope scope);

/// Ground-truth positions for every look-up of every select session.
std::vector<RankedLookup> rank_sessions(const std::vector<CompletionSession>& sessions,
                                        const LookupRanker& ranker);

struct OfflineReport {
  std::string ranker;
  double r1_all = 0, r5_all = 0, r1_init = 0, r5_init = 0;
  std::size_t lookups_all = 0, lookups_init = 0;

  nlohmann::json to_json() const;
};

OfflineReport offline_report(const std::vector<CompletionSession>& sessions, const LookupRanker& ranker);
std::string format_offline(const std::vector<OfflineReport>& reports);

struct UserSplit {
  std::vector<CompletionSession> train;
  std::vector<CompletionSession> holdout;
};

/// Partitions users (not sessions) by a seeded shuffle. Throws
/// Error(TooFewUsers) with fewer than two users.
UserSplit split_by_user(const std::vector<CompletionSession>& sessions, double train_ratio,
                        std::uint64_t seed);

enum class OnlineMetric { ExplicitSelect, TypedSelect, TypingActions, PrefixLength, ManualStart };
inline constexpr OnlineMetric kOnlineMetrics[] = {
    OnlineMetric::ExplicitSelect, OnlineMetric::TypedSelect, OnlineMetric::TypingActions,
    OnlineMetric::PrefixLength, OnlineMetric::ManualStart};

std::string_view to_string(OnlineMetric metric);

inline constexpr double kTypingCutoffPercentile = 0.99;

/// Throws Error(NoQualifyingSessions) when the metric has no denominator.
double online_metric(OnlineMetric metric, const std::vector<CompletionSession>& sessions,
                     double typing_percentile = kTypingCutoffPercentile);

/// Nearest-rank quantile of a non-empty sample.
double nearest_rank_quantile(std::vector<double> values, double p);

struct BootstrapConfig {
  int resamples = 1000;
  std::uint64_t seed = 0;
  double alpha = 0.01;

  void validate() const;  // Error(ConfigError)
  nlohmann::json to_json() const;
  static BootstrapConfig from_json(const nlohmann::json& doc);
};

/// Two-sided, add-one smoothed p-value of m_B - m_A under user-level
/// resampling within each arm. Throws Error(TooFewUsers).
double bootstrap_pvalue(const std::vector<CompletionSession>& a,
                        const std::vector<CompletionSession>& b, OnlineMetric metric,
                        const BootstrapConfig& config);

struct AbRow {
  OnlineMetric metric = OnlineMetric::ExplicitSelect;
  double a = 0, b = 0, p = 1;
  bool significant = false;
};

struct AbReport {
  std::vector<AbRow> rows;
  BootstrapConfig config;
  std::string name_a = "A", name_b = "B";

  const AbRow& row(OnlineMetric metric) const;
  nlohmann::json to_json() const;  // {metric: {a, b, p}}
  std::string to_text() const;
};

AbReport ab_report(const std::vector<CompletionSession>& a, const std::vector<CompletionSession>& b,
                   const BootstrapConfig& config);

}  // namespace ccrank

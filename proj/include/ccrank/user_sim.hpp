#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccrank/candidate_provider.hpp"
#include "ccrank/feature_extraction.hpp"
#include "ccrank/log_schema.hpp"
#include "ccrank/lookup_ranker.hpp"

namespace ccrank {

/// Simulated user behaviour. All constants are simulator knobs.
struct SimConfig {
  std::size_t visible_window = 5;
  std::vector<double> select_prob_by_rank = {0.8, 0.55, 0.35, 0.2, 0.1};
  double manual_start_prob = 0.05;
  double explicit_cancel_prob = 0.01;  // per step
  double navigate_prob = 0.2;          // after a session, jump to the token's definition
  std::size_t min_token_length = 3;
  std::size_t users = 60;
  std::size_t sessions_per_user = 100;
  std::uint64_t master_seed = 42;
  std::int64_t action_ms = 120;
  std::size_t candidate_cap = 64;
  std::string start_date = "2021-11-01";
  int days = 14;

  void validate() const;  // Error(ConfigError)
  nlohmann::json to_json() const;
  static SimConfig from_json(const nlohmann::json& doc);
};

enum class ActionKind { SelectAt, TypeChar, ExplicitCancel };

struct PolicyAction {
  ActionKind kind = ActionKind::TypeChar;
  std::size_t rank = 0;  // 1-based, SelectAt only

  friend bool operator==(const PolicyAction&, const PolicyAction&) = default;
};

/// Uniform draws consumed by one policy step.
struct PolicyDraws {
  double select = 1.0;
  double cancel = 1.0;
};

/// `visible_rank` is the 1-based display position of the ground truth, or
/// nullopt when it is not listed.
PolicyAction policy_step(const SimConfig& config, std::optional<std::size_t> visible_rank,
                         const PolicyDraws& draws);

struct SimResult {
  std::vector<CompletionSession> sessions;
  LogHeader header;
};

/// Replays the corpus as completion sessions. Session triggering depends on
/// (corpus, config) only; the ranker shapes what is displayed and therefore
/// outcomes. Throws Error(EmptyCorpus).
SimResult replay_corpus(const ScopeIndex& index, const LookupRanker& ranker, const SimConfig& config,
                        const FeatureExtractor& extractor = FeatureExtractor{}, int workers = 1);

/// YYYY-MM-DD plus `days`.
std::string add_days(const std::string& date, int days);

}  // namespace ccrank

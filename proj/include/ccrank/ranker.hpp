#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccrank/feature_schema.hpp"
#include "ccrank/log_schema.hpp"

namespace ccrank {

struct TrainParams {
  int iterations = 200;
  int depth = 6;
  double learning_rate = 0.1;
  double l2_leaf_reg = 3.0;
  int max_bins = 255;
  double row_subsample = 1.0;
  std::uint64_t seed = 0;

  // Throws Error(InvalidParams) when an invariant is violated.
  void validate() const;

  nlohmann::json to_json() const;
  // Missing keys keep their defaults; the result is validated.
  static TrainParams from_json(const nlohmann::json& doc);

  friend bool operator==(const TrainParams&, const TrainParams&) = default;
};

/// Symmetric tree: every node of a level applies the same test, so a row's
/// leaf is the bit string of the per-level outcomes (level k sets bit k).
struct ObliviousTree {
  struct Split {
    std::uint16_t feature = 0;
    float threshold = 0.0f;
    bool missing_goes_right = false;
    friend bool operator==(const Split&, const Split&) = default;
  };

  std::vector<Split> splits;
  std::vector<float> leaf_values;  // 2^depth

  std::size_t depth() const { return splits.size(); }
  std::size_t leaf_index(std::span<const double> features) const;

  friend bool operator==(const ObliviousTree&, const ObliviousTree&) = default;
};

// Canonical split test; shared by training, the ensemble and the flat model.
inline bool goes_right(double value, float threshold, bool missing_goes_right) {
  if (is_missing(value)) return missing_goes_right;
  return static_cast<float>(value) > threshold;
}

struct TreeEnsemble {
  std::string schema_hash;
  double base_score = 0.0;
  std::vector<ObliviousTree> trees;
  TrainParams params;

  // Largest feature index referenced by any split, plus one.
  std::size_t required_arity() const;
  // Slots referenced by at least one split.
  std::vector<bool> used_slots(std::size_t arity) const;

  nlohmann::json to_json() const;
  static TreeEnsemble from_json(const nlohmann::json& doc);

  friend bool operator==(const TreeEnsemble&, const TreeEnsemble&) = default;
};

struct QueryGroup {
  std::vector<FeatureVector> rows;
  std::vector<int> targets;

  std::size_t positive() const;  // index of the single positive row
};

/// Throws Error(InvalidGroup) unless exactly one target is 1 and the rest 0.
void validate_group(const QueryGroup& group);

QueryGroup to_query_group(const LabeledGroup& labeled);
std::vector<QueryGroup> to_query_groups(const std::vector<CompletionSession>& sessions);

/// Numerically stable softmax.
std::vector<double> softmax_probs(std::span<const double> scores);

/// -log p(positive) under the softmax over the group's scores.
double group_loss(const QueryGroup& group, std::span<const double> scores);

struct GradHess {
  std::vector<double> gradients;
  std::vector<double> hessians;
};

inline constexpr double kMinHessian = 1e-16;

/// g_i = p_i - t_i, h_i = max(p_i (1 - p_i), 1e-16).
GradHess group_grad_hess(const QueryGroup& group, std::span<const double> scores);

struct FitOptions {
  int workers = 1;
  // Called after each iteration with the mean training loss.
  std::function<void(int iteration, double loss)> on_iteration;
};

/// Listwise gradient boosting of oblivious trees under the softmax loss.
/// Output depends only on (groups, params), never on options.workers.
TreeEnsemble fit(const std::vector<QueryGroup>& groups, const TrainParams& params,
                 const FitOptions& options = {}, const std::string& schema_hash = {});

/// Canonical prediction: float comparisons, leaves accumulated in double in
/// tree order. Throws Error(SchemaMismatch) on a short vector.
double predict(const TreeEnsemble& ensemble, std::span<const double> features);

/// Candidate indices sorted by descending score, ties by ascending baseline
/// rank.
std::vector<std::size_t> rank_by_scores(std::span<const double> scores,
                                        std::span<const std::uint32_t> baseline_ranks);
std::vector<std::size_t> rank_lookup(const TreeEnsemble& ensemble, const LookupRecord& lookup);

/// Row scorer used by evaluation and feature selection.
using RowScorer = std::function<double(std::span<const double>)>;

/// Mean group loss under a scorer.
double dataset_loss(const std::vector<QueryGroup>& groups, const RowScorer& scorer);

}  // namespace ccrank

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ccrank/log_schema.hpp"
#include "ccrank/model_artifact.hpp"
#include "ccrank/ranker.hpp"

namespace ccrank {

/// Orders the candidates of a logged look-up for display. Candidates arrive in
/// baseline order; the result is a permutation of their indices.
class LookupRanker {
 public:
  virtual ~LookupRanker() = default;
  virtual std::string name() const = 0;
  virtual std::vector<std::size_t> order(const LookupRecord& lookup) const = 0;
};

/// The rule-based baseline: keeps the logged order.
class HeuristicRanker final : public LookupRanker {
 public:
  std::string name() const override { return "heuristic"; }
  std::vector<std::size_t> order(const LookupRecord& lookup) const override;
};

class FlatModelRanker final : public LookupRanker {
 public:
  FlatModelRanker(FlatModel model, std::string name) : model_(std::move(model)), name_(std::move(name)) {}
  std::string name() const override { return name_; }
  std::vector<std::size_t> order(const LookupRecord& lookup) const override { return model_.rank(lookup); }
  const FlatModel& model() const { return model_; }

 private:
  FlatModel model_;
  std::string name_;
};

class EnsembleRanker final : public LookupRanker {
 public:
  explicit EnsembleRanker(TreeEnsemble ensemble) : ensemble_(std::move(ensemble)) {}
  std::string name() const override { return "ensemble"; }
  std::vector<std::size_t> order(const LookupRecord& lookup) const override {
    return rank_lookup(ensemble_, lookup);
  }

 private:
  TreeEnsemble ensemble_;
};

inline constexpr const char* kHeuristicName = "heuristic";

/// "heuristic" or a path to a .rnkl artifact.
std::unique_ptr<LookupRanker> load_ranker(const std::string& name_or_path,
                                          std::optional<std::uint64_t> expected_schema_hash);

}  // namespace ccrank

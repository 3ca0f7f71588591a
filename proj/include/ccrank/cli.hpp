#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ccrank/error.hpp"
#include "ccrank/evaluation.hpp"
#include "ccrank/feature_schema.hpp"
#include "ccrank/ranker.hpp"
#include "ccrank/user_sim.hpp"

namespace ccrank {

struct Budgets {
  std::size_t model_bytes = kDefaultModelBudget;
  double latency_ms = 30.0;
};

/// Everything a subcommand needs, read from one JSON file. Relative paths
/// resolve against the file's directory.
struct RunConfig {
  std::filesystem::path corpus_path;
  std::vector<std::string> extensions = {".py"};
  std::optional<std::filesystem::path> keywords_path;
  std::optional<std::filesystem::path> feature_schema_path;
  SimConfig sim;
  std::uint64_t abtest_seed = 43;  // population for A/B arms, distinct from the training log
  TrainParams train;
  double train_ratio = 0.8;
  std::uint64_t split_seed = 42;
  BootstrapConfig bootstrap;
  int importance_repeats = 3;
  std::filesystem::path output_dir = "out";
  Budgets budgets;
  int workers = 1;

  // Throws Error(ConfigError).
  static RunConfig load(const std::filesystem::path& path);
  static RunConfig from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir);

  // Sets every seed from one value; the A/B population gets its own stream.
  void apply_seed(std::uint64_t seed);
  FeatureSchema schema() const;
};

/// 0 ok, 2 configuration, 3 data, 4 budget.
int exit_code(ErrorCode code);

/// Runs one subcommand; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccrank

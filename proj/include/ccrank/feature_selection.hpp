#pragma once

#include <cstdint>
#include <vector>

#include "ccrank/feature_schema.hpp"
#include "ccrank/ranker.hpp"

namespace ccrank {

/// Fraction of groups whose positive row is ranked first (ties resolved by
/// row order, i.e. baseline order).
double recall_at_1(const std::vector<QueryGroup>& groups, const RowScorer& scorer);

/// Mean drop in R@1 when column `slot` is shuffled across all rows of the
/// dataset. Each repeat uses its own stream derived from `seed`.
double permutation_importance(const RowScorer& scorer, const std::vector<QueryGroup>& dataset,
                              std::size_t slot, int repeats, std::uint64_t seed);

std::vector<double> permutation_importances(const RowScorer& scorer,
                                            const std::vector<QueryGroup>& dataset, int repeats,
                                            std::uint64_t seed);

inline constexpr double kDefaultPruneEpsilon = 0.001;

/// Keeps a feature when at least one of its slots is used by a split and has
/// importance above epsilon. Order is preserved and the version incremented.
/// Throws Error(EmptySchema) if nothing survives, Error(ArityMismatch) if
/// the inputs are not aligned to the schema.
FeatureSchema prune_schema(const FeatureSchema& schema, const std::vector<double>& importances,
                           const std::vector<bool>& used_in_split, double epsilon);

}  // namespace ccrank

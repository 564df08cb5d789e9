#ifndef COREF_PARTITION_HPP
#define COREF_PARTITION_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "coref/core.hpp"

namespace coref {

inline constexpr int kDefaultEnumerationCap = 12;

// Controls for large coreference sets. When pruning is off, a set larger
// than `cap` raises SetTooLarge. When on, partial configurations whose
// running unnormalized score drops below delta times the best completed
// score are abandoned (sound for the inference models here because every
// subsequent factor is <= 1).
struct PruneConfig {
  bool enabled = false;
  double delta = 1e-9;
  int cap = kDefaultEnumerationCap;
};

// All partitions of `ids` such that no cell contains an excluded pair.
// Restricted-growth enumeration: ids are added in list order, cells are
// ordered by their earliest member, output order is lexicographic in the
// growth string (matching the canonical configuration order used
// throughout).
std::vector<Configuration> enumerate_configurations(const std::vector<std::string>& ids,
                                                    const std::set<IdPair>& exclusions,
                                                    int cap = kDefaultEnumerationCap);

std::vector<Configuration> enumerate_configurations(const CoreferenceSet& set,
                                                    int cap = kDefaultEnumerationCap);

// Number of valid configurations, without materializing them.
long long count_configurations(const std::vector<std::string>& ids,
                               const std::set<IdPair>& exclusions);

long long count_configurations(const CoreferenceSet& set);

// Result of eliminating low-probability configurations: the survivors keep
// their probabilities; the eliminated mass is reported as a single uniform
// per-configuration value remainder_mass / remainder_count.
struct SmoothedDistribution {
  std::vector<Configuration> configs;
  std::vector<double> probs;
  double remainder_mass = 0.0;
  long long remainder_count = 0;

  double per_eliminated_probability() const {
    return remainder_count > 0 ? remainder_mass / static_cast<double>(remainder_count) : 0.0;
  }
};

// Removes entries with probability < epsilon. Throws EverythingPruned when
// nothing survives.
SmoothedDistribution smooth(const Distribution& dist, double epsilon);

// Shared driver for the distribution models. Walks the restricted-growth
// tree over the set's templates in order; at each step `factor` returns the
// model's multiplicative contribution of placing template index t into
// cells[choice], or into a new cell when choice == -1. Members of each cell
// are listed in join order. A cell is only offered when it admits t under
// the exclusions. Scores are accumulated in log domain; a zero factor makes
// the whole branch score zero. With pruning enabled, branches falling below
// delta times the best completed score are dropped from the output instead
// of materialized.
struct PartitionWalk {
  std::vector<Configuration> configs;      // canonical enumeration order
  std::vector<double> log_scores;          // -inf for zero-score entries
};

using PlacementFactor =
    std::function<double(int t, const std::vector<std::vector<int>>& cells, int choice)>;

PartitionWalk walk_scored_partitions(const CoreferenceSet& set, const PlacementFactor& factor,
                                     const PruneConfig& prune = {});

}  // namespace coref

#endif  // COREF_PARTITION_HPP

#include "coref/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace coref {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct WalkState {
  const CoreferenceSet* set = nullptr;
  const std::vector<unsigned char>* excl = nullptr;
  std::size_t n = 0;
  const PlacementFactor* factor = nullptr;
  PruneConfig prune;
  double best_log = kNegInf;

  std::vector<std::vector<int>> cells;
  PartitionWalk out;

  bool admits(const std::vector<int>& cell, int t) const {
    for (int m : cell)
      if ((*excl)[static_cast<std::size_t>(m) * n + static_cast<std::size_t>(t)]) return false;
    return true;
  }

  Configuration materialize() const {
    std::vector<std::vector<std::string>> named(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int m : cells[c]) named[c].push_back(set->templates[static_cast<std::size_t>(m)].id);
    return Configuration{std::move(named)};
  }

  void recurse(std::size_t t, double log_score) {
    if (t == n) {
      out.configs.push_back(materialize());
      out.log_scores.push_back(log_score);
      best_log = std::max(best_log, log_score);
      return;
    }
    auto descend = [&](int choice) {
      double f = 1.0;
      if (factor) f = (*factor)(static_cast<int>(t), cells, choice);
      double next = log_score;
      if (f <= 0.0) {
        if (prune.enabled) return;  // a zero branch can never be kept
        next = kNegInf;
      } else {
        next += std::log(f);
      }
      if (prune.enabled && next < std::log(prune.delta) + best_log) return;
      if (choice < 0) {
        cells.emplace_back(1, static_cast<int>(t));
        recurse(t + 1, next);
        cells.pop_back();
      } else {
        cells[static_cast<std::size_t>(choice)].push_back(static_cast<int>(t));
        recurse(t + 1, next);
        cells[static_cast<std::size_t>(choice)].pop_back();
      }
    };
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (admits(cells[c], static_cast<int>(t))) descend(static_cast<int>(c));
    descend(-1);
  }
};

long long count_recurse(std::size_t t, std::size_t n, const std::vector<unsigned char>& excl,
                        std::vector<std::vector<int>>& cells) {
  if (t == n) return 1;
  long long total = 0;
  for (auto& cell : cells) {
    bool ok = true;
    for (int m : cell)
      if (excl[static_cast<std::size_t>(m) * n + t]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cell.push_back(static_cast<int>(t));
    total += count_recurse(t + 1, n, excl, cells);
    cell.pop_back();
  }
  cells.emplace_back(1, static_cast<int>(t));
  total += count_recurse(t + 1, n, excl, cells);
  cells.pop_back();
  return total;
}

CoreferenceSet pseudo_set(const std::vector<std::string>& ids, const std::set<IdPair>& exclusions) {
  // Wrap bare ids as offset-ordered templates so the walker can be reused.
  std::vector<Template> templates;
  templates.reserve(ids.size());
  long long offset = 0;
  for (const std::string& id : ids) {
    Template t;
    t.id = id;
    t.char_offset = offset++;
    templates.push_back(std::move(t));
  }
  std::vector<IdPair> excl(exclusions.begin(), exclusions.end());
  return make_coreference_set("ids", std::move(templates), excl);
}

}  // namespace

PartitionWalk walk_scored_partitions(const CoreferenceSet& set, const PlacementFactor& factor,
                                     const PruneConfig& prune) {
  const std::size_t n = set.templates.size();
  if (!prune.enabled && static_cast<int>(n) > prune.cap)
    throw SetTooLarge("set " + set.id + ": " + std::to_string(n) +
                      " templates exceeds the enumeration cap " + std::to_string(prune.cap) +
                      " with pruning disabled");
  const std::vector<unsigned char> excl = exclusion_matrix(set);
  WalkState state;
  state.set = &set;
  state.excl = &excl;
  state.n = n;
  state.factor = factor ? &factor : nullptr;
  state.prune = prune;
  state.recurse(0, 0.0);
  return std::move(state.out);
}

std::vector<Configuration> enumerate_configurations(const CoreferenceSet& set, int cap) {
  PruneConfig prune;
  prune.cap = cap;
  return walk_scored_partitions(set, nullptr, prune).configs;
}

std::vector<Configuration> enumerate_configurations(const std::vector<std::string>& ids,
                                                    const std::set<IdPair>& exclusions, int cap) {
  if (ids.empty()) return {Configuration{}};
  if (ids.size() == 1) return {Configuration{{{ids.front()}}}};
  return enumerate_configurations(pseudo_set(ids, exclusions), cap);
}

long long count_configurations(const CoreferenceSet& set) {
  const std::vector<unsigned char> excl = exclusion_matrix(set);
  std::vector<std::vector<int>> cells;
  return count_recurse(0, set.templates.size(), excl, cells);
}

long long count_configurations(const std::vector<std::string>& ids,
                               const std::set<IdPair>& exclusions) {
  if (ids.size() < 2) return 1;
  return count_configurations(pseudo_set(ids, exclusions));
}

SmoothedDistribution smooth(const Distribution& dist, double epsilon) {
  SmoothedDistribution out;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist.probs[i] < epsilon) {
      out.remainder_mass += dist.probs[i];
      ++out.remainder_count;
    } else {
      out.configs.push_back(dist.configs[i]);
      out.probs.push_back(dist.probs[i]);
    }
  }
  if (out.configs.empty())
    throw EverythingPruned("smoothing epsilon " + std::to_string(epsilon) +
                           " eliminates every configuration; lower it");
  return out;
}

}  // namespace coref

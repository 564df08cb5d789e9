#ifndef COREF_FEATURES_HPP
#define COREF_FEATURES_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coref/core.hpp"

namespace coref {

enum class AntecedentStatus { Preferred, Possible, Absent, NotApplicable };
enum class DistanceClass { VeryClose, Close, MidDistance, FarAway, VeryFarAway };

// Character-distance boundaries between the five classes.
struct DistanceConfig {
  std::array<double, 4> thresholds{120.0, 400.0, 1000.0, 2500.0};

  DistanceClass classify(double distance) const;
  void validate() const;  // thresholds positive, strictly increasing
};

// The pairwise context x: one value per characteristic, always populated.
struct Characteristics {
  ContentRelation content_relation = ContentRelation::OtherwiseConsistent;
  bool shared_ge2 = false;
  bool name_match = false;
  RefForm ref_form = RefForm::Neither;
  AntecedentStatus antecedent_status = AntecedentStatus::NotApplicable;
  DistanceClass distance_class = DistanceClass::VeryClose;

  auto operator<=>(const Characteristics&) const = default;
};

enum class Characteristic : int {
  ContentRelationKind = 0,
  SharedGe2,
  NameMatch,
  RefFormKind,
  AntecedentStatusKind,
  DistanceClassKind,
};

inline constexpr int kCharacteristicCount = 6;

int value_count(Characteristic c);                       // 4, 2, 2, 3, 4, 5
int value_of(const Characteristics& x, Characteristic c);
std::string characteristic_name(Characteristic c);
std::string value_name(Characteristic c, int value);
std::optional<Characteristic> characteristic_from_name(std::string_view name);
std::optional<int> value_from_name(Characteristic c, std::string_view name);

// Binary indicator pairing one characteristic value with an outcome:
// fires iff x's field equals `value` and the outcome equals `outcome`.
struct Feature {
  Characteristic characteristic = Characteristic::ContentRelationKind;
  int value = 0;
  int outcome = 0;  // y in {0, 1}

  bool fires(const Characteristics& x, int y) const {
    return y == outcome && value_of(x, characteristic) == value;
  }
  bool matches_context(const Characteristics& x) const {
    return value_of(x, characteristic) == value;
  }
  std::string to_string() const;
  auto operator<=>(const Feature&) const = default;
};

// The full candidate pool: every legal (characteristic, value) pair crossed
// with both outcomes; 40 features in a fixed order (the selection
// tie-break order).
std::vector<Feature> candidate_features();

// Builds the context x for an ordered pair: content fields from
// content_relation, reference form from T's mention, antecedent status by
// chasing preferred links transitively, distance by bucketing the character
// gap. Throws OrderViolation unless S precedes T in the set's order.
Characteristics extract_characteristics(const CoreferenceSet& set, const Template& s,
                                        const Template& t, const DistanceConfig& dcfg);

enum class DatasetMode { AllPairs, MergeDecisions };

std::string dataset_mode_name(DatasetMode mode);
std::optional<DatasetMode> dataset_mode_from_name(std::string_view name);

struct DatasetInstance {
  Characteristics x;
  int y = 0;
  long long count = 1;
};

// Empirical distribution p_d over (x, y), grouped with counts.
struct EmpiricalDataset {
  std::vector<DatasetInstance> instances;

  long long total() const;
  void add(const Characteristics& x, int y, long long count = 1);
  bool empty() const { return instances.empty(); }
};

// all_pairs: one instance per compatible ordered pair, outcome 1 iff the
// pair shares a cell in the key. merge_decisions: exactly the pairs the
// merger queries while deriving the key (see gold_decision_pairs).
EmpiricalDataset build_dataset(const std::vector<CoreferenceSet>& corpus, const KeyMap& keys,
                               DatasetMode mode, const DistanceConfig& dcfg);

}  // namespace coref

#endif  // COREF_FEATURES_HPP

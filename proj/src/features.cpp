#include "coref/features.hpp"

#include <algorithm>
#include <map>

#include "coref/merging.hpp"

namespace coref {

DistanceClass DistanceConfig::classify(double distance) const {
  if (distance < thresholds[0]) return DistanceClass::VeryClose;
  if (distance < thresholds[1]) return DistanceClass::Close;
  if (distance < thresholds[2]) return DistanceClass::MidDistance;
  if (distance < thresholds[3]) return DistanceClass::FarAway;
  return DistanceClass::VeryFarAway;
}

void DistanceConfig::validate() const {
  double prev = 0.0;
  for (double t : thresholds) {
    if (!(t > prev))
      throw ValidationError("distance thresholds must be positive and strictly increasing");
    prev = t;
  }
}

int value_count(Characteristic c) {
  switch (c) {
    case Characteristic::ContentRelationKind: return 4;
    case Characteristic::SharedGe2: return 2;
    case Characteristic::NameMatch: return 2;
    case Characteristic::RefFormKind: return 3;
    case Characteristic::AntecedentStatusKind: return 4;
    case Characteristic::DistanceClassKind: return 5;
  }
  return 0;
}

int value_of(const Characteristics& x, Characteristic c) {
  switch (c) {
    case Characteristic::ContentRelationKind: return static_cast<int>(x.content_relation);
    case Characteristic::SharedGe2: return x.shared_ge2 ? 1 : 0;
    case Characteristic::NameMatch: return x.name_match ? 1 : 0;
    case Characteristic::RefFormKind: return static_cast<int>(x.ref_form);
    case Characteristic::AntecedentStatusKind: return static_cast<int>(x.antecedent_status);
    case Characteristic::DistanceClassKind: return static_cast<int>(x.distance_class);
  }
  return 0;
}

std::string characteristic_name(Characteristic c) {
  switch (c) {
    case Characteristic::ContentRelationKind: return "content_relation";
    case Characteristic::SharedGe2: return "shared_ge2";
    case Characteristic::NameMatch: return "name_match";
    case Characteristic::RefFormKind: return "ref_form";
    case Characteristic::AntecedentStatusKind: return "antecedent_status";
    case Characteristic::DistanceClassKind: return "distance_class";
  }
  return "?";
}

namespace {

const char* const kContentNames[4] = {"identical", "s_properly_subsumed_by_t",
                                      "s_properly_subsumes_t", "otherwise_consistent"};
const char* const kBoolNames[2] = {"false", "true"};
const char* const kRefFormNames[3] = {"indefinite", "definite", "neither"};
const char* const kAntecedentNames[4] = {"preferred", "possible", "absent", "not_applicable"};
const char* const kDistanceNames[5] = {"very_close", "close", "mid_distance", "far_away",
                                       "very_far_away"};

const char* const* value_names(Characteristic c) {
  switch (c) {
    case Characteristic::ContentRelationKind: return kContentNames;
    case Characteristic::SharedGe2: return kBoolNames;
    case Characteristic::NameMatch: return kBoolNames;
    case Characteristic::RefFormKind: return kRefFormNames;
    case Characteristic::AntecedentStatusKind: return kAntecedentNames;
    case Characteristic::DistanceClassKind: return kDistanceNames;
  }
  return kBoolNames;
}

}  // namespace

std::string value_name(Characteristic c, int value) {
  if (value < 0 || value >= value_count(c))
    throw ValidationError("value index " + std::to_string(value) + " out of range for " +
                          characteristic_name(c));
  return value_names(c)[value];
}

std::optional<Characteristic> characteristic_from_name(std::string_view name) {
  for (int i = 0; i < kCharacteristicCount; ++i) {
    auto c = static_cast<Characteristic>(i);
    if (characteristic_name(c) == name) return c;
  }
  return std::nullopt;
}

std::optional<int> value_from_name(Characteristic c, std::string_view name) {
  for (int v = 0; v < value_count(c); ++v)
    if (value_names(c)[v] == name) return v;
  return std::nullopt;
}

std::string Feature::to_string() const {
  return characteristic_name(characteristic) + "=" + value_name(characteristic, value) +
         ", y=" + std::to_string(outcome);
}

std::vector<Feature> candidate_features() {
  std::vector<Feature> pool;
  for (int c = 0; c < kCharacteristicCount; ++c) {
    auto characteristic = static_cast<Characteristic>(c);
    for (int v = 0; v < value_count(characteristic); ++v)
      for (int y = 0; y < 2; ++y) pool.push_back(Feature{characteristic, v, y});
  }
  return pool;
}

Characteristics extract_characteristics(const CoreferenceSet& set, const Template& s,
                                        const Template& t, const DistanceConfig& dcfg) {
  const int si = set.index_of(s.id);
  const int ti = set.index_of(t.id);
  if (si >= ti)
    throw OrderViolation("set " + set.id + ": template " + t.id + " does not follow " + s.id);

  Characteristics x;
  const ContentComparison cmp = content_relation(s, t);
  x.content_relation = cmp.relation;
  x.shared_ge2 = cmp.shared_ge2;
  x.name_match = cmp.name_match;
  x.ref_form = t.mention.form;

  if (t.mention.form != RefForm::Definite) {
    x.antecedent_status = AntecedentStatus::NotApplicable;
  } else {
    // Preferred reference is transitive: chase the chain of preferred links.
    bool preferred = false;
    const Template* cur = &t;
    std::set<std::string> visited;  // guard against malformed cycles
    while (cur->mention.preferred_antecedent && visited.insert(cur->id).second) {
      const Template& ante = set.by_id(*cur->mention.preferred_antecedent);
      if (ante.id == s.id) {
        preferred = true;
        break;
      }
      cur = &ante;
    }
    if (preferred) {
      x.antecedent_status = AntecedentStatus::Preferred;
    } else {
      const auto& possible = t.mention.possible_antecedents;
      x.antecedent_status =
          std::find(possible.begin(), possible.end(), s.id) != possible.end()
              ? AntecedentStatus::Possible
              : AntecedentStatus::Absent;
    }
  }

  x.distance_class = dcfg.classify(static_cast<double>(t.char_offset - s.char_offset));
  return x;
}

std::string dataset_mode_name(DatasetMode mode) {
  return mode == DatasetMode::AllPairs ? "all_pairs" : "merge_decisions";
}

std::optional<DatasetMode> dataset_mode_from_name(std::string_view name) {
  if (name == "all_pairs") return DatasetMode::AllPairs;
  if (name == "merge_decisions") return DatasetMode::MergeDecisions;
  return std::nullopt;
}

long long EmpiricalDataset::total() const {
  long long n = 0;
  for (const DatasetInstance& inst : instances) n += inst.count;
  return n;
}

void EmpiricalDataset::add(const Characteristics& x, int y, long long count) {
  for (DatasetInstance& inst : instances) {
    if (inst.y == y && inst.x == x) {
      inst.count += count;
      return;
    }
  }
  instances.push_back(DatasetInstance{x, y, count});
}

EmpiricalDataset build_dataset(const std::vector<CoreferenceSet>& corpus, const KeyMap& keys,
                               DatasetMode mode, const DistanceConfig& dcfg) {
  EmpiricalDataset data;
  for (const CoreferenceSet& set : corpus) {
    auto key_it = keys.find(set.id);
    if (key_it == keys.end()) throw MissingKey("no key for set " + set.id);
    const Configuration& gold = key_it->second;
    try {
      validate_configuration(set, gold);
    } catch (const InvalidConfiguration& e) {
      throw InvalidConfiguration(std::string("invalid key: ") + e.what());
    }

    if (mode == DatasetMode::AllPairs) {
      for (std::size_t i = 0; i < set.templates.size(); ++i) {
        for (std::size_t j = i + 1; j < set.templates.size(); ++j) {
          const Template& s = set.templates[i];
          const Template& t = set.templates[j];
          if (!compatible(s, t, set.exclusions)) continue;
          const int y = gold.same_cell(s.id, t.id) ? 1 : 0;
          data.add(extract_characteristics(set, s, t, dcfg), y);
        }
      }
    } else {
      for (const auto& [s_id, t_id, outcome] : gold_decision_pairs(set, gold)) {
        const Template& s = set.by_id(s_id);
        const Template& t = set.by_id(t_id);
        data.add(extract_characteristics(set, s, t, dcfg), outcome);
      }
    }
  }
  return data;
}

}  // namespace coref

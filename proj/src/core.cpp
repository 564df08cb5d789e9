#include "coref/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace coref {

namespace {

bool multi_worded(const std::string& value) {
  std::istringstream in(value);
  std::string tok;
  int words = 0;
  while (in >> tok && words < 2) ++words;
  return words >= 2;
}

}  // namespace

std::string canonical_slot_text(const std::string& raw) {
  std::size_t b = raw.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = raw.find_last_not_of(" \t\r\n");
  std::string out = raw.substr(b, e - b + 1);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

IdPair make_id_pair(const std::string& a, const std::string& b) {
  return a <= b ? IdPair{a, b} : IdPair{b, a};
}

int CoreferenceSet::index_of(const std::string& template_id) const {
  for (std::size_t i = 0; i < templates.size(); ++i)
    if (templates[i].id == template_id) return static_cast<int>(i);
  throw ValidationError("set " + id + ": unknown template id '" + template_id + "'");
}

const Template& CoreferenceSet::by_id(const std::string& template_id) const {
  return templates[static_cast<std::size_t>(index_of(template_id))];
}

bool CoreferenceSet::excluded(const std::string& a, const std::string& b) const {
  return exclusions.count(make_id_pair(a, b)) > 0;
}

std::vector<std::string> CoreferenceSet::template_ids() const {
  std::vector<std::string> ids;
  ids.reserve(templates.size());
  for (const Template& t : templates) ids.push_back(t.id);
  return ids;
}

CoreferenceSet make_coreference_set(std::string set_id, std::vector<Template> templates,
                                    const std::vector<IdPair>& explicit_exclusions) {
  if (templates.size() < 2)
    throw ValidationError("set " + set_id + ": needs at least 2 templates");

  for (Template& t : templates) {
    if (t.char_offset < 0)
      throw ValidationError("set " + set_id + ": template " + t.id + " has negative char_offset");
    std::map<std::string, std::string> canon;
    for (const auto& [name, value] : t.slots) {
      std::string n = canonical_slot_text(name);
      std::string v = canonical_slot_text(value);
      if (n.empty() || v.empty())
        throw ValidationError("set " + set_id + ": template " + t.id + " has an empty slot name or value");
      canon[std::move(n)] = std::move(v);
    }
    t.slots = std::move(canon);
  }

  std::stable_sort(templates.begin(), templates.end(),
                   [](const Template& a, const Template& b) { return a.char_offset < b.char_offset; });

  CoreferenceSet set;
  set.id = std::move(set_id);
  set.templates = std::move(templates);

  std::set<std::string> seen;
  for (const Template& t : set.templates)
    if (!seen.insert(t.id).second)
      throw ValidationError("set " + set.id + ": duplicate template id '" + t.id + "'");

  for (const IdPair& p : explicit_exclusions) {
    if (!seen.count(p.first) || !seen.count(p.second))
      throw ValidationError("set " + set.id + ": exclusion references unknown id");
    if (p.first == p.second)
      throw ValidationError("set " + set.id + ": exclusion pairs a template with itself");
    set.exclusions.insert(make_id_pair(p.first, p.second));
  }

  // Slot conflicts are a priori incompatibilities; fold them into the list.
  for (std::size_t i = 0; i < set.templates.size(); ++i)
    for (std::size_t j = i + 1; j < set.templates.size(); ++j)
      if (!compatible(set.templates[i], set.templates[j], {}))
        set.exclusions.insert(make_id_pair(set.templates[i].id, set.templates[j].id));

  for (std::size_t i = 0; i < set.templates.size(); ++i) {
    const MentionInfo& m = set.templates[i].mention;
    auto check_antecedent = [&](const std::string& aid) {
      if (!seen.count(aid))
        throw ValidationError("set " + set.id + ": template " + set.templates[i].id +
                              " names unknown antecedent '" + aid + "'");
      if (static_cast<std::size_t>(set.index_of(aid)) >= i)
        throw ValidationError("set " + set.id + ": antecedent '" + aid +
                              "' does not precede template " + set.templates[i].id);
    };
    if (m.preferred_antecedent) check_antecedent(*m.preferred_antecedent);
    for (const std::string& aid : m.possible_antecedents) {
      check_antecedent(aid);
      if (m.preferred_antecedent && *m.preferred_antecedent == aid)
        throw ValidationError("set " + set.id + ": preferred antecedent repeated in possible list");
    }
  }
  return set;
}

std::vector<unsigned char> exclusion_matrix(const CoreferenceSet& set) {
  const std::size_t n = set.templates.size();
  std::vector<unsigned char> m(n * n, 0);
  for (const IdPair& p : set.exclusions) {
    const std::size_t i = static_cast<std::size_t>(set.index_of(p.first));
    const std::size_t j = static_cast<std::size_t>(set.index_of(p.second));
    m[i * n + j] = m[j * n + i] = 1;
  }
  return m;
}

bool Configuration::same_cell(const std::string& a, const std::string& b) const {
  for (const auto& cell : cells) {
    bool has_a = false, has_b = false;
    for (const std::string& m : cell) {
      has_a = has_a || m == a;
      has_b = has_b || m == b;
    }
    if (has_a || has_b) return has_a && has_b;
  }
  return false;
}

std::string Configuration::to_string() const {
  std::string out;
  for (const auto& cell : cells) {
    if (!out.empty()) out += ' ';
    out += '(';
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (i) out += ' ';
      out += cell[i];
    }
    out += ')';
  }
  return out;
}

Configuration canonical_configuration(const CoreferenceSet& set,
                                      std::vector<std::vector<std::string>> cells) {
  for (auto& cell : cells) {
    std::sort(cell.begin(), cell.end(), [&](const std::string& a, const std::string& b) {
      return set.index_of(a) < set.index_of(b);
    });
  }
  std::sort(cells.begin(), cells.end(), [&](const auto& a, const auto& b) {
    return set.index_of(a.front()) < set.index_of(b.front());
  });
  return Configuration{std::move(cells)};
}

void validate_configuration(const CoreferenceSet& set, const Configuration& config) {
  std::set<std::string> covered;
  for (const auto& cell : config.cells) {
    if (cell.empty())
      throw InvalidConfiguration("set " + set.id + ": configuration has an empty cell");
    for (const std::string& m : cell) {
      set.index_of(m);  // throws on unknown id
      if (!covered.insert(m).second)
        throw InvalidConfiguration("set " + set.id + ": template '" + m +
                                   "' appears in more than one cell");
    }
    for (std::size_t i = 0; i < cell.size(); ++i)
      for (std::size_t j = i + 1; j < cell.size(); ++j)
        if (set.excluded(cell[i], cell[j]))
          throw InvalidConfiguration("set " + set.id + ": cell co-references excluded pair (" +
                                     cell[i] + ", " + cell[j] + ")");
  }
  if (covered.size() != set.templates.size())
    throw InvalidConfiguration("set " + set.id + ": configuration does not cover every template");
}

double Distribution::prob_of(const Configuration& config) const {
  for (std::size_t i = 0; i < configs.size(); ++i)
    if (configs[i] == config) return probs[i];
  return 0.0;
}

void validate_distribution(const CoreferenceSet& set, const Distribution& dist) {
  if (dist.configs.size() != dist.probs.size())
    throw ValidationError("set " + set.id + ": distribution configs/probs size mismatch");
  double total = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    validate_configuration(set, dist.configs[i]);
    const double p = dist.probs[i];
    if (!(p >= 0.0 && p <= 1.0 + 1e-12))
      throw ValidationError("set " + set.id + ": probability out of [0,1]");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw ValidationError("set " + set.id + ": distribution sums to " + std::to_string(total));
}

void PairTable::set(const std::string& a, const std::string& b, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ValidationError("pairwise probability for (" + a + ", " + b + ") outside [0,1]");
  probs_[make_id_pair(a, b)] = p;
}

bool PairTable::has(const std::string& a, const std::string& b) const {
  return probs_.count(make_id_pair(a, b)) > 0;
}

double PairTable::get(const std::string& a, const std::string& b) const {
  auto it = probs_.find(make_id_pair(a, b));
  if (it == probs_.end())
    throw ValidationError("no pairwise probability for (" + a + ", " + b + ")");
  return it->second;
}

bool compatible(const Template& s, const Template& t, const std::set<IdPair>& exclusions) {
  if (exclusions.count(make_id_pair(s.id, t.id))) return false;
  // Both maps are sorted by slot name; walk them in lockstep.
  auto is = s.slots.begin();
  auto it = t.slots.begin();
  while (is != s.slots.end() && it != t.slots.end()) {
    if (is->first < it->first) {
      ++is;
    } else if (it->first < is->first) {
      ++it;
    } else {
      if (is->second != it->second) return false;
      ++is;
      ++it;
    }
  }
  return true;
}

ContentComparison content_relation(const Template& s, const Template& t) {
  ContentComparison out;
  int shared_equal = 0;
  bool s_has_extra = false, t_has_extra = false;
  auto is = s.slots.begin();
  auto it = t.slots.begin();
  while (is != s.slots.end() || it != t.slots.end()) {
    if (it == t.slots.end() || (is != s.slots.end() && is->first < it->first)) {
      s_has_extra = true;
      ++is;
    } else if (is == s.slots.end() || it->first < is->first) {
      t_has_extra = true;
      ++it;
    } else {
      if (is->second == it->second) ++shared_equal;
      ++is;
      ++it;
    }
  }

  if (!s_has_extra && !t_has_extra)
    out.relation = ContentRelation::Identical;
  else if (s_has_extra && !t_has_extra)
    out.relation = ContentRelation::SProperlySubsumedByT;  // T strictly more general
  else if (t_has_extra && !s_has_extra)
    out.relation = ContentRelation::SProperlySubsumesT;
  else
    out.relation = ContentRelation::OtherwiseConsistent;

  out.shared_ge2 = shared_equal >= 2;

  auto sn = s.slots.find("NAME");
  auto tn = t.slots.find("NAME");
  out.name_match = sn != s.slots.end() && tn != t.slots.end() && sn->second == tn->second &&
                   multi_worded(sn->second);
  return out;
}

Template unify(const Template& s, const Template& t) {
  if (!compatible(s, t, {}))
    throw IncompatibleTemplates("cannot unify " + s.id + " and " + t.id +
                                ": conflicting slot values");
  const Template& earlier = s.char_offset <= t.char_offset ? s : t;
  const Template& later = s.char_offset <= t.char_offset ? t : s;
  Template out = later;
  out.id = later.id + "&" + earlier.id;
  for (const auto& [name, value] : earlier.slots) out.slots.emplace(name, value);
  return out;
}

}  // namespace coref

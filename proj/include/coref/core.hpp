#ifndef COREF_CORE_HPP
#define COREF_CORE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coref/errors.hpp"

namespace coref {

enum class RefForm { Indefinite, Definite, Neither };

// Antecedent recommendations attached to the mention a template came from.
struct MentionInfo {
  RefForm form = RefForm::Neither;
  std::optional<std::string> preferred_antecedent;
  std::vector<std::string> possible_antecedents;
};

// A slot-value record for one entity mention. Absent slot key = nil slot.
// Slot names and values are stored canonically (trimmed, upper-cased).
struct Template {
  std::string id;
  std::map<std::string, std::string> slots;
  long long char_offset = 0;
  MentionInfo mention;
};

// Unordered id pair, stored with first <= second.
using IdPair = std::pair<std::string, std::string>;

IdPair make_id_pair(const std::string& a, const std::string& b);

// An ordered group of templates with pairwise exclusion constraints.
// Construct through make_coreference_set, which sorts templates by
// char_offset (input order breaks ties), canonicalizes slot text, augments
// the exclusion list with every slot-conflicting pair, and validates the
// invariants (>= 2 templates, unique ids, antecedents exist and precede).
struct CoreferenceSet {
  std::string id;
  std::vector<Template> templates;
  std::set<IdPair> exclusions;

  int index_of(const std::string& template_id) const;
  const Template& by_id(const std::string& template_id) const;
  bool excluded(const std::string& a, const std::string& b) const;
  std::vector<std::string> template_ids() const;
};

CoreferenceSet make_coreference_set(std::string set_id,
                                    std::vector<Template> templates,
                                    const std::vector<IdPair>& explicit_exclusions = {});

// n x n matrix (row-major) of exclusion flags in template order.
std::vector<unsigned char> exclusion_matrix(const CoreferenceSet& set);

// One partition of a set's templates into cells of mutually coreferring
// templates. Canonical form: members in template order within each cell,
// cells ordered by their earliest member.
struct Configuration {
  std::vector<std::vector<std::string>> cells;

  bool operator==(const Configuration&) const = default;
  bool operator<(const Configuration& other) const { return cells < other.cells; }
  bool same_cell(const std::string& a, const std::string& b) const;
  std::string to_string() const;  // "(A B D) (C)"
};

Configuration canonical_configuration(const CoreferenceSet& set,
                                      std::vector<std::vector<std::string>> cells);

// Throws InvalidConfiguration unless cells partition the id set exactly and
// no cell contains an excluded pair.
void validate_configuration(const CoreferenceSet& set, const Configuration& config);

// Probability over the valid configurations of one coreference set,
// kept in canonical enumeration order.
struct Distribution {
  std::vector<Configuration> configs;
  std::vector<double> probs;

  std::size_t size() const { return configs.size(); }
  double prob_of(const Configuration& config) const;  // 0 when absent
};

void validate_distribution(const CoreferenceSet& set, const Distribution& dist);

// Gold configurations keyed by coreference-set id.
using KeyMap = std::map<std::string, Configuration>;

// Pairwise coreference probabilities for one set, keyed by unordered id pair.
// Excluded pairs are never stored; they implicitly carry probability 0.
class PairTable {
 public:
  void set(const std::string& a, const std::string& b, double p);
  bool has(const std::string& a, const std::string& b) const;
  double get(const std::string& a, const std::string& b) const;  // throws ValidationError if absent
  const std::map<IdPair, double>& entries() const { return probs_; }

 private:
  std::map<IdPair, double> probs_;
};

// Slot-level relations -------------------------------------------------------

// False iff the pair is excluded or some slot name is non-nil in both
// templates with unequal values. Symmetric.
bool compatible(const Template& s, const Template& t, const std::set<IdPair>& exclusions);

enum class ContentRelation {
  Identical,
  SProperlySubsumedByT,  // T's non-nil slots are a strict subset of S's
  SProperlySubsumesT,
  OtherwiseConsistent,
};

struct ContentComparison {
  ContentRelation relation = ContentRelation::OtherwiseConsistent;
  bool shared_ge2 = false;  // >= 2 slot names non-nil in both with equal values
  bool name_match = false;  // NAME slots equal and multi-worded
};

// Only meaningful for slot-compatible pairs.
ContentComparison content_relation(const Template& s, const Template& t);

// Union of non-nil slots; char_offset and mention from the later template;
// id is "<later>&<earlier>". Throws IncompatibleTemplates on slot conflict.
Template unify(const Template& s, const Template& t);

std::string canonical_slot_text(const std::string& raw);

}  // namespace coref

#endif  // COREF_CORE_HPP

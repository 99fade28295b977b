#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "morphy/inflection.hpp"
#include "morphy/lexicon.hpp"
#include "morphy/paradigm.hpp"
#include "morphy/tagset.hpp"

namespace morphy {

struct Analysis {
  std::string lemma;
  Tag tag;
  /// Lemmas of the compound parts, head last; a single element for simple words.
  std::vector<std::string> segments;
  /// Written pieces for compounds, each including its linking element;
  /// concatenated they give the analyzed form. Empty for simple words.
  std::vector<std::string> pieces;
  /// Linking element after each non-head piece ("" when none).
  std::vector<std::string> links;

  friend bool operator==(const Analysis&, const Analysis&) = default;
};

struct RootCandidate {
  std::string root;
  std::string suffix;
  std::string note;  // "", "umlaut", "ss", "umlaut+ss"
};

/// Remainders after stripping every inventory suffix matching the form's
/// tail, plus umlaut-reversed and ss->ß variants. Deduplicated, order-stable.
std::vector<RootCandidate> candidate_roots(std::string_view form, const ParadigmSet& classes);

/// Reverses the rightmost umlaut (äu -> au, ä -> a, ö -> o, ü -> u).
std::string reverse_umlaut(std::string_view s);

/// Morphological analyzer over a fixed lexicon. Build once, query from any
/// number of threads.
class Analyzer {
 public:
  Analyzer(const Lexicon& lex, const ParadigmSet& classes);

  /// Case-exact readings; falls back to compound segmentation when none.
  /// Sorted by tag string, then lemma; duplicate-free.
  std::vector<Analysis> analyze(std::string_view form) const;

  /// analyze() united with the readings of the form with a lowercased
  /// initial, for sentence-initial tokens.
  std::vector<Analysis> analyze_initial(std::string_view form) const;

  /// Readings of simple (non-compound) words only.
  std::vector<Analysis> analyze_simple(std::string_view form) const;

  std::vector<Analysis> segment_compound(std::string_view form) const;

  /// Full-form lookup: the alternative strategy, same readings as
  /// analyze_simple by construction of the expansion.
  std::vector<Analysis> lookup_full_form(std::string_view form, const FullFormLexicon& ffl) const;

  /// Compound routine over an arbitrary simple-word lookup.
  using SimpleLookup = std::function<std::vector<Analysis>(std::string_view)>;
  std::vector<Analysis> segment_compound_with(std::string_view form, const SimpleLookup& simple) const;

  const Lexicon& lexicon() const { return lex_; }
  const ParadigmSet& classes() const { return classes_; }
  const std::vector<FormTable>& tables() const { return tables_; }

 private:
  struct PrefixLemma {
    std::string written;  // as it appears at the start of a piece, lowercase initial
    std::string lemma;
  };
  struct Cover {
    std::vector<std::string> lemmas;
    std::vector<std::string> pieces;
    std::vector<std::string> links;
  };

  // Enumerates covers of text[pos..] by prefix lemmas. `restore` is the
  // consonant the next lemma may drop; `end_restore`, when set, requires the
  // last piece to end in that doubled consonant with no linking element.
  void covers(const std::string& text, std::size_t pos, const std::string& restore,
              const std::string& end_restore, Cover& cur, std::vector<Cover>& out) const;

  const Lexicon& lex_;
  const ParadigmSet& classes_;
  std::vector<FormTable> tables_;  // parallel to lex_.entries()
  std::unordered_map<std::string, std::vector<std::size_t>> stem_index_;
  std::unordered_map<std::string, std::vector<std::size_t>> root_index_;
  std::vector<PrefixLemma> prefix_lemmas_;
};

void sort_unique(std::vector<Analysis>& readings);

/// Suffix statistics for guessing the tags of unknown forms.
struct SuffixModel {
  static constexpr const char* kCapKey = "<CAP>";

  TagSetKind kind = TagSetKind::small;
  std::size_t max_len = 5;
  std::map<std::string, std::map<std::string, double>> counts;  // suffix -> tag -> count
  std::map<std::string, double> totals;

  bool empty() const { return counts.empty(); }
};

/// (form, tag) pairs, one count each; punctuation is skipped, and with `open_class_only`
/// so is every closed-class token (unknown words are open-class in practice).
SuffixModel train_suffix_model(const std::vector<std::pair<std::string, Tag>>& data, TagSetKind kind,
                               std::size_t max_len = 5, bool open_class_only = true);

SuffixModel train_suffix_model(const FullFormLexicon& ffl, TagSetKind kind, std::size_t max_len = 5,
                               bool open_class_only = true);

/// Tag distribution for an unknown form, sorted by descending probability
/// then tag string; sums to 1.
std::vector<std::pair<Tag, double>> guess_unknown(std::string_view form, const SuffixModel& model,
                                                  double support = 3.0);

/// Open-class members of a tag set (the fallback support of guess_unknown).
const std::vector<Tag>& open_class_tags(TagSetKind kind);

}  // namespace morphy

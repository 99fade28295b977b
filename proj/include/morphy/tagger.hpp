#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "morphy/analysis.hpp"
#include "morphy/corpus.hpp"
#include "morphy/tagset.hpp"

namespace morphy {

class TaggerError : public std::runtime_error {
 public:
  explicit TaggerError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Pseudo-tag padding every training and decoding sentence.
inline constexpr std::string_view kBoundaryTag = "<B>";

/// Interpolation weights for unigram, bigram and trigram relative
/// frequencies, and the probability floor.
struct Smoothing {
  std::array<double, 3> lambdas{0.1, 0.3, 0.6};
  double epsilon = 1e-6;
};

/// Index into the active tag set's canonical member list; the boundary
/// pseudo-tag takes the last id. Id order is canonical string order.
using TagId = std::uint16_t;
using TagSeq = std::u16string;

/// Trained statistics. Immutable once training or loading is done; safe to
/// share between threads.
class Models {
 public:
  explicit Models(TagSetKind kind = TagSetKind::small, std::size_t n_max = 3, Smoothing smoothing = {});

  TagSetKind kind() const { return kind_; }
  std::size_t n_max() const { return n_max_; }
  const Smoothing& smoothing() const { return smoothing_; }

  /// |tag set| + 1 (the boundary is a possible outcome).
  std::size_t outcome_count() const { return names_->size(); }
  TagId boundary() const { return static_cast<TagId>(names_->size() - 1); }
  std::optional<TagId> id_of(std::string_view canonical) const;
  const std::string& name(TagId id) const { return (*names_)[id]; }
  Tag tag(TagId id) const;

  void add_ngram(const TagSeq& seq, double count);
  void add_lexical(const std::string& form, TagId tag, double count);

  double ngram_count(const TagSeq& seq) const;
  /// Sum of counts of all n-grams extending `history` by one tag; the empty
  /// history gives the unigram total.
  double history_total(const TagSeq& history) const;
  /// Smoothed P(c | a, b); sums to 1 over all outcomes for any history.
  double context_prob(TagId a, TagId b, TagId c) const;

  /// Training counts of (form, tag), sorted by tag id; null when unseen.
  const std::vector<std::pair<TagId, double>>* lexical_counts(const std::string& form) const;
  /// count(form, tag) / count(tag), floored at epsilon.
  double lexical_prob(const std::string& form, TagId tag) const;

  bool lexical_ablated() const { return lexical_ablated_; }
  void set_lexical_ablated(bool on) { lexical_ablated_ = on; }

  SuffixModel suffix;

  const std::unordered_map<TagSeq, double>& ngrams() const { return ngrams_; }
  const std::unordered_map<std::string, std::vector<std::pair<TagId, double>>>& lexicon() const { return lex_; }

 private:
  TagSetKind kind_;
  std::size_t n_max_;
  Smoothing smoothing_;
  bool lexical_ablated_ = false;
  std::shared_ptr<const std::vector<std::string>> names_;
  std::unordered_map<TagSeq, double> ngrams_;
  std::unordered_map<TagSeq, double> histories_;
  std::unordered_map<std::string, std::vector<std::pair<TagId, double>>> lex_;
};

/// Counts tag n-grams up to `n_max` over sentences padded as <B> <B> ... <B>,
/// lexical pairs, and the suffix model. Large corpora are mapped down for the
/// small set. Throws TaggerError on an empty corpus or an invalid tag.
Models train_models(const AnnotatedCorpus& corpus, TagSetKind kind, std::size_t n_max = 3, Smoothing s = {});

/// Same statistics with uniform lexical probability over each candidate set.
Models ablate_lexical(const Models& m);

std::string save_models(const Models& m);
/// Throws TaggerError with the offending line.
Models load_models(std::string_view text);
Models load_models_file(const std::string& path);
void save_models_file(const Models& m, const std::string& path);

struct Candidate {
  TagId id;
  double lexical;  // P(surface | tag)
};

struct TaggedSentence {
  std::vector<std::pair<std::string, Tag>> tokens;
  bool boundaries_assumed = true;

  friend bool operator==(const TaggedSentence&, const TaggedSentence&) = default;
};

/// Whitespace tokenization with leading and trailing punctuation split off.
/// `keep` may protect whole tokens (abbreviations such as "z.B.").
std::vector<std::string> tokenize(std::string_view text,
                                  const std::function<bool(std::string_view)>& keep = nullptr);

/// Groups tokens into sentences, ending each at sentence-final punctuation.
std::vector<std::vector<std::string>> split_sentences(const std::vector<std::string>& tokens);

/// Decoders over one analyzer and one model set. Candidate tag sets are
/// memoized per surface; all member functions are thread-safe.
class Tagger {
 public:
  Tagger(const Analyzer& analyzer, const Models& models);

  const Models& models() const { return models_; }
  const Analyzer& analyzer() const { return analyzer_; }

  /// Analyses mapped to the model's tag set; forms without analyses fall
  /// back to training-corpus tags, then digits to ZAN, then the suffix
  /// guesser. Sorted by tag id, duplicate-free, never empty.
  std::vector<Candidate> candidates(const std::string& surface, bool sentence_initial) const;

  std::vector<std::vector<Candidate>> lattice(const std::vector<std::string>& sentence) const;

  /// Exact trigram decoding; ties go to the lexicographically smallest tag
  /// sequence. Throws TaggerError on an empty sentence.
  TaggedSentence church(const std::vector<std::string>& sentence) const;
  /// Exhaustive search under the same objective and tie-break; throws when
  /// the number of sequences exceeds `bound`.
  TaggedSentence bruteforce(const std::vector<std::string>& sentence, std::size_t bound = 1000000) const;
  TaggedSentence varcontext(const std::vector<std::string>& sentence, bool assume_boundaries = true) const;

  /// Log objective of a tag sequence over the sentence's candidates, summed
  /// right to left exactly as the decoders do.
  double score(const std::vector<std::string>& sentence, const std::vector<TagId>& tags) const;

 private:
  std::vector<TagId> analysis_tags(const std::string& surface, bool initial) const;
  TaggedSentence make_result(const std::vector<std::string>& sentence, const std::vector<TagId>& ids,
                             bool boundaries) const;

  const Analyzer& analyzer_;
  const Models& models_;
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::string, std::vector<TagId>> memo_;
};

// One-shot wrappers.
std::vector<std::pair<Tag, double>> candidate_tags(std::string_view surface, const Analyzer& analyzer,
                                                   const Models& models, bool sentence_initial = false);
TaggedSentence tag_church(const std::vector<std::string>& sentence, const Models& models, const Analyzer& analyzer);
TaggedSentence tag_bruteforce(const std::vector<std::string>& sentence, const Models& models,
                              const Analyzer& analyzer);
TaggedSentence tag_varcontext(const std::vector<std::string>& sentence, const Models& models,
                              const Analyzer& analyzer, bool assume_boundaries = true);

}  // namespace morphy

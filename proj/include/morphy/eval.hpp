#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morphy/corpus.hpp"
#include "morphy/tagger.hpp"

namespace morphy {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Algorithm { church, varcontext };
std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view s);

struct EvalReport {
  TagSetKind kind = TagSetKind::small;
  std::size_t token_count = 0;
  std::size_t correct_count = 0;
  double accuracy = 0;
  // The same figures with punctuation tokens left out.
  std::size_t word_count = 0;
  std::size_t word_correct = 0;
  double word_accuracy = 0;
  // Tokens flagged unknown by the caller's predicate.
  std::size_t unknown_count = 0;
  std::size_t unknown_correct = 0;
  double unknown_token_accuracy = 0;
  std::map<std::pair<std::string, std::string>, std::size_t> confusion;  // (gold, predicted) -> count
};

/// Exact-match accuracy; gold tags are mapped to `kind`. Throws EvalError
/// when the shapes differ token for token.
EvalReport evaluate(const AnnotatedCorpus& gold, const std::vector<TaggedSentence>& predicted, TagSetKind kind,
                    const std::function<bool(const std::string&)>& is_unknown = nullptr);

/// Aligned text followed by a `key<TAB>value` section.
std::string format_report(const EvalReport& r);

/// Tags every sentence, spreading the work over `threads` (0 = hardware).
/// The result does not depend on the thread count.
std::vector<TaggedSentence> tag_corpus(const Tagger& tagger, Algorithm algo, const AnnotatedCorpus& corpus,
                                       unsigned threads = 0);

/// Sentence-level shuffle (seeded) into (train, holdout).
std::pair<AnnotatedCorpus, AnnotatedCorpus> split_corpus(const AnnotatedCorpus& corpus, double holdout_fraction,
                                                         std::uint64_t seed);

/// k-fold split over a seeded sentence shuffle: fold i tests on every k-th
/// shuffled sentence starting at i and trains on the rest.
std::vector<std::pair<AnnotatedCorpus, AnnotatedCorpus>> cross_validation(const AnnotatedCorpus& corpus,
                                                                          std::size_t folds, std::uint64_t seed);

/// Leading whole sentences until at least `tokens` tokens are covered.
AnnotatedCorpus take_tokens(const AnnotatedCorpus& corpus, std::size_t tokens);

/// Accuracy on `holdout` after training on the first `size` tokens of
/// `train`, for each size. Size 0 is the context-free baseline. Throws
/// EvalError when a size exceeds the training corpus.
std::vector<std::pair<std::size_t, double>> learning_curve(const AnnotatedCorpus& train,
                                                           const AnnotatedCorpus& holdout, const Analyzer& analyzer,
                                                           Algorithm algo, TagSetKind kind,
                                                           const std::vector<std::size_t>& sizes);

/// No-context baseline: each token gets its candidate with the highest
/// probability under a suffix model of the expanded lexicon.
std::vector<TaggedSentence> baseline_tags(const AnnotatedCorpus& corpus, const Analyzer& analyzer, TagSetKind kind);

/// Replaces floor(rate * W) uniformly chosen open-class tokens (W of them) by
/// pseudowords: a random syllable plus the original's last two characters,
/// capitalized like the original and unknown to `analyzer`. Gold tags stay.
/// Rate 0 is the identity.
AnnotatedCorpus perturb_unknowns(const AnnotatedCorpus& corpus, double rate, std::uint64_t seed,
                                 const Analyzer& analyzer);

/// Pooled Church accuracy over cross-validation folds, before and after a
/// treatment. Every fold trains its own models.
struct Comparison {
  TagSetKind kind = TagSetKind::small;
  double before = 0;
  double after = 0;
  double drop() const { return before - after; }
};

struct ExperimentConfig {
  std::size_t folds = 5;
  std::uint64_t seed = 42;  // fold assignment
};

/// Treatment: each test fold is perturbed `replicates` times at `rate`; the
/// perturbation seeds derive from `perturb_seed`.
Comparison perturbation_experiment(const AnnotatedCorpus& corpus, const Analyzer& analyzer, TagSetKind kind,
                                   double rate, std::uint64_t perturb_seed, std::size_t replicates = 10,
                                   const ExperimentConfig& config = {});

/// Treatment: lexical probabilities replaced by ablate_lexical.
Comparison ablation_experiment(const AnnotatedCorpus& corpus, const Analyzer& analyzer, TagSetKind kind,
                               const ExperimentConfig& config = {});

/// Mean number of candidate tags per token.
double ambiguity_rate(const AnnotatedCorpus& corpus, const Tagger& tagger);

struct GrowthRow {
  std::size_t checkpoint;
  std::size_t n;
  std::size_t distinct;
};

/// Distinct n-grams within each stream prefix. Checkpoints must ascend.
std::vector<GrowthRow> ngram_growth(const std::vector<std::string>& stream, const std::vector<std::size_t>& n_values,
                                   const std::vector<std::size_t>& checkpoints);

}  // namespace morphy

#include "morphy/eval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "morphy/analysis.hpp"
#include "morphy/inflection.hpp"
#include "morphy/utf8.hpp"

namespace morphy {

std::string_view to_string(Algorithm a) { return a == Algorithm::church ? "church" : "varcontext"; }

Algorithm parse_algorithm(std::string_view s) {
  if (s == "church") return Algorithm::church;
  if (s == "varcontext") return Algorithm::varcontext;
  throw EvalError("unknown algorithm '" + std::string(s) + "'");
}

namespace {

double ratio(std::size_t a, std::size_t b) { return b ? static_cast<double>(a) / static_cast<double>(b) : 0.0; }

std::vector<std::string> surfaces(const CorpusSentence& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (const auto& t : s) out.push_back(t.surface);
  return out;
}

// Unbiased enough for shuffling a few thousand items, and identical on every
// standard library (unlike std::shuffle with a distribution).
std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace

EvalReport evaluate(const AnnotatedCorpus& gold, const std::vector<TaggedSentence>& predicted, TagSetKind kind,
                    const std::function<bool(const std::string&)>& is_unknown) {
  if (gold.sentences.size() != predicted.size())
    throw EvalError("sentence count mismatch: " + std::to_string(gold.sentences.size()) + " gold vs " +
                    std::to_string(predicted.size()) + " predicted");
  EvalReport r;
  r.kind = kind;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const auto& g = gold.sentences[i];
    const auto& p = predicted[i].tokens;
    if (g.size() != p.size()) throw EvalError("token count mismatch in sentence " + std::to_string(i + 1));
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j].surface != p[j].first) throw EvalError("surface mismatch in sentence " + std::to_string(i + 1));
      Tag gt = to_kind(g[j].tag, kind);
      Tag pt = p[j].second.kind == kind ? p[j].second : to_kind(p[j].second, kind);
      bool ok = gt == pt;
      ++r.token_count;
      r.correct_count += ok;
      if (!is_punctuation(gt)) {
        ++r.word_count;
        r.word_correct += ok;
      }
      if (is_unknown && is_unknown(g[j].surface)) {
        ++r.unknown_count;
        r.unknown_correct += ok;
      }
      ++r.confusion[{format_tag(gt), format_tag(pt)}];
    }
  }
  r.accuracy = ratio(r.correct_count, r.token_count);
  r.word_accuracy = ratio(r.word_correct, r.word_count);
  r.unknown_token_accuracy = ratio(r.unknown_correct, r.unknown_count);
  return r;
}

std::string format_report(const EvalReport& r) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(4);
  o << "tag set            " << to_string(r.kind) << "\n";
  o << "tokens             " << std::setw(8) << r.token_count << "   accuracy " << r.accuracy << "\n";
  o << "without punctuation" << std::setw(8) << r.word_count << "   accuracy " << r.word_accuracy << "\n";
  o << "unknown tokens     " << std::setw(8) << r.unknown_count << "   accuracy " << r.unknown_token_accuracy << "\n";

  std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> errors;
  for (const auto& [k, n] : r.confusion)
    if (k.first != k.second) errors.emplace_back(n, k);
  std::stable_sort(errors.begin(), errors.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  if (!errors.empty()) {
    o << "most frequent confusions (gold -> predicted)\n";
    for (std::size_t i = 0; i < errors.size() && i < 10; ++i)
      o << std::setw(6) << errors[i].first << "  " << errors[i].second.first << " -> " << errors[i].second.second
        << "\n";
  }
  o << "\n";
  o << std::setprecision(6);
  o << "tagset\t" << to_string(r.kind) << "\n";
  o << "token_count\t" << r.token_count << "\n";
  o << "correct_count\t" << r.correct_count << "\n";
  o << "accuracy\t" << r.accuracy << "\n";
  o << "word_count\t" << r.word_count << "\n";
  o << "word_correct\t" << r.word_correct << "\n";
  o << "word_accuracy\t" << r.word_accuracy << "\n";
  o << "unknown_count\t" << r.unknown_count << "\n";
  o << "unknown_correct\t" << r.unknown_correct << "\n";
  o << "unknown_token_accuracy\t" << r.unknown_token_accuracy << "\n";
  for (const auto& [k, n] : r.confusion) o << "confusion\t" << k.first << "\t" << k.second << "\t" << n << "\n";
  return o.str();
}

std::vector<TaggedSentence> tag_corpus(const Tagger& tagger, Algorithm algo, const AnnotatedCorpus& corpus,
                                       unsigned threads) {
  const auto& sents = corpus.sentences;
  std::vector<TaggedSentence> out(sents.size());
  auto run = [&](std::size_t i) {
    auto w = surfaces(sents[i]);
    out[i] = algo == Algorithm::church ? tagger.church(w) : tagger.varcontext(w);
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, sents.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < sents.size(); ++i) run(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned k = 0; k < threads; ++k)
    pool.emplace_back([&, k] {
      try {
        for (std::size_t i = k; i < sents.size(); i += threads) run(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::pair<AnnotatedCorpus, AnnotatedCorpus> split_corpus(const AnnotatedCorpus& corpus, double holdout_fraction,
                                                         std::uint64_t seed) {
  if (holdout_fraction < 0 || holdout_fraction > 1) throw EvalError("holdout fraction out of range");
  std::vector<std::size_t> order(corpus.sentences.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[below(rng, i)]);
  const auto n_hold = static_cast<std::size_t>(std::floor(holdout_fraction * static_cast<double>(order.size())));
  AnnotatedCorpus train, hold;
  train.provenance = corpus.provenance;
  hold.provenance = corpus.provenance;
  for (std::size_t i = 0; i < order.size(); ++i)
    (i < order.size() - n_hold ? train : hold).sentences.push_back(corpus.sentences[order[i]]);
  return {std::move(train), std::move(hold)};
}

std::vector<std::pair<AnnotatedCorpus, AnnotatedCorpus>> cross_validation(const AnnotatedCorpus& corpus,
                                                                          std::size_t folds, std::uint64_t seed) {
  if (folds < 2) throw EvalError("need at least two folds");
  if (folds > corpus.sentences.size()) throw EvalError("more folds than sentences");
  auto shuffled = split_corpus(corpus, 0.0, seed).first;
  std::vector<std::pair<AnnotatedCorpus, AnnotatedCorpus>> out(folds);
  for (auto& [train, test] : out) train.provenance = test.provenance = corpus.provenance;
  for (std::size_t i = 0; i < shuffled.sentences.size(); ++i)
    for (std::size_t k = 0; k < folds; ++k)
      (i % folds == k ? out[k].second : out[k].first).sentences.push_back(shuffled.sentences[i]);
  return out;
}

AnnotatedCorpus take_tokens(const AnnotatedCorpus& corpus, std::size_t tokens) {
  if (tokens > corpus.token_count())
    throw EvalError("size " + std::to_string(tokens) + " exceeds the " + std::to_string(corpus.token_count()) +
                    " training tokens");
  AnnotatedCorpus out;
  out.provenance = corpus.provenance;
  std::size_t n = 0;
  for (const auto& s : corpus.sentences) {
    if (n >= tokens) break;
    out.sentences.push_back(s);
    n += s.size();
  }
  return out;
}

std::vector<TaggedSentence> baseline_tags(const AnnotatedCorpus& corpus, const Analyzer& analyzer, TagSetKind kind) {
  auto ffl = expand_full_form_lexicon(analyzer.lexicon(), analyzer.classes());
  auto prior = train_suffix_model(ffl, kind, 5, false);
  // Tagger only for candidate sets; with no training data every known form
  // keeps its analyses and unknown ones fall back to the open classes.
  Models empty(kind);
  Tagger tagger(analyzer, empty);
  std::vector<TaggedSentence> out;
  for (const auto& s : corpus.sentences) {
    TaggedSentence ts;
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto cands = tagger.candidates(s[i].surface, i == 0);
      auto dist = guess_unknown(s[i].surface, prior);
      TagId pick = cands.front().id;
      double best = -1;
      for (const auto& c : cands) {
        const auto name = empty.name(c.id);
        double p = 0;
        for (const auto& [t, q] : dist)
          if (format_tag(t) == name) p = q;
        if (p > best) best = p, pick = c.id;
      }
      ts.tokens.emplace_back(s[i].surface, empty.tag(pick));
    }
    out.push_back(std::move(ts));
  }
  return out;
}

std::vector<std::pair<std::size_t, double>> learning_curve(const AnnotatedCorpus& train,
                                                           const AnnotatedCorpus& holdout, const Analyzer& analyzer,
                                                           Algorithm algo, TagSetKind kind,
                                                           const std::vector<std::size_t>& sizes) {
  std::vector<std::pair<std::size_t, double>> out;
  for (auto size : sizes) {
    auto part = take_tokens(train, size);
    std::vector<TaggedSentence> predicted;
    if (size == 0) {
      predicted = baseline_tags(holdout, analyzer, kind);
    } else {
      auto models = train_models(part, kind);
      Tagger tagger(analyzer, models);
      predicted = tag_corpus(tagger, algo, holdout);
    }
    out.emplace_back(size, evaluate(holdout, predicted, kind).accuracy);
  }
  return out;
}

namespace {

const std::vector<std::string> kOnsets{"bl", "br", "dr", "fl", "fr", "gl", "gr", "kl", "kn", "kr", "pl", "pr",
                                       "schl", "schm", "schn", "schw", "sp", "st", "tr", "zw", "b", "d", "f", "g",
                                       "h", "k", "l", "m", "n", "p", "r", "s", "t", "w", "z"};
const std::vector<std::string> kNuclei{"a", "e", "i", "o", "u", "ä", "ö", "ü", "au", "ei", "ie"};
const std::vector<std::string> kCodas{"b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "x", "rz", "lf",
                                      "nk", "mp", "rk"};

}  // namespace

AnnotatedCorpus perturb_unknowns(const AnnotatedCorpus& corpus, double rate, std::uint64_t seed,
                                 const Analyzer& analyzer) {
  if (rate < 0 || rate > 1) throw EvalError("rate must be within [0, 1]");
  AnnotatedCorpus out = corpus;
  std::vector<std::pair<std::size_t, std::size_t>> words;
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i)
    for (std::size_t j = 0; j < corpus.sentences[i].size(); ++j) {
      const auto& t = corpus.sentences[i][j];
      if (is_open_class(t.tag)) words.emplace_back(i, j);
    }
  const auto k = static_cast<std::size_t>(std::floor(rate * static_cast<double>(words.size()) + 1e-9));
  if (k == 0) return out;

  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first k entries become the sample.
  for (std::size_t i = 0; i < k; ++i) std::swap(words[i], words[i + below(rng, words.size() - i)]);
  std::sort(words.begin(), words.begin() + static_cast<std::ptrdiff_t>(k));

  auto pick = [&](const std::vector<std::string>& v) -> const std::string& { return v[below(rng, v.size())]; };
  std::unordered_set<std::string> used;
  for (std::size_t w = 0; w < k; ++w) {
    auto& tok = out.sentences[words[w].first][words[w].second];
    // The original ending keeps the form as ambiguous as a real inflected word.
    const std::string suffix(utf8::last_chars(tok.surface, 2));
    std::string word;
    for (int attempt = 0;; ++attempt) {
      word = pick(kOnsets) + pick(kNuclei) + pick(kCodas);
      if (attempt > 20) word += pick(kNuclei) + pick(kCodas);
      word += suffix;
      if (utf8::is_upper_initial(tok.surface)) word = utf8::upper_initial(word);
      if (!used.count(word) && analyzer.analyze_initial(word).empty()) break;
    }
    used.insert(word);
    tok.surface = std::move(word);
  }
  return out;
}

namespace {

std::size_t church_correct(const Tagger& tagger, const AnnotatedCorpus& test, TagSetKind kind) {
  return evaluate(test, tag_corpus(tagger, Algorithm::church, test), kind).correct_count;
}

}  // namespace

Comparison perturbation_experiment(const AnnotatedCorpus& corpus, const Analyzer& analyzer, TagSetKind kind,
                                   double rate, std::uint64_t perturb_seed, std::size_t replicates,
                                   const ExperimentConfig& config) {
  if (replicates == 0) throw EvalError("need at least one replicate");
  std::size_t n = 0, ok = 0, pn = 0, pok = 0;
  const auto folds = cross_validation(corpus, config.folds, config.seed);
  for (std::size_t k = 0; k < folds.size(); ++k) {
    const auto& [train, test] = folds[k];
    auto models = train_models(train, kind);
    Tagger tagger(analyzer, models);
    n += test.token_count();
    ok += church_correct(tagger, test, kind);
    for (std::size_t r = 0; r < replicates; ++r) {
      auto noisy = perturb_unknowns(test, rate, perturb_seed + r * folds.size() + k, analyzer);
      pn += noisy.token_count();
      pok += church_correct(tagger, noisy, kind);
    }
  }
  return {kind, ratio(ok, n), ratio(pok, pn)};
}

Comparison ablation_experiment(const AnnotatedCorpus& corpus, const Analyzer& analyzer, TagSetKind kind,
                               const ExperimentConfig& config) {
  std::size_t n = 0, ok = 0, aok = 0;
  for (const auto& [train, test] : cross_validation(corpus, config.folds, config.seed)) {
    auto models = train_models(train, kind);
    auto ablated = ablate_lexical(models);
    n += test.token_count();
    ok += church_correct(Tagger(analyzer, models), test, kind);
    aok += church_correct(Tagger(analyzer, ablated), test, kind);
  }
  return {kind, ratio(ok, n), ratio(aok, n)};
}

double ambiguity_rate(const AnnotatedCorpus& corpus, const Tagger& tagger) {
  std::size_t tokens = 0, total = 0;
  for (const auto& s : corpus.sentences)
    for (std::size_t i = 0; i < s.size(); ++i) {
      total += tagger.candidates(s[i].surface, i == 0).size();
      ++tokens;
    }
  return ratio(total, tokens);
}

std::vector<GrowthRow> ngram_growth(const std::vector<std::string>& stream, const std::vector<std::size_t>& n_values,
                                   const std::vector<std::size_t>& checkpoints) {
  for (std::size_t i = 1; i < checkpoints.size(); ++i)
    if (checkpoints[i] <= checkpoints[i - 1]) throw EvalError("checkpoints must ascend");
  std::vector<std::unordered_set<std::string>> seen(n_values.size());
  std::vector<GrowthRow> out;
  std::size_t pos = 0;  // tokens consumed
  for (auto cp : checkpoints) {
    cp = std::min(cp, stream.size());
    for (; pos < cp; ++pos) {
      for (std::size_t k = 0; k < n_values.size(); ++k) {
        const auto n = n_values[k];
        if (n == 0 || pos + 1 < n) continue;
        std::string key;
        for (std::size_t j = pos + 1 - n; j <= pos; ++j) {
          key += stream[j];
          key += '\x1f';
        }
        seen[k].insert(std::move(key));
      }
    }
    for (std::size_t k = 0; k < n_values.size(); ++k) out.push_back({cp, n_values[k], seen[k].size()});
  }
  return out;
}

}  // namespace morphy

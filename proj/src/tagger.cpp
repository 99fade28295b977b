#include "morphy/tagger.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "morphy/io.hpp"
#include "morphy/utf8.hpp"

namespace morphy {

namespace {

std::shared_ptr<const std::vector<std::string>> outcome_names(TagSetKind kind) {
  static const auto small = [] {
    auto v = TagSet::get(TagSetKind::small).member_strings();
    v.emplace_back(kBoundaryTag);
    return std::make_shared<const std::vector<std::string>>(std::move(v));
  }();
  static const auto large = [] {
    auto v = TagSet::get(TagSetKind::large).member_strings();
    v.emplace_back(kBoundaryTag);
    return std::make_shared<const std::vector<std::string>>(std::move(v));
  }();
  return kind == TagSetKind::small ? small : large;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) throw TaggerError("bad number '" + std::string(s) + "'", line);
  return v;
}

bool is_number_token(std::string_view s) {
  bool digit = false;
  for (char c : s) {
    if (c >= '0' && c <= '9')
      digit = true;
    else if (c != '.' && c != ',' && c != '-' && c != '/')
      return false;
  }
  return digit;
}

}  // namespace

// ---------------------------------------------------------------- Models

Models::Models(TagSetKind kind, std::size_t n_max, Smoothing smoothing)
    : kind_(kind), n_max_(n_max), smoothing_(smoothing), names_(outcome_names(kind)) {
  if (n_max_ < 3) throw TaggerError("N_max must be at least 3");
  double sum = 0;
  for (double l : smoothing_.lambdas) {
    if (l < 0) throw TaggerError("negative interpolation weight");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw TaggerError("interpolation weights must sum to 1");
  if (!(smoothing_.epsilon > 0) || smoothing_.epsilon * static_cast<double>(outcome_count()) >= 1.0)
    throw TaggerError("epsilon out of range");
  suffix.kind = kind;
}

std::optional<TagId> Models::id_of(std::string_view canonical) const {
  const auto& v = *names_;
  if (canonical == kBoundaryTag) return boundary();
  auto it = std::lower_bound(v.begin(), v.end() - 1, canonical);
  if (it == v.end() - 1 || *it != canonical) return std::nullopt;
  return static_cast<TagId>(it - v.begin());
}

Tag Models::tag(TagId id) const {
  if (id == boundary()) throw TaggerError("the boundary is not a tag");
  return TagSet::get(kind_).members()[id];
}

void Models::add_ngram(const TagSeq& seq, double count) {
  if (seq.empty() || seq.size() > n_max_) throw TaggerError("n-gram order out of range");
  ngrams_[seq] += count;
  histories_[seq.substr(0, seq.size() - 1)] += count;
}

void Models::add_lexical(const std::string& form, TagId tag, double count) {
  auto& v = lex_[form];
  auto it = std::lower_bound(v.begin(), v.end(), tag, [](const auto& p, TagId t) { return p.first < t; });
  if (it != v.end() && it->first == tag)
    it->second += count;
  else
    v.insert(it, {tag, count});
}

double Models::ngram_count(const TagSeq& seq) const {
  auto it = ngrams_.find(seq);
  return it == ngrams_.end() ? 0.0 : it->second;
}

double Models::history_total(const TagSeq& history) const {
  auto it = histories_.find(history);
  return it == histories_.end() ? 0.0 : it->second;
}

double Models::context_prob(TagId a, TagId b, TagId c) const {
  // Orders whose history was never seen drop out and the remaining weights
  // are renormalized; the floor keeps every outcome possible.
  const auto& l = smoothing_.lambdas;
  double mix = 0, weight = 0;
  TagSeq h;
  if (double t = history_total(h); t > 0) {
    mix += l[0] * ngram_count(TagSeq(1, c)) / t;
    weight += l[0];
  }
  h.assign(1, b);
  if (double t = history_total(h); t > 0) {
    mix += l[1] * ngram_count(TagSeq{b, c}) / t;
    weight += l[1];
  }
  h.assign({a, b});
  if (double t = history_total(h); t > 0) {
    mix += l[2] * ngram_count(TagSeq{a, b, c}) / t;
    weight += l[2];
  }
  const double k = static_cast<double>(outcome_count());
  double p = weight > 0 ? mix / weight : 1.0 / k;
  return (1.0 - k * smoothing_.epsilon) * p + smoothing_.epsilon;
}

const std::vector<std::pair<TagId, double>>* Models::lexical_counts(const std::string& form) const {
  auto it = lex_.find(form);
  return it == lex_.end() ? nullptr : &it->second;
}

double Models::lexical_prob(const std::string& form, TagId tag) const {
  const double eps = smoothing_.epsilon;
  const auto* v = lexical_counts(form);
  if (!v) return eps;
  auto it = std::lower_bound(v->begin(), v->end(), tag, [](const auto& p, TagId t) { return p.first < t; });
  if (it == v->end() || it->first != tag) return eps;
  double total = ngram_count(TagSeq(1, tag));
  return total > 0 ? std::max(eps, it->second / total) : eps;
}

// ---------------------------------------------------------------- training

Models train_models(const AnnotatedCorpus& corpus, TagSetKind kind, std::size_t n_max, Smoothing s) {
  if (corpus.token_count() == 0) throw TaggerError("empty training corpus");
  Models m(kind, n_max, s);
  std::vector<std::pair<std::string, Tag>> pairs;
  const TagId B = m.boundary();
  for (const auto& sentence : corpus.sentences) {
    TagSeq padded{B, B};
    for (const auto& tok : sentence) {
      if (!is_valid(tok.tag)) throw TaggerError("invalid tag " + format_tag(tok.tag), tok.line);
      Tag t = to_kind(tok.tag, kind);
      auto id = m.id_of(format_tag(t));
      if (!id) throw TaggerError("tag outside the tag set: " + format_tag(t), tok.line);
      padded.push_back(*id);
      m.add_lexical(tok.surface, *id, 1.0);
      pairs.emplace_back(tok.surface, std::move(t));
    }
    padded.push_back(B);
    for (std::size_t k = 1; k <= n_max; ++k)
      for (std::size_t i = 0; i + k <= padded.size(); ++i) m.add_ngram(padded.substr(i, k), 1.0);
  }
  m.suffix = train_suffix_model(pairs, kind);
  return m;
}

Models ablate_lexical(const Models& m) {
  Models out = m;
  out.set_lexical_ablated(true);
  return out;
}

// ---------------------------------------------------------------- model files

std::string save_models(const Models& m) {
  std::string out;
  const auto& s = m.smoothing();
  out += "META\tkind\t" + std::string(to_string(m.kind())) + "\n";
  out += "META\tn_max\t" + std::to_string(m.n_max()) + "\n";
  for (int i = 0; i < 3; ++i) out += "META\tlambda" + std::to_string(i + 1) + "\t" + format_double(s.lambdas[i]) + "\n";
  out += "META\tepsilon\t" + format_double(s.epsilon) + "\n";
  out += "META\tsuffix_max_len\t" + std::to_string(m.suffix.max_len) + "\n";
  out += "META\tlexical_ablated\t" + std::string(m.lexical_ablated() ? "1" : "0") + "\n";

  std::vector<std::pair<std::string, double>> grams;
  for (const auto& [seq, c] : m.ngrams()) {
    std::string key = std::to_string(seq.size()) + "\t";
    for (std::size_t i = 0; i < seq.size(); ++i) key += (i ? "|" : "") + m.name(seq[i]);
    grams.emplace_back(std::move(key), c);
  }
  std::sort(grams.begin(), grams.end());
  for (const auto& [k, c] : grams) out += "NGRAM\t" + k + "\t" + format_double(c) + "\n";

  std::map<std::string, const std::vector<std::pair<TagId, double>>*> forms;
  for (const auto& [f, v] : m.lexicon()) forms.emplace(f, &v);
  for (const auto& [f, v] : forms)
    for (const auto& [id, c] : *v) out += "LEX\t" + f + "\t" + m.name(id) + "\t" + format_double(c) + "\n";

  for (const auto& [suf, tags] : m.suffix.counts)
    for (const auto& [t, c] : tags) out += "SUFFIX\t" + suf + "\t" + t + "\t" + format_double(c) + "\n";
  return out;
}

Models load_models(std::string_view text) {
  auto lines = utf8::split(text, '\n');
  std::map<std::string, std::string> meta;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto f = utf8::split(lines[i], '\t');
    if (f.size() == 3 && f[0] == "META") meta[f[1]] = f[2];
  }
  auto get = [&](const std::string& k, const std::string& dflt) {
    auto it = meta.find(k);
    return it == meta.end() ? dflt : it->second;
  };
  Smoothing s;
  TagSetKind kind;
  std::size_t n_max = 3;
  try {
    kind = parse_tagset_kind(get("kind", "small"));
    n_max = std::stoul(get("n_max", "3"));
    for (int i = 0; i < 3; ++i)
      s.lambdas[i] = parse_double(get("lambda" + std::to_string(i + 1), format_double(s.lambdas[i])), 0);
    s.epsilon = parse_double(get("epsilon", format_double(s.epsilon)), 0);
  } catch (const TaggerError&) {
    throw;
  } catch (const std::exception& e) {
    throw TaggerError(std::string("bad META value: ") + e.what());
  }
  Models m(kind, n_max, s);
  m.set_lexical_ablated(get("lexical_ablated", "0") == "1");
  m.suffix.kind = kind;
  m.suffix.max_len = std::stoul(get("suffix_max_len", "5"));

  auto tag_id = [&](const std::string& name, std::size_t line) {
    auto id = m.id_of(name);
    if (!id) throw TaggerError("unknown tag '" + name + "'", line);
    return *id;
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto f = utf8::split(line, '\t');
    const auto& kindf = f[0];
    if (kindf == "META") {
      if (f.size() != 3) throw TaggerError("META needs key and value", lineno);
    } else if (kindf == "NGRAM") {
      if (f.size() != 4) throw TaggerError("NGRAM needs order, tags and count", lineno);
      auto parts = utf8::split(f[2], '|');
      if (std::to_string(parts.size()) != f[1]) throw TaggerError("n-gram order mismatch", lineno);
      TagSeq seq;
      for (const auto& p : parts) seq.push_back(tag_id(p, lineno));
      if (seq.size() > n_max) throw TaggerError("n-gram longer than N_max", lineno);
      m.add_ngram(seq, parse_double(f[3], lineno));
    } else if (kindf == "LEX") {
      if (f.size() != 4) throw TaggerError("LEX needs form, tag and count", lineno);
      TagId id = tag_id(f[2], lineno);
      if (id == m.boundary()) throw TaggerError("boundary in LEX", lineno);
      m.add_lexical(f[1], id, parse_double(f[3], lineno));
    } else if (kindf == "SUFFIX") {
      if (f.size() != 4) throw TaggerError("SUFFIX needs suffix, tag and count", lineno);
      TagId id = tag_id(f[2], lineno);
      if (id == m.boundary()) throw TaggerError("boundary in SUFFIX", lineno);
      double c = parse_double(f[3], lineno);
      m.suffix.counts[f[1]][f[2]] += c;
      m.suffix.totals[f[1]] += c;
    } else {
      throw TaggerError("unknown section '" + kindf + "'", lineno);
    }
  }
  return m;
}

Models load_models_file(const std::string& path) {
  std::string text;
  try {
    text = io::read_file(path);
  } catch (const std::runtime_error& e) {
    throw TaggerError(e.what());
  }
  return load_models(text);
}

void save_models_file(const Models& m, const std::string& path) { io::write_file_atomic(path, save_models(m)); }

// ---------------------------------------------------------------- tokens

namespace {

bool is_edge_punct(std::string_view ch) {
  static const std::set<std::string_view> p{".", ",", ";", ":", "!", "?", "\"", "'", "(", ")",
                                            "[", "]", "„", "“", "”", "«", "»", "‚", "‘", "’"};
  return p.count(ch) > 0;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, const std::function<bool(std::string_view)>& keep) {
  std::vector<std::string> out;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j == i) break;
    std::string_view word = text.substr(i, j - i);
    i = j;
    if (keep && keep(word)) {
      out.emplace_back(word);
      continue;
    }
    auto cs = utf8::chars(word);
    std::size_t b = 0, e = cs.size();
    std::vector<std::string> lead, trail;
    while (b < e && is_edge_punct(cs[b])) lead.push_back(cs[b++]);
    while (e > b && is_edge_punct(cs[e - 1])) {
      std::string core;
      for (std::size_t k = b; k < e; ++k) core += cs[k];
      if (keep && keep(core)) break;
      trail.push_back(cs[--e]);
    }
    for (auto& p : lead) out.push_back(std::move(p));
    if (b < e) {
      std::string core;
      for (std::size_t k = b; k < e; ++k) core += cs[k];
      out.push_back(std::move(core));
    }
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) out.push_back(std::move(*it));
  }
  return out;
}

std::vector<std::vector<std::string>> split_sentences(const std::vector<std::string>& tokens) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> cur;
  for (const auto& t : tokens) {
    cur.push_back(t);
    if (t == "." || t == "!" || t == "?") {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

// ---------------------------------------------------------------- candidates

Tagger::Tagger(const Analyzer& analyzer, const Models& models) : analyzer_(analyzer), models_(models) {}

std::vector<TagId> Tagger::analysis_tags(const std::string& surface, bool initial) const {
  std::string key = (initial ? "1" : "0") + surface;
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  auto readings = initial ? analyzer_.analyze_initial(surface) : analyzer_.analyze(surface);
  std::vector<TagId> ids;
  for (const auto& r : readings) {
    auto id = models_.id_of(format_tag(to_kind(r.tag, models_.kind())));
    if (id) ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::lock_guard lock(memo_mutex_);
  memo_.emplace(std::move(key), ids);
  return ids;
}

std::vector<Candidate> Tagger::candidates(const std::string& surface, bool sentence_initial) const {
  std::vector<Candidate> out;
  const auto& m = models_;
  auto ids = analysis_tags(surface, sentence_initial);

  if (ids.empty()) {
    if (const auto* seen = m.lexical_counts(surface))
      for (const auto& [id, c] : *seen) ids.push_back(id);
  }
  if (ids.empty() && is_number_token(surface)) {
    if (auto id = m.id_of("ZAN")) ids.push_back(*id);
  }

  if (!ids.empty()) {
    for (TagId id : ids) out.push_back({id, m.lexical_prob(surface, id)});
  } else {
    // Unknown form: P(tag | suffix) turned into a likelihood with the
    // unigram tag prior; the constant P(form) is dropped.
    for (const auto& [tag, p] : guess_unknown(surface, m.suffix)) {
      auto id = m.id_of(format_tag(tag));
      if (!id) continue;
      double prior = m.ngram_count(TagSeq(1, *id));
      double eps = m.smoothing().epsilon;
      out.push_back({*id, prior > 0 ? std::max(eps, p / prior) : eps});
    }
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.id < b.id; });
  }
  if (m.lexical_ablated())
    for (auto& c : out) c.lexical = 1.0 / static_cast<double>(out.size());
  return out;
}

std::vector<std::vector<Candidate>> Tagger::lattice(const std::vector<std::string>& sentence) const {
  std::vector<std::vector<Candidate>> out;
  out.reserve(sentence.size());
  for (std::size_t i = 0; i < sentence.size(); ++i) out.push_back(candidates(sentence[i], i == 0));
  return out;
}

TaggedSentence Tagger::make_result(const std::vector<std::string>& sentence, const std::vector<TagId>& ids,
                                   bool boundaries) const {
  TaggedSentence out;
  out.boundaries_assumed = boundaries;
  for (std::size_t i = 0; i < sentence.size(); ++i) out.tokens.emplace_back(sentence[i], models_.tag(ids[i]));
  return out;
}

// ---------------------------------------------------------------- Church

namespace {

// Per-position step scores: step[i][a][b][c] = log P(w_i | c) + log P(c | a, b)
// for candidate indices a at i-2, b at i-1, c at i. Position n is the final
// boundary. Both exact decoders read the same table, so their sums agree
// bit for bit.
struct StepTable {
  std::vector<std::vector<Candidate>> cand;  // index i+2 holds position i; padded
  std::vector<std::vector<double>> step;     // flattened per position
  std::size_t n = 0;

  const std::vector<Candidate>& at(long i) const { return cand[static_cast<std::size_t>(i + 2)]; }

  double get(std::size_t i, std::size_t a, std::size_t b, std::size_t c) const {
    const auto& B = at(static_cast<long>(i) - 1);
    const auto& C = at(static_cast<long>(i));
    return step[i][(a * B.size() + b) * C.size() + c];
  }
};

StepTable build_steps(const Models& m, std::vector<std::vector<Candidate>> lattice) {
  StepTable t;
  t.n = lattice.size();
  const Candidate boundary{m.boundary(), 1.0};
  t.cand.push_back({boundary});
  t.cand.push_back({boundary});
  for (auto& c : lattice) t.cand.push_back(std::move(c));
  t.cand.push_back({boundary});
  for (std::size_t i = 0; i <= t.n; ++i) {
    const long li = static_cast<long>(i);
    const auto& A = t.at(li - 2);
    const auto& B = t.at(li - 1);
    const auto& C = t.at(li);
    std::vector<double> v(A.size() * B.size() * C.size());
    std::size_t k = 0;
    for (const auto& a : A)
      for (const auto& b : B)
        for (const auto& c : C) v[k++] = std::log(c.lexical) + std::log(m.context_prob(a.id, b.id, c.id));
    t.step.push_back(std::move(v));
  }
  return t;
}

// Right-to-left fold of the step scores along `idx` (candidate indices).
double fold(const StepTable& t, const std::vector<std::size_t>& idx) {
  const std::size_t n = t.n;
  auto at = [&](long i) -> std::size_t { return i < 0 || i >= static_cast<long>(n) ? 0 : idx[i]; };
  double v = t.get(n, at(static_cast<long>(n) - 2), at(static_cast<long>(n) - 1), 0);
  for (long i = static_cast<long>(n) - 1; i >= 0; --i) v = t.get(i, at(i - 2), at(i - 1), idx[i]) + v;
  return v;
}

}  // namespace

TaggedSentence Tagger::church(const std::vector<std::string>& sentence) const {
  if (sentence.empty()) throw TaggerError("empty sentence");
  auto t = build_steps(models_, lattice(sentence));
  const std::size_t n = t.n;
  // best[i][b*|C|+c]: best fold of steps i+1..n given tags b at i-1, c at i.
  std::vector<std::vector<double>> best(n);
  for (long i = static_cast<long>(n) - 1; i >= 0; --i) {
    const auto& B = t.at(i - 1);
    const auto& C = t.at(i);
    auto& cur = best[i];
    cur.assign(B.size() * C.size(), 0.0);
    for (std::size_t b = 0; b < B.size(); ++b)
      for (std::size_t c = 0; c < C.size(); ++c) {
        double v;
        if (i == static_cast<long>(n) - 1) {
          v = t.get(n, b, c, 0);
        } else {
          const auto& X = t.at(i + 1);
          v = -INFINITY;
          for (std::size_t x = 0; x < X.size(); ++x) v = std::max(v, t.get(i + 1, b, c, x) + best[i + 1][c * X.size() + x]);
        }
        cur[b * C.size() + c] = v;
      }
  }
  // Forward pass: the smallest candidate reaching the optimum at each step.
  std::vector<std::size_t> idx(n);
  std::size_t pa = 0, pb = 0;
  double target = -INFINITY;
  for (std::size_t c = 0; c < t.at(0).size(); ++c) target = std::max(target, t.get(0, 0, 0, c) + best[0][c]);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& C = t.at(static_cast<long>(i));
    std::size_t pick = C.size();
    for (std::size_t c = 0; c < C.size(); ++c)
      if (t.get(i, pa, pb, c) + best[i][pb * C.size() + c] == target) {
        pick = c;
        break;
      }
    if (pick == C.size()) throw TaggerError("internal: no optimal continuation");
    idx[i] = pick;
    target = best[i][pb * C.size() + pick];
    pa = pb;
    pb = pick;
  }
  std::vector<TagId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = t.at(static_cast<long>(i))[idx[i]].id;
  return make_result(sentence, ids, true);
}

TaggedSentence Tagger::bruteforce(const std::vector<std::string>& sentence, std::size_t bound) const {
  if (sentence.empty()) throw TaggerError("empty sentence");
  auto lat = lattice(sentence);
  double combos = 1;
  for (const auto& c : lat) combos *= static_cast<double>(c.size());
  if (combos > static_cast<double>(bound))
    throw TaggerError("brute force would enumerate " + format_double(combos) + " sequences");
  auto t = build_steps(models_, std::move(lat));
  const std::size_t n = t.n;
  std::vector<std::size_t> idx(n, 0), best_idx;
  double best = -INFINITY;
  while (true) {
    double v = fold(t, idx);
    if (best_idx.empty() || v > best) {
      best = v;
      best_idx = idx;
    }
    // Odometer with the last position fastest: lexicographic order.
    long i = static_cast<long>(n) - 1;
    while (i >= 0 && ++idx[i] == t.at(i).size()) idx[i--] = 0;
    if (i < 0) break;
  }
  std::vector<TagId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = t.at(static_cast<long>(i))[best_idx[i]].id;
  return make_result(sentence, ids, true);
}

double Tagger::score(const std::vector<std::string>& sentence, const std::vector<TagId>& tags) const {
  if (sentence.empty() || tags.size() != sentence.size()) throw TaggerError("sequence length mismatch");
  auto t = build_steps(models_, lattice(sentence));
  std::vector<std::size_t> idx(tags.size());
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const auto& C = t.at(static_cast<long>(i));
    auto it = std::find_if(C.begin(), C.end(), [&](const Candidate& c) { return c.id == tags[i]; });
    if (it == C.end()) throw TaggerError("tag not among the candidates at position " + std::to_string(i));
    idx[i] = static_cast<std::size_t>(it - C.begin());
  }
  return fold(t, idx);
}

// ---------------------------------------------------------------- variable context

TaggedSentence Tagger::varcontext(const std::vector<std::string>& sentence, bool assume_boundaries) const {
  if (sentence.empty()) throw TaggerError("empty sentence");
  const auto lat = lattice(sentence);
  const std::size_t n = lat.size();
  const std::size_t N = models_.n_max();
  const TagId B = models_.boundary();

  std::vector<TagId> assigned;
  assigned.reserve(n);

  // Right-context options for position j (n is the closing boundary).
  auto right_options = [&](std::size_t j, std::vector<TagId>& opts) {
    opts.clear();
    if (j < n)
      for (const auto& c : lat[j]) opts.push_back(c.id);
    else
      opts.push_back(B);
  };
  const std::size_t right_limit = assume_boundaries ? n + 1 : n;

  for (std::size_t i = 0; i < n; ++i) {
    const auto& cands = lat[i];
    if (cands.size() == 1) {
      assigned.push_back(cands[0].id);
      continue;
    }
    TagSeq left;
    if (assume_boundaries) left.assign(2, B);
    left.append(assigned.begin(), assigned.end());

    struct Score {
      std::size_t len = 0;
      double count = 0;
      double lexical = 0;
    };
    auto better = [](const Score& a, const Score& b) {
      if (a.len != b.len) return a.len > b.len;
      if (a.count != b.count) return a.count > b.count;
      return a.lexical > b.lexical;
    };

    std::size_t pick = 0;
    Score best_score;
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
      Score s;
      s.lexical = cands[ci].lexical;
      for (std::size_t L = N; L >= 1 && s.len == 0; --L) {
        double max_count = 0;
        for (std::size_t l = 0; l < L; ++l) {
          std::size_t r = L - 1 - l;
          if (l > left.size() || i + 1 + r > right_limit) continue;
          TagSeq seq = left.substr(left.size() - l);
          seq.push_back(cands[ci].id);
          // Maximize over right-context choices.
          std::function<void(std::size_t)> extend = [&](std::size_t k) {
            if (k == r) {
              max_count = std::max(max_count, models_.ngram_count(seq));
              return;
            }
            std::vector<TagId> opts;
            right_options(i + 1 + k, opts);
            for (TagId o : opts) {
              seq.push_back(o);
              extend(k + 1);
              seq.pop_back();
            }
          };
          extend(0);
        }
        if (max_count > 0) {
          s.len = L;
          s.count = max_count;
        }
      }
      if (ci == 0 || better(s, best_score)) {
        best_score = s;
        pick = ci;
      }
    }
    assigned.push_back(cands[pick].id);
  }
  return make_result(sentence, assigned, assume_boundaries);
}

// ---------------------------------------------------------------- wrappers

std::vector<std::pair<Tag, double>> candidate_tags(std::string_view surface, const Analyzer& analyzer,
                                                   const Models& models, bool sentence_initial) {
  Tagger t(analyzer, models);
  std::vector<std::pair<Tag, double>> out;
  for (const auto& c : t.candidates(std::string(surface), sentence_initial))
    out.emplace_back(models.tag(c.id), c.lexical);
  return out;
}

TaggedSentence tag_church(const std::vector<std::string>& sentence, const Models& models, const Analyzer& analyzer) {
  return Tagger(analyzer, models).church(sentence);
}

TaggedSentence tag_bruteforce(const std::vector<std::string>& sentence, const Models& models,
                              const Analyzer& analyzer) {
  return Tagger(analyzer, models).bruteforce(sentence);
}

TaggedSentence tag_varcontext(const std::vector<std::string>& sentence, const Models& models,
                              const Analyzer& analyzer, bool assume_boundaries) {
  return Tagger(analyzer, models).varcontext(sentence, assume_boundaries);
}

}  // namespace morphy

#include "morphy/analysis.hpp"

#include <algorithm>
#include <set>

#include "morphy/utf8.hpp"

namespace morphy {

namespace {

constexpr std::string_view kLinks[] = {"", "s", "es", "n", "en", "er", "e"};
constexpr std::size_t kMinPiece = 3;  // characters
constexpr std::size_t kMaxCovers = 256;

std::string demutate(std::string_view ch) {
  if (ch == "ä") return "a";
  if (ch == "ö") return "o";
  if (ch == "ü") return "u";
  if (ch == "Ä") return "A";
  if (ch == "Ö") return "O";
  if (ch == "Ü") return "U";
  return std::string(ch);
}

// ss -> ß on the last occurrence; "" when there is none.
std::string sharpen(std::string_view s) {
  auto pos = s.rfind("ss");
  if (pos == std::string_view::npos) return "";
  return std::string(s.substr(0, pos)) + "ß" + std::string(s.substr(pos + 2));
}

// Doubled final consonant of a piece, or "".
std::string doubled_consonant(std::string_view piece) {
  auto cs = utf8::chars(piece);
  if (cs.size() < 2) return "";
  const auto& a = cs[cs.size() - 2];
  const auto& b = cs.back();
  if (a == b && utf8::is_consonant(b)) return b;
  return "";
}

bool reading_less(const Analysis& a, const Analysis& b) {
  auto ta = format_tag(a.tag);
  auto tb = format_tag(b.tag);
  if (ta != tb) return ta < tb;
  if (a.lemma != b.lemma) return a.lemma < b.lemma;
  if (a.segments != b.segments) return a.segments < b.segments;
  return a.pieces < b.pieces;
}

}  // namespace

void sort_unique(std::vector<Analysis>& readings) {
  std::sort(readings.begin(), readings.end(), reading_less);
  readings.erase(std::unique(readings.begin(), readings.end()), readings.end());
}

std::string reverse_umlaut(std::string_view s) {
  auto cs = utf8::chars(s);
  for (std::size_t i = cs.size(); i-- > 0;) {
    auto plain = demutate(cs[i]);
    if (plain != cs[i]) {
      cs[i] = plain;
      return utf8::join(cs, "");
    }
  }
  return std::string(s);
}

std::vector<RootCandidate> candidate_roots(std::string_view form, const ParadigmSet& classes) {
  std::vector<RootCandidate> out;
  std::set<std::pair<std::string, std::string>> seen;
  auto emit = [&](std::string root, const std::string& suffix, const char* note) {
    if (root.empty()) return;
    if (seen.emplace(root, suffix).second) out.push_back({std::move(root), suffix, note});
  };
  for (const auto& suffix : classes.suffix_inventory()) {
    if (!utf8::ends_with(form, suffix)) continue;
    std::string rest(form.substr(0, form.size() - suffix.size()));
    if (rest.empty()) continue;
    emit(rest, suffix, "");
    auto plain = reverse_umlaut(rest);
    if (plain != rest) emit(plain, suffix, "umlaut");
    auto sharp = sharpen(rest);
    if (!sharp.empty()) emit(sharp, suffix, "ss");
    if (plain != rest) {
      auto both = sharpen(plain);
      if (!both.empty()) emit(both, suffix, "umlaut+ss");
    }
  }
  return out;
}

Analyzer::Analyzer(const Lexicon& lex, const ParadigmSet& classes) : lex_(lex), classes_(classes) {
  const auto& entries = lex_.entries();
  tables_.reserve(entries.size());
  std::set<std::pair<std::string, std::string>> prefix_seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    tables_.push_back(generate_forms(e, classes_));
    std::set<std::string> keys;
    for (const auto& row : tables_.back().rows) {
      if (!row.suffix.empty() && utf8::ends_with(row.surface, row.suffix))
        keys.insert(row.surface.substr(0, row.surface.size() - row.suffix.size()));
      else
        keys.insert(row.surface);
    }
    for (const auto& k : keys) stem_index_[k].push_back(i);
    root_index_[e.root].push_back(i);

    // Lemmas that may open a compound piece.
    std::string written;
    std::string lemma;
    if (e.is_noun()) {
      lemma = citation_form(e, classes_);
      written = lemma;
    } else if (e.pos == "VER" && classes_.find(e.class_id) && !classes_.find(e.class_id)->uses(StemTransform::fixed)) {
      lemma = citation_form(e, classes_);
      written = e.prefix + verb_stem(e.root, e.has(EntryFlag::ss_sharp_shift));
    } else if (e.pos == "ADJ") {
      lemma = e.root;
      written = e.root;
    }
    written = utf8::lower_initial(written);
    if (utf8::length(written) >= kMinPiece && prefix_seen.emplace(written, lemma).second)
      prefix_lemmas_.push_back({written, lemma});
  }
  std::sort(prefix_lemmas_.begin(), prefix_lemmas_.end(),
            [](const PrefixLemma& a, const PrefixLemma& b) { return std::tie(a.written, a.lemma) < std::tie(b.written, b.lemma); });
}

std::vector<Analysis> Analyzer::analyze_simple(std::string_view form) const {
  std::vector<Analysis> out;
  if (form.empty()) return out;
  std::set<std::size_t> hits;
  for (const auto& suffix : classes_.suffix_inventory()) {
    if (!utf8::ends_with(form, suffix)) continue;
    auto it = stem_index_.find(std::string(form.substr(0, form.size() - suffix.size())));
    if (it != stem_index_.end()) hits.insert(it->second.begin(), it->second.end());
  }
  // The root channel: candidate roots that are lexicon roots.
  for (const auto& c : candidate_roots(form, classes_)) {
    auto it = root_index_.find(c.root);
    if (it != root_index_.end()) hits.insert(it->second.begin(), it->second.end());
  }
  for (auto i : hits)
    for (const auto& row : tables_[i].rows)
      if (row.surface == form) out.push_back(Analysis{row.lemma, row.tag, {row.lemma}, {}, {}});
  sort_unique(out);
  return out;
}

std::vector<Analysis> Analyzer::analyze(std::string_view form) const {
  auto out = analyze_simple(form);
  if (out.empty()) out = segment_compound(form);
  return out;
}

std::vector<Analysis> Analyzer::analyze_initial(std::string_view form) const {
  auto out = analyze(form);
  auto lower = utf8::lower_initial(form);
  if (lower != form) {
    auto more = analyze(lower);
    out.insert(out.end(), more.begin(), more.end());
    sort_unique(out);
  }
  return out;
}

std::vector<Analysis> Analyzer::lookup_full_form(std::string_view form, const FullFormLexicon& ffl) const {
  std::vector<Analysis> out;
  auto it = ffl.find(std::string(form));
  if (it == ffl.end()) return out;
  for (const auto& [lemma, tag] : it->second)
    out.push_back(Analysis{lemma, parse_tag(tag, TagSetKind::large), {lemma}, {}, {}});
  sort_unique(out);
  return out;
}

std::vector<Analysis> Analyzer::segment_compound(std::string_view form) const {
  return segment_compound_with(form, [this](std::string_view f) { return analyze_simple(f); });
}

void Analyzer::covers(const std::string& text, std::size_t pos, const std::string& restore,
                      const std::string& end_restore, Cover& cur, std::vector<Cover>& out) const {
  if (out.size() >= kMaxCovers) return;
  std::string_view rest = std::string_view(text).substr(pos);
  for (const auto& pl : prefix_lemmas_) {
    for (int dropped = 0; dropped < 2; ++dropped) {
      std::string_view written = pl.written;
      if (dropped) {
        if (restore.empty() || !utf8::starts_with(written, restore)) continue;
        written.remove_prefix(restore.size());
      }
      if (!utf8::starts_with(rest, written)) continue;
      for (auto link : kLinks) {
        std::size_t next = pos + written.size() + link.size();
        if (next > text.size() || !utf8::starts_with(std::string_view(text).substr(pos + written.size()), link))
          continue;
        std::string dbl = link.empty() ? doubled_consonant(written) : "";
        cur.lemmas.push_back(pl.lemma);
        cur.pieces.push_back(std::string(written) + std::string(link));
        cur.links.emplace_back(link);
        if (next == text.size()) {
          if (end_restore.empty() || dbl == end_restore) out.push_back(cur);
        } else {
          covers(text, next, dbl, end_restore, cur, out);
        }
        cur.lemmas.pop_back();
        cur.pieces.pop_back();
        cur.links.pop_back();
      }
    }
  }
}

std::vector<Analysis> Analyzer::segment_compound_with(std::string_view form, const SimpleLookup& simple) const {
  std::vector<Analysis> out;
  if (!utf8::is_upper_initial(form)) return out;
  const std::string text(form);
  const std::string lowered = utf8::lower_initial(form);
  auto cs = utf8::chars(form);
  // Head start positions from the longest head to the shortest.
  for (std::size_t i = 2; i + kMinPiece <= cs.size(); ++i) {
    std::size_t off = utf8::offset_of(text, i);
    std::string head_text = text.substr(off);
    std::string prefix = lowered.substr(0, off);
    struct Try {
      std::string head;     // head as looked up
      std::string restore;  // consonant restored from the prefix
    };
    std::vector<Try> tries{{head_text, ""}};
    if (cs[i - 1] == cs[i - 2] && utf8::is_consonant(cs[i - 1])) tries.push_back({cs[i - 1] + head_text, cs[i - 1]});

    for (const auto& t : tries) {
      std::vector<Analysis> heads;
      for (auto& a : simple(utf8::upper_initial(t.head)))
        if (a.tag.pos == "SUB") heads.push_back(std::move(a));
      if (heads.empty()) continue;
      std::vector<Cover> found;
      Cover cur;
      covers(prefix, 0, "", t.restore, cur, found);
      if (found.empty()) continue;
      const auto best = std::min_element(found.begin(), found.end(), [](const Cover& a, const Cover& b) {
        if (a.lemmas.size() != b.lemmas.size()) return a.lemmas.size() < b.lemmas.size();
        return std::tie(a.lemmas, a.pieces) < std::tie(b.lemmas, b.pieces);
      });
      // Written pieces keep the input's capitalization.
      auto pieces = best->pieces;
      pieces.front() = text.substr(0, pieces.front().size());
      for (const auto& h : heads) {
        Analysis a;
        std::string head_lemma = utf8::lower_initial(h.lemma);
        if (!t.restore.empty() && utf8::starts_with(head_lemma, t.restore)) head_lemma.erase(0, t.restore.size());
        a.lemma = text.substr(0, off) + head_lemma;
        a.tag = h.tag;
        a.segments = best->lemmas;
        a.segments.push_back(h.lemma);
        a.pieces = pieces;
        a.pieces.push_back(head_text);
        a.links = best->links;
        out.push_back(std::move(a));
      }
    }
    if (!out.empty()) break;
  }
  sort_unique(out);
  return out;
}

// ---------------------------------------------------------------- suffixes

namespace {

void count_form(SuffixModel& m, const std::string& form, const Tag& tag, bool open_class_only, double weight = 1.0) {
  if (is_punctuation(tag)) return;
  if (open_class_only && !is_open_class(tag)) return;
  auto key = format_tag(to_kind(tag, m.kind));
  std::size_t n = utf8::length(form);
  for (std::size_t len = 1; len <= std::min(m.max_len, n ? n - 1 : 0); ++len) {
    std::string suffix(utf8::last_chars(form, len));
    m.counts[suffix][key] += weight;
    m.totals[suffix] += weight;
  }
  if (utf8::is_upper_initial(form)) {
    m.counts[SuffixModel::kCapKey][key] += weight;
    m.totals[SuffixModel::kCapKey] += weight;
  }
}

}  // namespace

SuffixModel train_suffix_model(const std::vector<std::pair<std::string, Tag>>& data, TagSetKind kind,
                               std::size_t max_len, bool open_class_only) {
  SuffixModel m;
  m.kind = kind;
  m.max_len = max_len;
  for (const auto& [form, tag] : data) count_form(m, form, tag, open_class_only);
  return m;
}

SuffixModel train_suffix_model(const FullFormLexicon& ffl, TagSetKind kind, std::size_t max_len,
                               bool open_class_only) {
  SuffixModel m;
  m.kind = kind;
  m.max_len = max_len;
  // Each surface counts once, split evenly over its readings.
  for (const auto& [surface, readings] : ffl)
    for (const auto& [lemma, tag] : readings)
      count_form(m, surface, parse_tag(tag, TagSetKind::large), open_class_only,
                 1.0 / static_cast<double>(readings.size()));
  return m;
}

const std::vector<Tag>& open_class_tags(TagSetKind kind) {
  static const auto build = [](TagSetKind k) {
    std::vector<Tag> out;
    for (const auto& t : TagSet::get(k).members())
      if (is_open_class(t)) out.push_back(t);
    return out;
  };
  static const std::vector<Tag> small = build(TagSetKind::small);
  static const std::vector<Tag> large = build(TagSetKind::large);
  return kind == TagSetKind::small ? small : large;
}

std::vector<std::pair<Tag, double>> guess_unknown(std::string_view form, const SuffixModel& model, double support) {
  std::map<std::string, double> dist;
  auto add = [&](const std::string& key, double weight) {
    const auto& c = model.counts.at(key);
    double total = model.totals.at(key);
    for (const auto& [tag, n] : c) dist[tag] += weight * n / total;
  };

  std::string found;
  std::size_t n = utf8::length(form);
  for (std::size_t len = std::min(model.max_len, n ? n - 1 : 0); len >= 1; --len) {
    std::string suffix(utf8::last_chars(form, len));
    auto it = model.totals.find(suffix);
    if (it != model.totals.end() && it->second >= support) {
      found = suffix;
      break;
    }
  }
  bool cap = utf8::is_upper_initial(form) && model.totals.count(SuffixModel::kCapKey);
  if (!found.empty() && cap) {
    add(found, 0.5);
    add(SuffixModel::kCapKey, 0.5);
  } else if (!found.empty()) {
    add(found, 1.0);
  } else if (cap) {
    add(SuffixModel::kCapKey, 1.0);
  }

  std::vector<std::pair<Tag, double>> out;
  if (dist.empty()) {
    const auto& open = open_class_tags(model.kind);
    for (const auto& t : open) out.emplace_back(t, 1.0 / static_cast<double>(open.size()));
  } else {
    double sum = 0;
    for (const auto& [tag, p] : dist) sum += p;
    for (const auto& [tag, p] : dist) out.emplace_back(parse_tag(tag, model.kind), p / sum);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

}  // namespace morphy

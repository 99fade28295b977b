#include "morphy/dialogue.hpp"

#include <algorithm>

#include "morphy/inflection.hpp"
#include "morphy/tagset.hpp"
#include "morphy/utf8.hpp"

namespace morphy {

namespace {

using Facts = std::map<std::string, std::string>;

constexpr std::string_view kSeparable[] = {"zurück", "vorbei", "heraus", "weg", "nach", "auf", "aus", "ein",
                                           "mit", "vor", "zu", "ab", "an"};
constexpr std::string_view kInseparable[] = {"miss", "ver", "zer", "ent", "be", "er", "ge"};

std::string fact(const Facts& f, const std::string& key) {
  auto it = f.find(key);
  return it == f.end() ? "" : it->second;
}

bool has(const Facts& f, const std::string& key) { return f.count(key) > 0; }

Alternative alt(std::string label, std::string surface, Facts effect) {
  return Alternative{std::move(label), std::move(surface), std::move(effect)};
}

// Rightmost vowel group: (byte offset, text).
std::pair<std::size_t, std::string> vowel_group(const std::string& s) {
  auto cs = utf8::chars(s);
  std::size_t end = cs.size();
  while (end > 0 && !utf8::is_vowel(cs[end - 1])) --end;
  if (end == 0) return {std::string::npos, ""};
  std::size_t begin = end - 1;
  while (begin > 0 && utf8::is_vowel(cs[begin - 1])) --begin;
  std::string group;
  for (std::size_t i = begin; i < end; ++i) group += cs[i];
  return {utf8::offset_of(s, begin), group};
}

std::string replace_vowel(const std::string& s, const std::string& v) {
  auto [off, group] = vowel_group(s);
  if (off == std::string::npos) return s;
  return s.substr(0, off) + v + s.substr(off + group.size());
}

bool umlautable(const std::string& s) { return apply_umlaut(s) != s; }

void push_unique(std::vector<Alternative>& alts, Alternative a) {
  for (const auto& x : alts)
    if (x.label == a.label) return;
  alts.push_back(std::move(a));
}

// ------------------------------------------------------------------- verbs

struct VerbParts {
  std::string sep;   // separable prefix, "" if none
  std::string body;  // infinitive without the separable prefix
  std::string stem;  // body's stem
};

VerbParts verb_parts(const DialogueState& s) {
  VerbParts p;
  p.sep = fact(s.facts, "sep");
  p.body = s.root.substr(p.sep.size());
  p.stem = verb_stem(p.body, false);
  return p;
}

std::string inseparable_prefix(const std::string& body) {
  for (auto p : kInseparable)
    if (utf8::starts_with(body, p) && utf8::length(body) > p.size() + 3) return std::string(p);
  return "";
}

std::optional<Question> verb_question(const DialogueState& s) {
  const auto& f = s.facts;
  if (!has(f, "prefix_asked")) {
    for (auto p : kSeparable) {
      if (utf8::starts_with(s.root, p) && utf8::length(s.root) > p.size() + 3) {
        std::string rest = s.root.substr(p.size());
        return Question{"prefix", "Wie lautet der Infinitiv mit zu?",
                        {alt(std::string(p) + "zu" + rest, std::string(p) + "zu" + rest,
                             {{"prefix_asked", "1"}, {"sep", std::string(p)}}),
                         alt("zu " + s.root, "", {{"prefix_asked", "1"}})}};
      }
    }
  }
  auto vp = verb_parts(s);
  if (!has(f, "weak"))
    return Question{"weak", "Wird das Verb schwach konjugiert?",
                    {alt("Ja", "", {{"weak", "1"}}), alt("Nein", "", {{"weak", "0"}})}};

  const std::string& sep = vp.sep;
  if (fact(f, "weak") == "1") {
    if (!has(f, "class")) {
      if (utf8::ends_with(vp.body, "ern") || utf8::ends_with(vp.body, "eln")) return std::nullopt;
      Question q{"pres2", "Wie lautet die 2. Person Singular Präsens?", {}};
      if (utf8::ends_with(vp.stem, "ss")) {
        std::string sharp = vp.stem.substr(0, vp.stem.size() - 2) + "ß";
        q.alternatives.push_back(alt("du " + sep + sharp + "t", sep + sharp + "t", {{"class", "v_weak_s"}, {"shift", "1"}}));
        q.alternatives.push_back(alt("du " + sep + vp.stem + "t", sep + vp.stem + "t", {{"class", "v_weak_s"}}));
      } else {
        for (auto [end, cls] : {std::pair{"st", "v_weak"}, {"est", "v_weak_t"}, {"t", "v_weak_s"}})
          push_unique(q.alternatives, alt("du " + sep + vp.stem + end, sep + vp.stem + end, {{"class", cls}}));
      }
      return q;
    }
    if (sep.empty() && !has(f, "ge")) {
      std::string stem = verb_stem(vp.body, fact(f, "shift") == "1");
      std::string part = join_with_s_shift(stem, fact(f, "class") == "v_weak_t" ? "et" : "t", false);
      return Question{"part2", "Wie lautet das Partizip des Verbs?",
                      {alt(part, part, {{"ge", "0"}}), alt("ge" + part, "ge" + part, {{"ge", "1"}})}};
    }
    return std::nullopt;
  }

  // Strong verbs: ablaut candidates by vowel substitution.
  auto [off, v] = vowel_group(vp.stem);
  if (!has(f, "pret_stem")) {
    Question q{"pret", "Wie lautet die 1. Person Singular Präteritum?", {}};
    for (std::string cand : {"a", "ie", "i", "o", "u"}) {
      if (cand == v) continue;
      std::string pret = replace_vowel(vp.stem, cand);
      push_unique(q.alternatives, alt("ich " + sep + pret, sep + pret, {{"pret_stem", pret}}));
    }
    return q;
  }
  if (!has(f, "part2")) {
    Question q{"part2", "Wie lautet das Partizip des Verbs?", {}};
    std::string insep = sep.empty() ? inseparable_prefix(vp.body) : "";
    std::vector<std::string> vowels{v, "o", "a", "u", "ie", "i", "e"};
    for (const auto& cand : vowels) {
      std::string core = replace_vowel(vp.stem, cand) + "en";
      if (!insep.empty())
        push_unique(q.alternatives, alt(core, core, {{"part2", core}, {"ge", "0"}, {"insep", insep}}));
      push_unique(q.alternatives, alt(sep + "ge" + core, sep + "ge" + core, {{"part2", "ge" + core}, {"ge", "1"}}));
      if (q.alternatives.size() >= 8) break;
    }
    return q;
  }
  if (!has(f, "class")) {
    bool t_stem = utf8::ends_with(vp.stem, "t") || utf8::ends_with(vp.stem, "d");
    std::string end = t_stem ? "est" : "st";
    std::string cls = t_stem ? "v_strong_t" : "v_strong";
    Question q{"pres2", "Wie lautet die 2. Person Singular Präsens?", {}};
    q.alternatives.push_back(alt("du " + sep + vp.stem + end, sep + vp.stem + end, {{"class", cls}}));
    if (umlautable(vp.stem)) {
      std::string u = apply_umlaut(vp.stem);
      q.alternatives.push_back(alt("du " + sep + u + end, sep + u + end, {{"class", cls}, {"umlaut", "1"}}));
    }
    if (v == "e") {
      for (std::string rep : {"i", "ie"}) {
        std::string p = replace_vowel(vp.stem, rep);
        q.alternatives.push_back(alt("du " + sep + p + end, sep + p + end, {{"class", cls}, {"pres23", p}}));
      }
    }
    return q;
  }
  return std::nullopt;
}

LexiconEntry verb_entry(const DialogueState& s) {
  const auto& f = s.facts;
  auto vp = verb_parts(s);
  LexiconEntry e;
  e.pos = "VER";
  e.class_id = fact(f, "class");
  e.root = vp.body;
  if (!vp.sep.empty()) {
    e.prefix = vp.sep;
    e.prefix_kind = PrefixKind::separable;
  }
  if (fact(f, "shift") == "1") e.set(EntryFlag::ss_sharp_shift);
  if (fact(f, "umlaut") == "1") e.set(EntryFlag::umlaut_in_paradigm);

  std::string insep = fact(f, "insep");
  if (fact(f, "weak") == "1" && fact(f, "ge") == "0") {
    insep = inseparable_prefix(vp.body);
    if (insep.empty()) e.set(EntryFlag::no_ge_participle);
  }
  if (fact(f, "weak") == "0" && fact(f, "ge") == "0" && insep.empty()) e.set(EntryFlag::no_ge_participle);
  auto strip = [&](std::string form) {
    if (!insep.empty() && utf8::starts_with(form, insep)) form.erase(0, insep.size());
    return form;
  };
  if (!insep.empty()) {
    e.prefix = insep;
    e.prefix_kind = PrefixKind::inseparable;
    e.root = strip(vp.body);
  }
  if (fact(f, "weak") == "0") {
    e.overrides["pret_stem"] = strip(fact(f, "pret_stem"));
    e.overrides["part2"] = strip(fact(f, "part2"));
    if (has(f, "pres23")) {
      auto p = strip(fact(f, "pres23"));
      e.overrides["pres23_stem"] = p;
      e.overrides["imp_sg"] = p;
      e.overrides["imp_sg2"] = p;
    }
  }
  return e;
}

// ------------------------------------------------------------------- nouns

std::optional<Question> noun_question(const DialogueState& s) {
  const auto& f = s.facts;
  const std::string& root = s.draft.root;
  if (!has(f, "gender"))
    return Question{"gender", "Welches Genus hat das Substantiv?",
                    {alt("der " + root, root, {{"gender", "MAS"}}), alt("die " + root, root, {{"gender", "FEM"}}),
                     alt("das " + root, root, {{"gender", "NEU"}})}};
  const bool fem = fact(f, "gender") == "FEM";
  if (!has(f, "plural")) {
    Question q{"plural", "Wie lautet der Nominativ Plural?", {}};
    const bool e_final = utf8::ends_with(root, "e");
    const bool el_er = utf8::ends_with(root, "el") || utf8::ends_with(root, "er");
    const bool sharp = utf8::ends_with(root, "ß");
    auto add = [&](const std::string& ending, const std::string& family, bool uml) {
      std::string base = uml ? apply_umlaut(root) : root;
      if (uml && base == root) return;
      Facts eff{{"plural", family}};
      if (uml) eff["umlaut"] = "1";
      std::string plain = base + ending;
      if (sharp && !ending.empty() && utf8::is_vowel(utf8::chars(ending).front())) {
        auto shifted = join_with_s_shift(base, ending, true);
        auto with_shift = eff;
        with_shift["shift"] = "1";
        push_unique(q.alternatives, alt("die " + shifted, shifted, with_shift));
      }
      push_unique(q.alternatives, alt("die " + plain, plain, eff));
    };
    if (!e_final) {
      add("e", "e", false);
      add("e", "e", true);
      if (!fem) {
        add("er", "er", false);
        add("er", "er", true);
      }
    }
    if (e_final || el_er) add("n", "n", false);
    else add("en", "en", false);
    add("", "0", false);
    add("", "0", true);
    add("s", "s", false);
    if (fem && utf8::ends_with(root, "in")) add("nen", "nen", false);
    q.alternatives.push_back(alt("(kein Plural)", "", {{"plural", "none"}}));
    return q;
  }
  const std::string family = fact(f, "plural");
  if (fem || has(f, "genitive")) return std::nullopt;
  const bool shift = fact(f, "shift") == "1";
  const std::string es = join_with_s_shift(root, "es", shift);
  const bool sibilant = utf8::ends_with(root, "s") || utf8::ends_with(root, "ß") || utf8::ends_with(root, "z") ||
                        utf8::ends_with(root, "x");
  if ((family == "e" || family == "er") && !sibilant)
    return Question{"genitive", "Wie lautet der Genitiv Singular?",
                    {alt("des " + es, es, {{"genitive", "es"}}),
                     alt("des " + es + " / des " + root + "s", root + "s", {{"genitive", "es_s"}})}};
  if ((family == "en" || family == "n") && fact(f, "gender") == "MAS") {
    std::string weak = join_with_s_shift(root, family, shift);
    std::string strong = family == "en" ? es : root + "s";
    return Question{"genitive", "Wie lautet der Genitiv Singular?",
                    {alt("des " + weak, weak, {{"genitive", "weak"}}), alt("des " + strong, strong, {{"genitive", "strong"}})}};
  }
  return std::nullopt;
}

LexiconEntry noun_entry(const DialogueState& s) {
  const auto& f = s.facts;
  LexiconEntry e = s.draft;
  e.gender = fact(f, "gender");
  const bool fem = *e.gender == "FEM";
  const std::string family = fact(f, "plural");
  const std::string gen = fact(f, "genitive");
  if (fem) {
    static const std::map<std::string, std::string> fem_class{{"e", "n_e_fem"}, {"en", "n_en_fem"}, {"n", "n_n_fem"},
                                                              {"0", "n_0_fem"}, {"nen", "n_nen_fem"}, {"s", "n_s_fem"},
                                                              {"none", "n_sg_fem"}};
    e.class_id = fem_class.at(family);
  } else if (family == "e") {
    e.class_id = gen == "es_s" ? "n_e_s" : "n_e";
  } else if (family == "er") {
    e.class_id = gen == "es_s" ? "n_er_s" : "n_er";
  } else if (family == "en") {
    e.class_id = gen == "weak" ? "n_weak_en" : "n_en_s";
  } else if (family == "n") {
    e.class_id = gen == "weak" ? "n_weak_n" : "n_n_s";
  } else if (family == "0") {
    e.class_id = utf8::ends_with(e.root, "en") ? "n_0n" : "n_0";
  } else if (family == "s") {
    e.class_id = "n_s";
  } else {
    e.class_id = "n_sg";
  }
  if (fact(f, "umlaut") == "1") e.set(EntryFlag::umlaut_in_paradigm);
  if (fact(f, "shift") == "1") e.set(EntryFlag::ss_sharp_shift);
  return e;
}

// -------------------------------------------------------------- adjectives

std::optional<Question> adjective_question(const DialogueState& s) {
  const auto& f = s.facts;
  const std::string& root = s.draft.root;
  if (!has(f, "class")) {
    Question q{"comparative", "Wie lautet der Komparativ?", {}};
    if (utf8::ends_with(root, "e")) {
      q.alternatives.push_back(alt(root + "r", root + "r", {{"class", "a_e"}}));
    } else {
      if (utf8::ends_with(root, "el") || utf8::ends_with(root, "er")) {
        std::string elided = root.substr(0, root.size() - 2) + root.substr(root.size() - 1);
        q.alternatives.push_back(alt(elided + "er", elided + "er", {{"class", "a_el"}}));
      }
      q.alternatives.push_back(alt(root + "er", root + "er", {{"class", "a_st?"}}));
      if (umlautable(root)) {
        auto u = apply_umlaut(root);
        q.alternatives.push_back(alt(u + "er", u + "er", {{"class", "a_st?"}, {"umlaut", "1"}}));
      }
    }
    return q;
  }
  if (fact(f, "class") == "a_st?") {
    std::string base = fact(f, "umlaut") == "1" ? apply_umlaut(root) : root;
    return Question{"superlative", "Wie lautet der Superlativ?",
                    {alt("am " + base + "sten", base + "sten", {{"class", "a_st"}}),
                     alt("am " + base + "esten", base + "esten", {{"class", "a_est"}})}};
  }
  return std::nullopt;
}

LexiconEntry adjective_entry(const DialogueState& s) {
  LexiconEntry e = s.draft;
  e.class_id = fact(s.facts, "class");
  if (fact(s.facts, "umlaut") == "1") e.set(EntryFlag::umlaut_in_paradigm);
  return e;
}

std::optional<Question> proper_name_question(const DialogueState& s) {
  if (has(s.facts, "gender")) return std::nullopt;
  const std::string& root = s.draft.root;
  return Question{"gender", "Welches Genus hat der Name?",
                  {alt("der " + root, root, {{"gender", "MAS"}}), alt("die " + root, root, {{"gender", "FEM"}}),
                   alt("das " + root, root, {{"gender", "NEU"}})}};
}

// Moves the state forward: the next question, or the finished entry.
void advance(DialogueState& s, const ParadigmSet& classes) {
  std::optional<Question> q;
  if (s.pos_track == "VER") {
    q = verb_question(s);
    if (!q) {
      if (!has(s.facts, "class")) s.facts["class"] = "v_weak_ern";
      s.draft = verb_entry(s);
    }
  } else if (s.pos_track == "SUB") {
    q = noun_question(s);
    if (!q) s.draft = noun_entry(s);
  } else if (s.pos_track == "ADJ") {
    q = adjective_question(s);
    if (!q) s.draft = adjective_entry(s);
  } else if (s.pos_track == "EIG") {
    q = proper_name_question(s);
    if (!q) {
      s.draft.gender = fact(s.facts, "gender");
      s.draft.class_id = "eig";
    }
  }
  s.pending = std::move(q);
  if (!s.pending) validate_entry(s.draft, &classes);
}

}  // namespace

DialogueState start_classification(std::string_view pos, std::string_view root, const ParadigmSet& classes) {
  std::string r(utf8::trim(root));
  if (r.empty()) throw DialogueError("empty root");
  DialogueState s;
  s.pos_track = std::string(pos);
  s.root = r;
  s.draft.pos = std::string(pos);
  if (pos == "VER") {
    if (!utf8::ends_with(r, "n") || utf8::length(r) < 3) throw DialogueError("expected an infinitive, got '" + r + "'");
    s.draft.root = r;
  } else if (pos == "SUB" || pos == "EIG") {
    s.draft.root = utf8::upper_initial(r);
  } else if (pos == "ADJ") {
    s.draft.root = utf8::to_lower(r);
  } else if (TagSet::get(TagSetKind::large).contains(pos)) {
    s.draft.root = r;
    s.draft.class_id = "uninfl";  // featureless tag: the form itself
  } else if (pos == "PRO POS") {
    s.draft.root = r;
    s.draft.class_id = "einwort";
  } else if (pos == "PRO DEM" || pos == "PRO IND" || pos == "PRO INR" || pos == "PRO REL") {
    s.draft.root = r;
    s.draft.class_id = "derwort";
  } else {
    throw DialogueError("no classification dialogue for part of speech '" + std::string(pos) + "'");
  }
  advance(s, classes);
  return s;
}

DialogueState answer(const DialogueState& state, int choice, const ParadigmSet& classes) {
  if (state.complete()) throw DialogueError("classification already complete");
  const auto& q = *state.pending;
  if (choice < 1 || static_cast<std::size_t>(choice) > q.alternatives.size())
    throw DialogueError("choice " + std::to_string(choice) + " out of range 1.." + std::to_string(q.alternatives.size()));
  DialogueState next = state;
  const auto& a = q.alternatives[static_cast<std::size_t>(choice - 1)];
  next.answered.push_back({q.id, choice, a.surface});
  for (const auto& [k, v] : a.effect) next.facts[k] = v;
  advance(next, classes);
  return next;
}

std::string format_question(const Question& q, int number) {
  std::string out = std::to_string(number) + ". " + q.text + "\n";
  for (std::size_t i = 0; i < q.alternatives.size(); ++i)
    out += "   " + std::to_string(i + 1) + ": " + q.alternatives[i].label + "\n";
  return out;
}

}  // namespace morphy

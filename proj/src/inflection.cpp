#include "morphy/inflection.hpp"

#include <algorithm>

#include "morphy/utf8.hpp"

namespace morphy {

namespace {

std::string mutate(std::string_view ch) {
  if (ch == "a") return "ä";
  if (ch == "o") return "ö";
  if (ch == "u") return "ü";
  if (ch == "A") return "Ä";
  if (ch == "O") return "Ö";
  if (ch == "U") return "Ü";
  return std::string(ch);
}

bool mutable_vowel(std::string_view ch) {
  return ch == "a" || ch == "o" || ch == "u" || ch == "A" || ch == "O" || ch == "U";
}

std::string elide_last_e(const std::string& root) {
  auto pos = root.rfind('e');
  if (pos == std::string::npos || pos == 0) return root;
  return root.substr(0, pos) + root.substr(pos + 1);
}

}  // namespace

std::string verb_stem(std::string_view infinitive, bool shift_enabled) {
  std::string stem(infinitive);
  if (utf8::ends_with(stem, "en") && stem.size() > 2) {
    stem.resize(stem.size() - 2);
  } else if (utf8::ends_with(stem, "n") && stem.size() > 1) {
    stem.pop_back();
  }
  if (shift_enabled && utf8::ends_with(stem, "ss")) stem.replace(stem.size() - 2, 2, "ß");
  return stem;
}

namespace {

std::string expand_template(const std::string& tmpl, const LexiconEntry& e) {
  std::vector<std::string> out;
  for (const auto& tok : utf8::split(tmpl, ' ')) {
    if (tok == "@P") {
      out.push_back(e.pos);
    } else if (tok == "@G") {
      if (!e.gender) throw InflectionError("class " + e.class_id + " needs a gender for '" + e.root + "'");
      out.push_back(*e.gender);
    } else {
      out.push_back(tok);
    }
  }
  return utf8::join(out, " ");
}

class Generator {
 public:
  Generator(const LexiconEntry& e, const ParadigmSet& classes) : e_(e) {
    table_ = classes.find(e.class_id);
    if (!table_) throw InflectionError("missing class '" + e.class_id + "' for entry '" + e.root + "'");
    for (const auto& [key, form] : e.overrides)
      if (!classes.accepts_override(e.class_id, key))
        throw InflectionError("override for nonexistent slot '" + key + "' in class " + e.class_id);
    shift_ = e.has(EntryFlag::ss_sharp_shift);
    base_ = e.is_verb() ? verb_stem(e.root, shift_) : e.root;
  }

  std::string citation() const {
    if (e_.is_verb()) {
      const auto* inf = table_->find("inf");
      std::string simplex = inf ? simplex_form(*inf) : e_.root;
      switch (e_.prefix_kind) {
        case PrefixKind::separable: return "(" + e_.prefix + ")" + simplex;
        case PrefixKind::inseparable: return e_.prefix + "-" + simplex;
        case PrefixKind::none: return simplex;
      }
    }
    if (table_->slots.empty()) return e_.root;
    return slot_surface(table_->slots.front()).first;
  }

  FormTable run() const {
    FormTable out;
    std::string lemma = citation();
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& slot : table_->slots) {
      if (slot.marker == Marker::zu && e_.prefix_kind != PrefixKind::separable) continue;
      auto [surface, suffix] = slot_surface(slot);
      Tag tag;
      try {
        tag = parse_tag(expand_template(slot.tag_template, e_), TagSetKind::large);
      } catch (const TagError& err) {
        throw InflectionError("class " + e_.class_id + " slot " + slot.id + ": " + err.what());
      }
      auto tag_str = format_tag(tag);
      if (!seen.emplace(surface, tag_str).second) continue;
      std::string row_lemma = lemma;
      if (slot.transform == StemTransform::part2_stem || slot.transform == StemTransform::pa1_stem)
        row_lemma = stem(slot) + " (" + lemma + ")";
      out.rows.push_back(FormRow{surface, std::move(tag), row_lemma, slot.id, suffix});
    }
    return out;
  }

 private:
  // Form of the slot without any verb prefix.
  std::string simplex_form(const ParadigmSlot& slot) const {
    if (const auto* o = e_.override_for(slot.id)) return *o;
    if (slot.transform == StemTransform::fixed) return slot.suffix;
    return join_with_s_shift(stem(slot), slot.suffix, shift_);
  }

  std::string stem(const ParadigmSlot& slot) const {
    const std::string& root = base_;
    auto over = [&](std::string_view key) -> const std::string* { return e_.override_for(key); };
    switch (slot.transform) {
      case StemTransform::none: return root;
      case StemTransform::umlaut: return e_.has(EntryFlag::umlaut_in_paradigm) ? apply_umlaut(root) : root;
      case StemTransform::pret_stem: return over("pret_stem") ? *over("pret_stem") : root;
      case StemTransform::pret_umlaut: return apply_umlaut(over("pret_stem") ? *over("pret_stem") : root);
      case StemTransform::pres23_stem:
        if (over("pres23_stem")) return *over("pres23_stem");
        return e_.has(EntryFlag::umlaut_in_paradigm) ? apply_umlaut(root) : root;
      case StemTransform::comp_stem:
        if (over("comp_stem")) return *over("comp_stem");
        return e_.has(EntryFlag::umlaut_in_paradigm) ? apply_umlaut(root) : root;
      case StemTransform::elide_e: return elide_last_e(root);
      case StemTransform::part2_stem: {
        const auto* p = table_->find("part2");
        if (!p) throw InflectionError("class " + e_.class_id + " has no part2 slot");
        return slot_surface(*p).first;
      }
      case StemTransform::pa1_stem: {
        const auto* p = table_->find("inf");
        if (!p) throw InflectionError("class " + e_.class_id + " has no inf slot");
        return slot_surface(*p).first + "d";
      }
      case StemTransform::fixed: return "";
    }
    return root;
  }

  // (surface, suffix the surface ends with)
  std::pair<std::string, std::string> slot_surface(const ParadigmSlot& slot) const {
    std::string surface;
    std::string suffix;
    if (const auto* o = e_.override_for(slot.id)) {
      std::string core = *o;
      if (slot.marker == Marker::ge) {
        if (utf8::starts_with(core, "ge") && !e_.has(EntryFlag::no_ge_participle)) core = core.substr(2);
        surface = mark_participle(core, e_, Marker::ge);
      } else if (slot.marker == Marker::zu) {
        surface = mark_participle(core, e_, Marker::zu);
      } else {
        surface = e_.is_verb() ? e_.prefix + core : core;
      }
    } else if (slot.transform == StemTransform::fixed) {
      surface = slot.suffix;
    } else {
      std::string body = join_with_s_shift(stem(slot), slot.suffix, shift_);
      suffix = slot.suffix;
      if (slot.marker != Marker::none) {
        surface = mark_participle(body, e_, slot.marker);
      } else if (slot.transform == StemTransform::part2_stem || slot.transform == StemTransform::pa1_stem) {
        surface = body;
      } else {
        surface = e_.is_verb() ? e_.prefix + body : body;
      }
    }
    if (e_.is_noun()) surface = utf8::upper_initial(surface);
    return {surface, suffix};
  }

  const LexiconEntry& e_;
  const ParadigmTable* table_ = nullptr;
  bool shift_ = false;
  std::string base_;
};

}  // namespace

std::string apply_umlaut(std::string_view stem) {
  auto cs = utf8::chars(stem);
  for (std::size_t i = cs.size(); i-- > 0;) {
    if ((cs[i] == "u" || cs[i] == "U") && i > 0 && (cs[i - 1] == "a" || cs[i - 1] == "A")) {
      cs[i - 1] = mutate(cs[i - 1]);
      return utf8::join(cs, "");
    }
    if (mutable_vowel(cs[i])) {
      cs[i] = mutate(cs[i]);
      return utf8::join(cs, "");
    }
  }
  return std::string(stem);
}

std::string join_with_s_shift(std::string_view stem, std::string_view suffix, bool shift_enabled) {
  if (shift_enabled && utf8::ends_with(stem, "ß") && !suffix.empty()) {
    auto first = utf8::chars(suffix).front();
    static constexpr std::string_view kVowels[] = {"a", "e", "i", "o", "u", "ä", "ö", "ü"};
    if (std::find(std::begin(kVowels), std::end(kVowels), first) != std::end(kVowels))
      return std::string(stem.substr(0, stem.size() - std::string_view("ß").size())) + "ss" + std::string(suffix);
  }
  return std::string(stem) + std::string(suffix);
}

std::string mark_participle(std::string_view stem_form, const LexiconEntry& entry, Marker marker) {
  if (!entry.is_verb()) throw InflectionError("participle marker on non-verb '" + entry.root + "'");
  std::string form(stem_form);
  const bool no_ge = entry.has(EntryFlag::no_ge_participle);
  switch (marker) {
    case Marker::none: return entry.prefix + form;
    case Marker::ge:
      switch (entry.prefix_kind) {
        case PrefixKind::separable: return entry.prefix + (no_ge ? "" : "ge") + form;
        case PrefixKind::inseparable: return entry.prefix + form;
        case PrefixKind::none: return no_ge ? form : "ge" + form;
      }
      break;
    case Marker::zu:
      if (entry.prefix_kind == PrefixKind::separable) return entry.prefix + "zu" + form;
      return entry.prefix + form;
  }
  return form;
}

std::string citation_form(const LexiconEntry& entry, const ParadigmSet& classes) {
  return Generator(entry, classes).citation();
}

FormTable generate_forms(const LexiconEntry& entry, const ParadigmSet& classes) {
  return Generator(entry, classes).run();
}

FullFormLexicon expand_full_form_lexicon(const Lexicon& lex, const ParadigmSet& classes) {
  FullFormLexicon out;
  for (const auto& e : lex.entries()) {
    FormTable table;
    try {
      table = generate_forms(e, classes);
    } catch (const InflectionError& err) {
      throw InflectionError("entry '" + format_entry(e) + "': " + err.what());
    }
    for (const auto& row : table.rows) out[row.surface].emplace(row.lemma, format_tag(row.tag));
  }
  return out;
}

std::string export_full_form_lexicon(const FullFormLexicon& ffl) {
  std::string out;
  for (const auto& [surface, readings] : ffl)
    for (const auto& [lemma, tag] : readings) out += surface + "\t" + lemma + "\t" + tag + "\n";
  return out;
}

}  // namespace morphy

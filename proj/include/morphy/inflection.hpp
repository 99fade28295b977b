#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morphy/lexicon.hpp"
#include "morphy/paradigm.hpp"
#include "morphy/tagset.hpp"

namespace morphy {

class InflectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mutates the rightmost au/a/o/u of the stem (au before a and u).
std::string apply_umlaut(std::string_view stem);

/// Concatenates, turning a final "ß" into "ss" before a vowel-initial suffix
/// when `shift_enabled` (old orthography: Fluß, Flüsse).
std::string join_with_s_shift(std::string_view stem, std::string_view suffix, bool shift_enabled);

/// Inflection stem of a verb root given as its simplex infinitive:
/// "nehmen" -> "nehm", "flattern" -> "flatter", "küssen" -> "küß" (with the shift).
std::string verb_stem(std::string_view infinitive, bool shift_enabled);

/// Attaches the participle/infinitive marker and the entry's verb prefix.
/// ge: "ge" prefix, infixed after a separable prefix, absent for inseparable
/// prefixes and no_ge_participle verbs. zu: infixed after a separable prefix;
/// other verbs get their plain (prefixed) form. Throws for non-verbs.
std::string mark_participle(std::string_view stem_form, const LexiconEntry& entry, Marker marker);

struct FormRow {
  std::string surface;
  Tag tag;
  std::string lemma;
  std::string slot_id;
  std::string suffix;  // slot suffix the surface ends with ("" for fixed or overridden slots)
};

struct FormTable {
  std::vector<FormRow> rows;
};

/// Citation form: infinitive for verbs ("(ein)nehmen", "ver-spielen"), the
/// class's first slot otherwise.
std::string citation_form(const LexiconEntry& entry, const ParadigmSet& classes);

FormTable generate_forms(const LexiconEntry& entry, const ParadigmSet& classes);

/// surface -> {(lemma, canonical large tag)}
using FullFormLexicon = std::map<std::string, std::set<std::pair<std::string, std::string>>>;

FullFormLexicon expand_full_form_lexicon(const Lexicon& lex, const ParadigmSet& classes);

/// `surface TAB lemma TAB tag` lines in sorted order.
std::string export_full_form_lexicon(const FullFormLexicon& ffl);

}  // namespace morphy

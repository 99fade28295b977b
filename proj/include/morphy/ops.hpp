#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "morphy/analysis.hpp"
#include "morphy/eval.hpp"
#include "morphy/tagger.hpp"

// Operations shared by the command line and the HTTP service, so both
// produce the same results for the same input.
namespace morphy {

struct TokenReadings {
  std::string surface;
  std::vector<Analysis> readings;  // empty: unknown word
};

/// Tokenizes running text; sentence-initial tokens get the lowercase retry.
std::vector<TokenReadings> analyze_text(const Analyzer& analyzer, std::string_view text);

/// `surface TAB lemma TAB tag`, plus `TAB seg+seg` for compounds; unknown
/// words print `surface TAB ?`.
std::string format_readings(const std::vector<TokenReadings>& tokens);

std::vector<TaggedSentence> tag_text(const Tagger& tagger, Algorithm algo, std::string_view text,
                                     bool assume_boundaries = true);

/// `surface TAB tag` lines, a blank line after each sentence.
std::string format_tagged(const std::vector<TaggedSentence>& sentences);

/// `surface TAB tag TAB slot` lines.
std::string format_forms(const FormTable& table);

/// Adds an entry to the lexicon file (created when missing) with an atomic
/// rewrite. Returns false when an identical entry is already there.
bool add_entry_to_file(const std::string& lexicon_path, const LexiconEntry& entry, const ParadigmSet& classes);

}  // namespace morphy

#pragma once

#include <string>

#include "morphy/analysis.hpp"
#include "morphy/corpus.hpp"
#include "morphy/inflection.hpp"
#include "morphy/lexicon.hpp"
#include "morphy/paradigm.hpp"

// Shipped seed data, loaded once per test binary.
namespace seed {

inline const std::string kDataDir = MORPHY_TEST_DATA_DIR;

inline const morphy::ParadigmSet& classes() {
  static const auto c = morphy::ParadigmSet::load_file(kDataDir + "/paradigms.tsv");
  return c;
}

inline const morphy::Lexicon& lexicon() {
  static const auto l = morphy::load_lexicon_file(kDataDir + "/lexicon.tsv", &classes());
  return l;
}

inline const morphy::Analyzer& analyzer() {
  static const morphy::Analyzer a(lexicon(), classes());
  return a;
}

inline const morphy::AnnotatedCorpus& desk_corpus() {
  static const auto c = morphy::read_corpus_file(kDataDir + "/desk_corpus.tsv");
  return c;
}

inline morphy::LexiconEntry entry(const std::string& line) { return morphy::parse_entry(line, &classes()); }

}  // namespace seed

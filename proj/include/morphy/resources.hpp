#pragma once

#include <memory>
#include <string>

#include "morphy/analysis.hpp"
#include "morphy/lexicon.hpp"
#include "morphy/paradigm.hpp"

namespace morphy {

/// `flag` when non-empty, else the environment variable `env` when set and
/// non-empty, else `fallback`.
std::string resolve_setting(const std::string& flag, const char* env, const std::string& fallback);

/// Data directory baked in at build time (the repository's data/).
std::string compiled_data_dir();

struct ResourcePaths {
  std::string data_dir;
  std::string paradigms;  // <data_dir>/paradigms.tsv
  std::string lexicon;    // --lexicon, MORPHY_LEXICON, <data_dir>/lexicon.tsv
  std::string models;     // --models, MORPHY_MODELS, or empty
  std::string corpus;     // <data_dir>/desk_corpus.tsv
};

ResourcePaths resolve_paths(const std::string& data_dir_flag = "", const std::string& lexicon_flag = "",
                            const std::string& models_flag = "");

/// Inflection classes, a lexicon and the analyzer built over them, kept
/// together because the analyzer refers to the other two. Immutable once built.
struct Morphology {
  Morphology(std::shared_ptr<const ParadigmSet> classes, Lexicon lexicon);
  Morphology(const Morphology&) = delete;
  Morphology& operator=(const Morphology&) = delete;

  const std::shared_ptr<const ParadigmSet> classes;
  const Lexicon lexicon;
  const Analyzer analyzer;
};

std::shared_ptr<const Morphology> load_morphology(const std::string& paradigms_path, const std::string& lexicon_path);

}  // namespace morphy

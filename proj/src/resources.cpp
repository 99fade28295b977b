#include "morphy/resources.hpp"

#include <cstdlib>

#ifndef MORPHY_DEFAULT_DATA_DIR
#define MORPHY_DEFAULT_DATA_DIR "data"
#endif

namespace morphy {

std::string resolve_setting(const std::string& flag, const char* env, const std::string& fallback) {
  if (!flag.empty()) return flag;
  if (const char* v = std::getenv(env); v && *v) return v;
  return fallback;
}

std::string compiled_data_dir() { return MORPHY_DEFAULT_DATA_DIR; }

ResourcePaths resolve_paths(const std::string& data_dir_flag, const std::string& lexicon_flag,
                            const std::string& models_flag) {
  ResourcePaths p;
  p.data_dir = resolve_setting(data_dir_flag, "MORPHY_DATA_DIR", compiled_data_dir());
  p.paradigms = p.data_dir + "/paradigms.tsv";
  p.lexicon = resolve_setting(lexicon_flag, "MORPHY_LEXICON", p.data_dir + "/lexicon.tsv");
  p.models = resolve_setting(models_flag, "MORPHY_MODELS", "");
  p.corpus = p.data_dir + "/desk_corpus.tsv";
  return p;
}

Morphology::Morphology(std::shared_ptr<const ParadigmSet> c, Lexicon lex)
    : classes(std::move(c)), lexicon(std::move(lex)), analyzer(lexicon, *classes) {}

std::shared_ptr<const Morphology> load_morphology(const std::string& paradigms_path, const std::string& lexicon_path) {
  auto classes = std::make_shared<const ParadigmSet>(ParadigmSet::load_file(paradigms_path));
  auto lex = load_lexicon_file(lexicon_path, classes.get());
  return std::make_shared<const Morphology>(std::move(classes), std::move(lex));
}

}  // namespace morphy

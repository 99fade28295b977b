#include "morphy/ops.hpp"

#include <filesystem>

#include "morphy/io.hpp"
#include "morphy/utf8.hpp"

namespace morphy {

std::vector<TokenReadings> analyze_text(const Analyzer& analyzer, std::string_view text) {
  std::vector<TokenReadings> out;
  for (const auto& sentence : split_sentences(tokenize(text)))
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      const auto& w = sentence[i];
      out.push_back({w, i == 0 ? analyzer.analyze_initial(w) : analyzer.analyze(w)});
    }
  return out;
}

std::string format_readings(const std::vector<TokenReadings>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (t.readings.empty()) out += t.surface + "\t?\n";
    for (const auto& r : t.readings) {
      out += t.surface + "\t" + r.lemma + "\t" + format_tag(r.tag);
      if (r.segments.size() > 1) out += "\t" + utf8::join(r.segments, "+");
      out += "\n";
    }
  }
  return out;
}

std::vector<TaggedSentence> tag_text(const Tagger& tagger, Algorithm algo, std::string_view text,
                                     bool assume_boundaries) {
  std::vector<TaggedSentence> out;
  for (const auto& s : split_sentences(tokenize(text)))
    out.push_back(algo == Algorithm::church ? tagger.church(s) : tagger.varcontext(s, assume_boundaries));
  return out;
}

std::string format_tagged(const std::vector<TaggedSentence>& sentences) {
  std::string out;
  for (const auto& s : sentences) {
    for (const auto& [w, t] : s.tokens) out += w + "\t" + format_tag(t) + "\n";
    out += "\n";
  }
  return out;
}

std::string format_forms(const FormTable& table) {
  std::string out;
  for (const auto& r : table.rows) out += r.surface + "\t" + format_tag(r.tag) + "\t" + r.slot_id + "\n";
  return out;
}

bool add_entry_to_file(const std::string& lexicon_path, const LexiconEntry& entry, const ParadigmSet& classes) {
  validate_entry(entry, &classes);
  Lexicon lex;
  std::string header;  // leading comment lines survive the rewrite
  if (std::filesystem::exists(lexicon_path)) {
    const auto text = io::read_file(lexicon_path);
    lex = load_lexicon(text, &classes);
    for (const auto& line : utf8::split(text, '\n')) {
      if (line.empty() || line[0] != '#') break;
      header += line + "\n";
    }
  }
  if (!lex.add(entry)) return false;
  io::write_file_atomic(lexicon_path, header + save_lexicon(lex));
  return true;
}

}  // namespace morphy

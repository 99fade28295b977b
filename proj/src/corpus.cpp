#include "morphy/corpus.hpp"

#include "morphy/io.hpp"
#include "morphy/utf8.hpp"

namespace morphy {

std::size_t AnnotatedCorpus::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.size();
  return n;
}

AnnotatedCorpus read_corpus(std::string_view text) {
  AnnotatedCorpus corpus;
  CorpusSentence current;
  bool body_started = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.empty()) {
      if (!current.empty()) corpus.sentences.push_back(std::move(current));
      current.clear();
      continue;
    }
    auto tab = line.find('\t');
    if (line.front() == '#' && tab == std::string_view::npos) {
      if (!body_started) {
        auto c = line.substr(1);
        if (!c.empty() && c.front() == ' ') c.remove_prefix(1);
        if (!corpus.provenance.empty()) corpus.provenance += '\n';
        corpus.provenance += c;
      }
      continue;
    }
    body_started = true;
    if (tab == std::string_view::npos || tab == 0) throw CorpusError("expected surface<TAB>tag", lineno);
    auto surface = line.substr(0, tab);
    auto tag_text = line.substr(tab + 1);
    if (tag_text.find('\t') != std::string_view::npos) throw CorpusError("more than two columns", lineno);
    Tag tag;
    try {
      tag = parse_tag(tag_text, TagSetKind::large);
    } catch (const TagError& e) {
      throw CorpusError(e.what(), lineno);
    }
    if (!is_valid(tag)) throw CorpusError("tag not in the large set: " + std::string(tag_text), lineno);
    current.push_back({std::string(surface), std::move(tag), lineno});
  }
  if (!current.empty()) corpus.sentences.push_back(std::move(current));
  return corpus;
}

std::string write_corpus(const AnnotatedCorpus& corpus) {
  std::string out;
  if (!corpus.provenance.empty()) {
    for (const auto& l : utf8::split(corpus.provenance, '\n')) out += "# " + l + "\n";
    out += '\n';
  }
  for (const auto& s : corpus.sentences) {
    for (const auto& t : s) {
      out += t.surface;
      out += '\t';
      out += format_tag(t.tag);
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

AnnotatedCorpus read_corpus_file(const std::string& path) { return read_corpus(io::read_file(path)); }

void write_corpus_file(const AnnotatedCorpus& corpus, const std::string& path) {
  io::write_file_atomic(path, write_corpus(corpus));
}

}  // namespace morphy

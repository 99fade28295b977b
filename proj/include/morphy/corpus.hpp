#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "morphy/tagset.hpp"

namespace morphy {

class CorpusError : public std::runtime_error {
 public:
  CorpusError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct CorpusToken {
  std::string surface;
  Tag tag;               // gold, large set
  std::size_t line = 0;  // source line, 0 when built in memory

  friend bool operator==(const CorpusToken& a, const CorpusToken& b) {
    return a.surface == b.surface && a.tag == b.tag;
  }
};

using CorpusSentence = std::vector<CorpusToken>;

struct AnnotatedCorpus {
  std::vector<CorpusSentence> sentences;
  std::string provenance;  // leading comment lines, without "# "

  std::size_t token_count() const;
  friend bool operator==(const AnnotatedCorpus&, const AnnotatedCorpus&) = default;
};

/// One `surface<TAB>large tag` per line, a blank line after each sentence.
/// Lines starting with '#' and holding no TAB are comments. Throws
/// CorpusError on a malformed line or an invalid tag.
AnnotatedCorpus read_corpus(std::string_view text);
std::string write_corpus(const AnnotatedCorpus& corpus);

AnnotatedCorpus read_corpus_file(const std::string& path);
void write_corpus_file(const AnnotatedCorpus& corpus, const std::string& path);

}  // namespace morphy

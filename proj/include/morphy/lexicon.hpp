#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "morphy/paradigm.hpp"

namespace morphy {

enum class PrefixKind { none, separable, inseparable };

std::string_view to_string(PrefixKind k);

enum class EntryFlag : std::uint8_t {
  umlaut_in_paradigm = 1,
  ss_sharp_shift = 2,
  no_ge_participle = 4,
};

std::string_view to_string(EntryFlag f);

class LexiconError : public std::runtime_error {
 public:
  LexiconError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LexiconEntry {
  std::string root;
  std::string pos;       // large base code: SUB, VER, ADJ, PRO POS, ...
  std::string class_id;
  std::optional<std::string> gender;  // MAS | FEM | NEU
  std::string prefix;
  PrefixKind prefix_kind = PrefixKind::none;
  std::uint8_t flags = 0;
  std::map<std::string, std::string> overrides;

  bool has(EntryFlag f) const { return flags & static_cast<std::uint8_t>(f); }
  void set(EntryFlag f) { flags |= static_cast<std::uint8_t>(f); }
  const std::string* override_for(std::string_view key) const;

  bool is_verb() const { return pos == "VER" || pos == "VER AUX" || pos == "VER MOD"; }
  bool is_noun() const { return pos == "SUB" || pos == "EIG"; }

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

/// One line of the lexicon file format (no trailing newline).
std::string format_entry(const LexiconEntry& e);
/// Throws LexiconError (line 0) on malformed input.
LexiconEntry parse_entry(std::string_view line, const ParadigmSet* classes = nullptr);

/// Checks entry invariants; with `classes`, also class id and override keys.
void validate_entry(const LexiconEntry& e, const ParadigmSet* classes = nullptr);

/// Root lexicon. Multiple entries per root are allowed; byte-identical
/// duplicates are not. Reads may run concurrently; add() needs exclusive access.
class Lexicon {
 public:
  /// Returns false when an identical entry already exists.
  bool add(LexiconEntry e);

  std::vector<LexiconEntry> lookup_roots(std::string_view root) const;
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const Lexicon& a, const Lexicon& b);

 private:
  std::vector<LexiconEntry> entries_;
  std::multimap<std::string, std::size_t, std::less<>> by_root_;
};

Lexicon load_lexicon(std::string_view text, const ParadigmSet* classes = nullptr);
Lexicon load_lexicon_file(const std::string& path, const ParadigmSet* classes = nullptr);
/// Deterministic: sorted by root, pos, class, then the full line.
std::string save_lexicon(const Lexicon& lex);

}  // namespace morphy

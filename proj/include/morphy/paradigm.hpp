#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace morphy {

/// How a paradigm slot derives its stem from the lexicon root.
enum class StemTransform {
  none,
  umlaut,        // vowel mutation when the entry carries umlaut_in_paradigm
  pret_stem,     // override.pret_stem, else the root
  pret_umlaut,   // mutated preterite stem (strong subjunctive II)
  pres23_stem,   // override.pres23_stem, else mutated root under umlaut_in_paradigm, else root
  part2_stem,    // the complete past participle (participial adjectives)
  pa1_stem,      // infinitive + "d" (present participle)
  comp_stem,     // override.comp_stem, else mutated root under umlaut_in_paradigm
  elide_e,       // root with its last "e" dropped (edel -> edl)
  fixed,         // the slot suffix is the complete surface form
};

enum class Marker { none, ge, zu };

std::string_view to_string(StemTransform t);
std::string_view to_string(Marker m);

class ParadigmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParadigmSlot {
  std::string id;
  std::string tag_template;  // "@P" expands to the entry's pos, "@G" to its gender
  std::string suffix;
  StemTransform transform = StemTransform::none;
  Marker marker = Marker::none;
};

struct ParadigmTable {
  std::string class_id;
  std::vector<ParadigmSlot> slots;

  const ParadigmSlot* find(std::string_view slot_id) const;
  bool uses(StemTransform t) const;
};

/// The inflection class inventory, loaded from the line-oriented class file
/// `class_id TAB slot_id TAB tag template TAB suffix TAB stem_transform TAB marker`.
class ParadigmSet {
 public:
  ParadigmSet() = default;

  static ParadigmSet parse(std::string_view text);
  static ParadigmSet load_file(const std::string& path);

  const ParadigmTable* find(std::string_view class_id) const;
  const std::map<std::string, ParadigmTable, std::less<>>& tables() const { return tables_; }

  /// Distinct suffixes of all non-fixed slots plus the empty suffix, longest first.
  const std::vector<std::string>& suffix_inventory() const { return suffixes_; }

  /// Override keys an entry of `class_id` may carry: slot ids plus the stem
  /// names consulted by the class's transforms.
  bool accepts_override(std::string_view class_id, std::string_view key) const;

 private:
  std::map<std::string, ParadigmTable, std::less<>> tables_;
  std::vector<std::string> suffixes_;
};

}  // namespace morphy

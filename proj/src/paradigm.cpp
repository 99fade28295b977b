#include "morphy/paradigm.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "morphy/utf8.hpp"

namespace morphy {

namespace {

constexpr std::pair<StemTransform, std::string_view> kTransforms[] = {
    {StemTransform::none, "none"},           {StemTransform::umlaut, "umlaut"},
    {StemTransform::pret_stem, "pret_stem"}, {StemTransform::pret_umlaut, "pret_umlaut"},
    {StemTransform::pres23_stem, "pres23_stem"}, {StemTransform::part2_stem, "part2_stem"},
    {StemTransform::pa1_stem, "pa1_stem"},   {StemTransform::comp_stem, "comp_stem"},
    {StemTransform::elide_e, "elide_e"},     {StemTransform::fixed, "fixed"},
};

StemTransform parse_transform(std::string_view s, std::size_t line) {
  for (auto [t, name] : kTransforms)
    if (name == s) return t;
  throw ParadigmError("line " + std::to_string(line) + ": unknown stem transform '" + std::string(s) + "'");
}

Marker parse_marker(std::string_view s, std::size_t line) {
  if (s == "none") return Marker::none;
  if (s == "ge") return Marker::ge;
  if (s == "zu") return Marker::zu;
  throw ParadigmError("line " + std::to_string(line) + ": unknown marker '" + std::string(s) + "'");
}

// Stem names an override may supply, per transform.
std::string_view stem_key(StemTransform t) {
  switch (t) {
    case StemTransform::pret_stem:
    case StemTransform::pret_umlaut: return "pret_stem";
    case StemTransform::pres23_stem: return "pres23_stem";
    case StemTransform::comp_stem: return "comp_stem";
    default: return {};
  }
}

}  // namespace

std::string_view to_string(StemTransform t) {
  for (auto [tr, name] : kTransforms)
    if (tr == t) return name;
  return "none";
}

std::string_view to_string(Marker m) {
  switch (m) {
    case Marker::ge: return "ge";
    case Marker::zu: return "zu";
    default: return "none";
  }
}

const ParadigmSlot* ParadigmTable::find(std::string_view slot_id) const {
  for (const auto& s : slots)
    if (s.id == slot_id) return &s;
  return nullptr;
}

bool ParadigmTable::uses(StemTransform t) const {
  return std::any_of(slots.begin(), slots.end(), [t](const ParadigmSlot& s) { return s.transform == t; });
}

ParadigmSet ParadigmSet::parse(std::string_view text) {
  ParadigmSet set;
  std::size_t lineno = 0;
  for (const auto& raw : utf8::split(text, '\n')) {
    ++lineno;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto f = utf8::split(line, '\t');
    if (f.size() != 6)
      throw ParadigmError("line " + std::to_string(lineno) + ": expected 6 tab-separated fields, got " +
                          std::to_string(f.size()));
    if (f[0].empty() || f[1].empty() || f[2].empty())
      throw ParadigmError("line " + std::to_string(lineno) + ": empty class, slot or tag");
    ParadigmSlot slot{f[1], f[2], f[3], parse_transform(f[4], lineno), parse_marker(f[5], lineno)};
    auto& table = set.tables_[f[0]];
    table.class_id = f[0];
    if (table.find(slot.id))
      throw ParadigmError("line " + std::to_string(lineno) + ": duplicate slot '" + slot.id + "' in class " + f[0]);
    table.slots.push_back(std::move(slot));
  }
  std::set<std::string> suffixes{""};
  for (const auto& [id, table] : set.tables_)
    for (const auto& s : table.slots)
      if (s.transform != StemTransform::fixed) suffixes.insert(s.suffix);
  set.suffixes_.assign(suffixes.begin(), suffixes.end());
  std::stable_sort(set.suffixes_.begin(), set.suffixes_.end(),
                   [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  return set;
}

ParadigmSet ParadigmSet::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParadigmError("cannot open paradigm file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const ParadigmTable* ParadigmSet::find(std::string_view class_id) const {
  auto it = tables_.find(class_id);
  return it == tables_.end() ? nullptr : &it->second;
}

bool ParadigmSet::accepts_override(std::string_view class_id, std::string_view key) const {
  const auto* table = find(class_id);
  if (!table) return false;
  if (table->find(key)) return true;
  return std::any_of(table->slots.begin(), table->slots.end(), [&](const ParadigmSlot& s) {
    auto k = stem_key(s.transform);
    return !k.empty() && k == key;
  });
}

}  // namespace morphy

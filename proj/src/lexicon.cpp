#include "morphy/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "morphy/tagset.hpp"
#include "morphy/utf8.hpp"

namespace morphy {

namespace {

constexpr EntryFlag kAllFlags[] = {EntryFlag::umlaut_in_paradigm, EntryFlag::ss_sharp_shift,
                                   EntryFlag::no_ge_participle};

std::optional<EntryFlag> parse_flag(std::string_view s) {
  for (auto f : kAllFlags)
    if (to_string(f) == s) return f;
  return std::nullopt;
}

std::optional<PrefixKind> parse_prefix_kind(std::string_view s) {
  if (s == "none") return PrefixKind::none;
  if (s == "separable") return PrefixKind::separable;
  if (s == "inseparable") return PrefixKind::inseparable;
  return std::nullopt;
}

bool known_pos(std::string_view pos) {
  // Any base code of the large set, and the closed-class codes.
  static const std::vector<std::string> bases = [] {
    std::vector<std::string> out;
    for (const auto& t : TagSet::get(TagSetKind::large).members())
      if (std::find(out.begin(), out.end(), t.pos) == out.end()) out.push_back(t.pos);
    return out;
  }();
  return std::find(bases.begin(), bases.end(), pos) != bases.end();
}

}  // namespace

std::string_view to_string(PrefixKind k) {
  switch (k) {
    case PrefixKind::separable: return "separable";
    case PrefixKind::inseparable: return "inseparable";
    default: return "none";
  }
}

std::string_view to_string(EntryFlag f) {
  switch (f) {
    case EntryFlag::umlaut_in_paradigm: return "umlaut_in_paradigm";
    case EntryFlag::ss_sharp_shift: return "ss_sharp_shift";
    case EntryFlag::no_ge_participle: return "no_ge_participle";
  }
  return "";
}

const std::string* LexiconEntry::override_for(std::string_view key) const {
  auto it = overrides.find(std::string(key));
  return it == overrides.end() ? nullptr : &it->second;
}

std::string format_entry(const LexiconEntry& e) {
  std::vector<std::string> kv;
  if (e.gender) kv.push_back("gender=" + *e.gender);
  if (!e.prefix.empty()) kv.push_back("prefix=" + e.prefix);
  if (e.prefix_kind != PrefixKind::none) kv.push_back("prefix_kind=" + std::string(to_string(e.prefix_kind)));
  if (e.flags) {
    std::vector<std::string> names;
    for (auto f : kAllFlags)
      if (e.has(f)) names.emplace_back(to_string(f));
    kv.push_back("flags=" + utf8::join(names, ","));
  }
  for (const auto& [slot, form] : e.overrides) kv.push_back("override." + slot + "=" + form);
  return e.root + "\t" + e.pos + "\t" + e.class_id + "\t" + utf8::join(kv, ",");
}

void validate_entry(const LexiconEntry& e, const ParadigmSet* classes) {
  if (e.root.empty()) throw LexiconError("empty root");
  if (!known_pos(e.pos)) throw LexiconError("unknown part of speech '" + e.pos + "'");
  if (e.pos == "SUB" && !e.gender) throw LexiconError("noun '" + e.root + "' has no gender");
  if (e.gender && *e.gender != "MAS" && *e.gender != "FEM" && *e.gender != "NEU")
    throw LexiconError("bad gender '" + *e.gender + "'");
  if (!e.prefix.empty() && e.prefix_kind == PrefixKind::none)
    throw LexiconError("prefix '" + e.prefix + "' without prefix_kind");
  if (e.prefix.empty() && e.prefix_kind != PrefixKind::none) throw LexiconError("prefix_kind without prefix");
  if (classes) {
    if (!classes->find(e.class_id)) throw LexiconError("unknown class id '" + e.class_id + "'");
    for (const auto& [slot, form] : e.overrides)
      if (!classes->accepts_override(e.class_id, slot))
        throw LexiconError("override for nonexistent slot '" + slot + "' in class " + e.class_id);
  }
}

LexiconEntry parse_entry(std::string_view line, const ParadigmSet* classes) {
  auto f = utf8::split(line, '\t');
  if (f.size() < 4) throw LexiconError("expected 4 tab-separated fields, got " + std::to_string(f.size()));
  // Tolerate key=value pairs spread over further TAB columns.
  for (std::size_t i = 4; i < f.size(); ++i)
    if (!f[i].empty()) f[3] += (f[3].empty() ? "" : ",") + f[i];
  LexiconEntry e;
  e.root = f[0];
  e.pos = f[1];
  e.class_id = f[2];
  if (e.class_id.empty()) throw LexiconError("empty class id");
  if (!f[3].empty()) {
    // flags=a,b shares the comma separator with the key list, so a bare token
    // without '=' continues the previous flags value.
    bool in_flags = false;
    for (const auto& item : utf8::split(f[3], ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        if (!in_flags) throw LexiconError("malformed key=value item '" + item + "'");
        auto flag = parse_flag(item);
        if (!flag) throw LexiconError("unknown flag '" + item + "'");
        e.set(*flag);
        continue;
      }
      in_flags = false;
      std::string key = item.substr(0, eq);
      std::string value = item.substr(eq + 1);
      if (key == "gender") {
        e.gender = value;
      } else if (key == "prefix") {
        e.prefix = value;
      } else if (key == "prefix_kind") {
        auto k = parse_prefix_kind(value);
        if (!k) throw LexiconError("unknown prefix_kind '" + value + "'");
        e.prefix_kind = *k;
      } else if (key == "flags") {
        in_flags = true;
        auto flag = parse_flag(value);
        if (!flag) throw LexiconError("unknown flag '" + value + "'");
        e.set(*flag);
      } else if (utf8::starts_with(key, "override.") && key.size() > 9) {
        if (value.empty()) throw LexiconError("empty override for '" + key + "'");
        e.overrides[key.substr(9)] = value;
      } else {
        throw LexiconError("unknown key '" + key + "'");
      }
    }
  }
  validate_entry(e, classes);
  return e;
}

bool Lexicon::add(LexiconEntry e) {
  auto [lo, hi] = by_root_.equal_range(e.root);
  for (auto it = lo; it != hi; ++it)
    if (entries_[it->second] == e) return false;
  by_root_.emplace(e.root, entries_.size());
  entries_.push_back(std::move(e));
  return true;
}

std::vector<LexiconEntry> Lexicon::lookup_roots(std::string_view root) const {
  std::vector<LexiconEntry> out;
  auto [lo, hi] = by_root_.equal_range(root);
  for (auto it = lo; it != hi; ++it) out.push_back(entries_[it->second]);
  return out;
}

bool operator==(const Lexicon& a, const Lexicon& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::string> la, lb;
  for (const auto& e : a.entries_) la.push_back(format_entry(e));
  for (const auto& e : b.entries_) lb.push_back(format_entry(e));
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  return la == lb;
}

Lexicon load_lexicon(std::string_view text, const ParadigmSet* classes) {
  Lexicon lex;
  std::size_t lineno = 0;
  for (const auto& raw : utf8::split(text, '\n')) {
    ++lineno;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    try {
      lex.add(parse_entry(line, classes));
    } catch (const LexiconError& err) {
      throw LexiconError(err.what(), lineno);
    }
  }
  return lex;
}

Lexicon load_lexicon_file(const std::string& path, const ParadigmSet* classes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError("cannot open lexicon file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_lexicon(ss.str(), classes);
}

std::string save_lexicon(const Lexicon& lex) {
  std::vector<const LexiconEntry*> order;
  for (const auto& e : lex.entries()) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](const LexiconEntry* a, const LexiconEntry* b) {
    if (a->root != b->root) return a->root < b->root;
    if (a->pos != b->pos) return a->pos < b->pos;
    if (a->class_id != b->class_id) return a->class_id < b->class_id;
    return format_entry(*a) < format_entry(*b);
  });
  std::string out;
  for (const auto* e : order) {
    out += format_entry(*e);
    out += '\n';
  }
  return out;
}

}  // namespace morphy

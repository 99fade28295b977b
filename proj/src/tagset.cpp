#include "morphy/tagset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "morphy/utf8.hpp"

namespace morphy {

namespace {

constexpr std::array<std::string_view, kDimensionCount> kDimensionNames{
    "declension", "person", "case", "gender", "number", "tense", "degree", "usage"};

constexpr std::array<std::string_view, 3> kDeclension{"SOL", "DEF", "IND"};
constexpr std::array<std::string_view, 3> kPerson{"1PE", "2PE", "3PE"};
constexpr std::array<std::string_view, 4> kCase{"NOM", "GEN", "DAT", "AKK"};
constexpr std::array<std::string_view, 3> kGender{"MAS", "FEM", "NEU"};
constexpr std::array<std::string_view, 2> kNumber{"SIN", "PLU"};
constexpr std::array<std::string_view, 5> kTense{"PRÄ", "PRT", "KJ1", "KJ2", "IMP"};
constexpr std::array<std::string_view, 3> kDegree{"POS", "KOM", "SUP"};
constexpr std::array<std::string_view, 3> kUsage{"ATT", "PRO", "ADV"};

// Small tag set, table order.
const std::vector<std::string> kSmallCodes{
    "SUB",         "EIG",         "VER",         "VER INF",     "VER PA2",     "VER EIZ",
    "VER IMP",     "VER AUX",     "VER AUX INF", "VER AUX PA2", "VER AUX IMP", "VER MOD",
    "VER MOD INF", "VER MOD PA2", "VER MOD IMP", "ART IND",     "ART DEF",     "ADJ",
    "ADJ ADV",     "PRO DEM ATT", "PRO DEM PRO", "PRO REL ATT", "PRO REL PRO", "PRO POS ATT",
    "PRO POS PRO", "PRO IND ATT", "PRO IND PRO", "PRO INR ATT", "PRO INR PRO", "PRO PER",
    "PRO REF",     "ADV",         "ADV PRO",     "KON UNT",     "KON NEB",     "KON INF",
    "KON VGL",     "KON PRI",     "PRP",         "SKZ",         "ZUS",         "INJ",
    "ZAL",         "ZAN",         "ABK",         "SZD",         "SZE",         "SZG",
    "SZK",         "SZS",         "SZN"};

// Legal feature combinations of the large tag set. One schema per line:
// base code, TAB, space-separated `dimension=values` terms; `dimension?=` marks
// an optional dimension. A tag is legal when it matches any schema of its base.
constexpr std::string_view kLargeSchemas = R"(SUB	case=NOM|GEN|DAT|AKK gender=MAS|FEM|NEU number=SIN|PLU
EIG	case=NOM|GEN|DAT|AKK gender=MAS|FEM|NEU number=SIN|PLU
VER	person=1PE|2PE|3PE number=SIN|PLU tense?=PRÄ|PRT|KJ1|KJ2
VER	number=SIN|PLU tense=IMP
VER INF	
VER PA2	
VER EIZ	
VER AUX	person=1PE|2PE|3PE number=SIN|PLU tense?=PRÄ|PRT|KJ1|KJ2
VER AUX	number=SIN|PLU tense=IMP
VER AUX INF	
VER AUX PA2	
VER MOD	person=1PE|2PE|3PE number=SIN|PLU tense?=PRÄ|PRT|KJ1|KJ2
VER MOD	number=SIN|PLU tense=IMP
VER MOD INF	
VER MOD PA2	
ART	declension=DEF|IND
ART	declension=DEF|IND case=NOM|GEN|DAT|AKK gender=MAS|FEM|NEU number=SIN
ART	declension=DEF|IND case=NOM|GEN|DAT|AKK number=PLU
ADJ	case=NOM|GEN|DAT|AKK gender=MAS|FEM|NEU number=SIN degree?=KOM|SUP
ADJ	case=NOM|GEN|DAT|AKK number=PLU degree?=KOM|SUP
ADJ	usage=ADV degree?=KOM|SUP
PA1	declension?=SOL|DEF|IND case=NOM|GEN|DAT|AKK gender=MAS|FEM|NEU number=SIN
PA1	declension?=SOL|DEF|IND case=NOM|GEN|DAT|AKK gender?=MAS|FEM|NEU number=PLU
PRO DEM	usage=ATT|PRO case=NOM|GEN|DAT|AKK gender=MAS|FEM|NEU number=SIN
PRO DEM	usage=ATT|PRO case=NOM|GEN|DAT|AKK number=PLU
PRO REL	usage=ATT|PRO case=NOM|GEN|DAT|AKK gender=MAS|FEM|NEU number=SIN
PRO REL	usage=ATT|PRO case=NOM|GEN|DAT|AKK number=PLU
PRO POS	usage=ATT|PRO case=NOM|GEN|DAT|AKK gender=MAS|FEM|NEU number=SIN
PRO POS	usage=ATT|PRO case=NOM|GEN|DAT|AKK number=PLU
PRO IND	usage=ATT|PRO case=NOM|GEN|DAT|AKK gender=MAS|FEM|NEU number=SIN
PRO IND	usage=ATT|PRO case=NOM|GEN|DAT|AKK number=PLU
PRO INR	usage=ATT|PRO case=NOM|GEN|DAT|AKK gender=MAS|FEM|NEU number=SIN
PRO INR	usage=ATT|PRO case=NOM|GEN|DAT|AKK number=PLU
PRO PER	person=1PE|2PE case=NOM|GEN|DAT|AKK number=SIN|PLU
PRO PER	person=3PE case=NOM|GEN|DAT|AKK gender=MAS|FEM|NEU number=SIN
PRO PER	person=3PE case=NOM|GEN|DAT|AKK number=PLU
PRO REF	person=1PE|2PE|3PE case=DAT|AKK number=SIN|PLU
ADV	
ADV PRO	
KON UNT	
KON NEB	
KON INF	
KON VGL	
KON PRI	
PRP	case?=GEN|DAT|AKK
SKZ	
ZUS	
INJ	
ZAL	
ZAN	
ABK	
SZD	
SZE	
SZG	
SZK	
SZS	
SZN	
)";

const std::set<std::string_view> kPronounSubclasses{"DEM", "REL", "POS", "IND", "INR", "PER", "REF"};

std::span<const std::string_view> values_of(Dimension d) {
  switch (d) {
    case Dimension::declension: return kDeclension;
    case Dimension::person: return kPerson;
    case Dimension::case_: return kCase;
    case Dimension::gender: return kGender;
    case Dimension::number: return kNumber;
    case Dimension::tense: return kTense;
    case Dimension::degree: return kDegree;
    case Dimension::usage: return kUsage;
  }
  return {};
}

std::optional<Dimension> dimension_by_name(std::string_view name) {
  for (std::size_t i = 0; i < kDimensionCount; ++i)
    if (kDimensionNames[i] == name) return static_cast<Dimension>(i);
  return std::nullopt;
}

// Value token -> dimension. Tokens are unique across dimensions.
std::optional<std::pair<Dimension, std::uint8_t>> feature_of(std::string_view token) {
  for (std::size_t i = 0; i < kDimensionCount; ++i) {
    auto values = values_of(static_cast<Dimension>(i));
    for (std::size_t v = 0; v < values.size(); ++v)
      if (values[v] == token) return std::pair{static_cast<Dimension>(i), static_cast<std::uint8_t>(v + 1)};
  }
  return std::nullopt;
}

struct DimensionRule {
  std::uint16_t allowed = 0;  // bitmask over 1-based value indices
  bool required = false;
};

struct Schema {
  std::array<std::optional<DimensionRule>, kDimensionCount> dims;

  bool matches(const Tag& t) const {
    for (std::size_t i = 0; i < kDimensionCount; ++i) {
      auto v = t.features[i];
      if (!dims[i]) {
        if (v) return false;
        continue;
      }
      if (!v) {
        if (dims[i]->required) return false;
        continue;
      }
      if (!(dims[i]->allowed & (1u << v))) return false;
    }
    return true;
  }
};

struct Grammar {
  std::map<std::string, std::vector<Schema>> schemas;  // by base code
  std::size_t max_base_tokens = 1;
  std::unordered_map<std::string, std::string> small_by_key;  // sorted tokens -> code

  Grammar() {
    for (const auto& line : utf8::split(kLargeSchemas, '\n')) {
      if (line.empty()) continue;
      auto fields = utf8::split(line, '\t');
      Schema schema;
      if (fields.size() > 1 && !fields[1].empty()) {
        for (const auto& term : utf8::split(fields[1], ' ')) {
          auto eq = term.find('=');
          std::string name = term.substr(0, eq);
          bool optional = !name.empty() && name.back() == '?';
          if (optional) name.pop_back();
          auto dim = dimension_by_name(name);
          if (!dim) throw TagError("bad schema dimension: " + name);
          DimensionRule rule;
          rule.required = !optional;
          for (const auto& v : utf8::split(term.substr(eq + 1), '|')) {
            auto f = feature_of(v);
            if (!f || f->first != *dim) throw TagError("bad schema value: " + v);
            rule.allowed |= static_cast<std::uint16_t>(1u << f->second);
          }
          schema.dims[static_cast<std::size_t>(*dim)] = rule;
        }
      }
      max_base_tokens = std::max(max_base_tokens, utf8::split(fields[0], ' ').size());
      schemas[fields[0]].push_back(schema);
    }
    for (const auto& code : kSmallCodes) {
      auto tokens = utf8::split(code, ' ');
      add_small_key(tokens, code);
      if (tokens.size() > 1 && tokens[0] == "PRO") {
        tokens.erase(tokens.begin());
        add_small_key(tokens, code);
      }
    }
  }

  void add_small_key(std::vector<std::string> tokens, const std::string& code) {
    std::sort(tokens.begin(), tokens.end());
    auto key = utf8::join(tokens, " ");
    auto [it, inserted] = small_by_key.emplace(key, code);
    if (!inserted && it->second != code) throw TagError("ambiguous small tag spelling: " + key);
  }

  bool legal(const Tag& t) const {
    auto it = schemas.find(t.pos);
    if (it == schemas.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(), [&](const Schema& s) { return s.matches(t); });
  }
};

const Grammar& grammar() {
  static const Grammar g;
  return g;
}

std::vector<std::string> tokenize(std::string_view s) {
  if (s.empty()) throw TagError("empty tag string");
  auto tokens = utf8::split(s, ' ');
  for (const auto& tok : tokens)
    if (tok.empty()) throw TagError("malformed tag string: '" + std::string(s) + "'");
  return tokens;
}

Tag parse_small(std::string_view s) {
  auto tokens = tokenize(s);
  std::sort(tokens.begin(), tokens.end());
  const auto& g = grammar();
  auto it = g.small_by_key.find(utf8::join(tokens, " "));
  if (it == g.small_by_key.end()) throw TagError("unknown small tag: '" + std::string(s) + "'");
  return make_small(it->second);
}

Tag parse_large(std::string_view s) {
  auto tokens = tokenize(s);
  const auto& g = grammar();
  Tag t;
  t.kind = TagSetKind::large;
  std::size_t used = 0;
  if (kPronounSubclasses.count(tokens[0])) {
    t.pos = "PRO " + tokens[0];
    used = 1;
  } else {
    for (std::size_t n = std::min(g.max_base_tokens, tokens.size()); n >= 1; --n) {
      std::vector<std::string> head(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(n));
      auto base = utf8::join(head, " ");
      if (g.schemas.count(base)) {
        t.pos = base;
        used = n;
        break;
      }
    }
    if (!used) throw TagError("unknown token '" + tokens[0] + "' in tag '" + std::string(s) + "'");
  }
  for (std::size_t i = used; i < tokens.size(); ++i) {
    auto f = feature_of(tokens[i]);
    if (!f) throw TagError("unknown token '" + tokens[i] + "' in tag '" + std::string(s) + "'");
    auto idx = static_cast<std::size_t>(f->first);
    if (t.features[idx]) throw TagError("duplicate " + std::string(kDimensionNames[idx]) + " in tag '" + std::string(s) + "'");
    t.features[idx] = f->second;
  }
  if (!g.legal(t)) throw TagError("features illegal for " + t.pos + " in tag '" + std::string(s) + "'");
  return t;
}

}  // namespace

std::string_view to_string(TagSetKind kind) { return kind == TagSetKind::small ? "small" : "large"; }

TagSetKind parse_tagset_kind(std::string_view s) {
  if (s == "small") return TagSetKind::small;
  if (s == "large") return TagSetKind::large;
  throw TagError("unknown tag set kind: " + std::string(s));
}

std::string_view dimension_name(Dimension d) { return kDimensionNames[static_cast<std::size_t>(d)]; }

std::span<const std::string_view> dimension_values(Dimension d) { return values_of(d); }

std::optional<std::string_view> Tag::feature(Dimension d) const {
  auto v = features[static_cast<std::size_t>(d)];
  if (!v) return std::nullopt;
  return values_of(d)[v - 1];
}

bool Tag::has_features() const {
  return std::any_of(features.begin(), features.end(), [](auto v) { return v != 0; });
}

Tag& Tag::set(Dimension d, std::string_view value) {
  auto f = feature_of(value);
  if (!f || f->first != d) throw TagError("'" + std::string(value) + "' is not a " + std::string(dimension_name(d)) + " value");
  features[static_cast<std::size_t>(d)] = f->second;
  return *this;
}

Tag& Tag::clear(Dimension d) {
  features[static_cast<std::size_t>(d)] = 0;
  return *this;
}

Tag make_small(std::string_view code) {
  Tag t;
  t.pos = std::string(code);
  t.kind = TagSetKind::small;
  return t;
}

Tag parse_tag(std::string_view s, TagSetKind kind) {
  return kind == TagSetKind::small ? parse_small(s) : parse_large(s);
}

std::string format_tag(const Tag& t) {
  std::string out = t.pos;
  for (std::size_t i = 0; i < kDimensionCount; ++i) {
    if (auto v = t.feature(static_cast<Dimension>(i))) {
      out += ' ';
      out += *v;
    }
  }
  return out;
}

bool is_valid(const Tag& t) {
  if (t.kind == TagSetKind::small)
    return !t.has_features() && std::find(kSmallCodes.begin(), kSmallCodes.end(), t.pos) != kSmallCodes.end();
  return grammar().legal(t);
}

Tag map_large_to_small(const Tag& t) {
  if (t.kind == TagSetKind::small) return t;
  const std::string& p = t.pos;
  if (p == "VER" || p == "VER AUX" || p == "VER MOD") {
    auto tense = t.feature(Dimension::tense);
    return make_small(tense && *tense == "IMP" ? p + " IMP" : p);
  }
  if (p == "ART") return make_small("ART " + std::string(t.feature(Dimension::declension).value_or("DEF")));
  if (p == "ADJ" || p == "PA1") {
    auto usage = t.feature(Dimension::usage);
    return make_small(usage && *usage == "ADV" ? "ADJ ADV" : "ADJ");
  }
  if (utf8::starts_with(p, "PRO ") && p != "PRO PER" && p != "PRO REF")
    return make_small(p + " " + std::string(t.feature(Dimension::usage).value_or("PRO")));
  return make_small(p);
}

Tag to_kind(const Tag& t, TagSetKind kind) {
  if (t.kind == kind) return t;
  if (kind == TagSetKind::small) return map_large_to_small(t);
  throw TagError("cannot map small tag '" + t.pos + "' to the large set");
}

const std::vector<std::string>& small_codes() { return kSmallCodes; }

TagSet::TagSet(TagSetKind kind) : kind_(kind) {
  if (kind == TagSetKind::small) {
    for (const auto& c : kSmallCodes) members_.push_back(make_small(c));
  } else {
    std::set<std::string> seen;
    for (const auto& [base, schemas] : grammar().schemas) {
      for (const auto& schema : schemas) {
        std::vector<Tag> partial{Tag{base, {}, TagSetKind::large}};
        for (std::size_t d = 0; d < kDimensionCount; ++d) {
          if (!schema.dims[d]) continue;
          std::vector<Tag> next;
          for (const auto& p : partial) {
            if (!schema.dims[d]->required) next.push_back(p);
            for (std::size_t v = 1; v <= values_of(static_cast<Dimension>(d)).size(); ++v) {
              if (!(schema.dims[d]->allowed & (1u << v))) continue;
              Tag q = p;
              q.features[d] = static_cast<std::uint8_t>(v);
              next.push_back(q);
            }
          }
          partial = std::move(next);
        }
        for (auto& p : partial)
          if (seen.insert(format_tag(p)).second) members_.push_back(p);
      }
    }
  }
  std::sort(members_.begin(), members_.end(),
            [](const Tag& a, const Tag& b) { return format_tag(a) < format_tag(b); });
  for (const auto& m : members_) strings_.push_back(format_tag(m));
}

const TagSet& TagSet::get(TagSetKind kind) {
  static const TagSet small(TagSetKind::small);
  static const TagSet large(TagSetKind::large);
  return kind == TagSetKind::small ? small : large;
}

bool TagSet::contains(const Tag& t) const { return t.kind == kind_ && contains(format_tag(t)); }

bool TagSet::contains(std::string_view canonical) const {
  return std::binary_search(strings_.begin(), strings_.end(), canonical);
}

bool is_punctuation(const Tag& t) { return utf8::starts_with(t.pos, "SZ"); }

bool is_open_class(const Tag& t) {
  auto small = map_large_to_small(t).pos;
  return small == "SUB" || small == "EIG" || small == "VER" || small == "VER INF" || small == "VER PA2" ||
         small == "VER IMP" || small == "ADJ" || small == "ADJ ADV";
}

}  // namespace morphy

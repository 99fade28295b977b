#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "morphy/tagset.hpp"
#include "morphy/utf8.hpp"

using namespace morphy;

TEST_CASE("small tag set has the 51 table codes") {
  const auto& small = TagSet::get(TagSetKind::small);
  CHECK(small.size() == 51);
  CHECK(small_codes().size() == 51);
  std::set<std::string> distinct(small_codes().begin(), small_codes().end());
  CHECK(distinct.size() == 51);
  CHECK(small_codes().front() == "SUB");
  CHECK(small_codes().back() == "SZN");
  for (const auto& t : small.members()) CHECK_FALSE(t.has_features());
}

TEST_CASE("parse_tag examples") {
  auto sub = parse_tag("SUB", TagSetKind::small);
  CHECK(sub.pos == "SUB");
  CHECK_FALSE(sub.has_features());

  auto ver = parse_tag("VER 3PE SIN", TagSetKind::large);
  CHECK(ver.pos == "VER");
  CHECK(ver.feature(Dimension::person) == "3PE");
  CHECK(ver.feature(Dimension::number) == "SIN");
  CHECK_FALSE(ver.has(Dimension::tense));

  CHECK_THROWS_AS(parse_tag("SUB XYZ", TagSetKind::large), TagError);
  CHECK_THROWS_AS(parse_tag("SUB XYZ", TagSetKind::small), TagError);
}

TEST_CASE("parse_tag rejections") {
  CHECK_THROWS_AS(parse_tag("SUB NOM AKK FEM SIN", TagSetKind::large), TagError);  // duplicate case
  CHECK_THROWS_AS(parse_tag("SUB NOM FEM SIN 3PE", TagSetKind::large), TagError);  // person illegal on SUB
  CHECK_THROWS_AS(parse_tag("SUB NOM FEM", TagSetKind::large), TagError);          // missing number
  CHECK_THROWS_AS(parse_tag("", TagSetKind::large), TagError);
  CHECK_THROWS_AS(parse_tag(" SUB", TagSetKind::small), TagError);
  CHECK_THROWS_AS(parse_tag("SUB  NOM FEM SIN", TagSetKind::large), TagError);
  CHECK_THROWS_AS(parse_tag("SUB ", TagSetKind::small), TagError);
}

TEST_CASE("format_tag examples") {
  Tag art{"ART", {}, TagSetKind::large};
  art.set(Dimension::declension, "DEF");
  CHECK(format_tag(art) == "ART DEF");
  CHECK(format_tag(make_small("SZE")) == "SZE");
  Tag sub{"SUB", {}, TagSetKind::large};
  sub.set(Dimension::case_, "AKK").set(Dimension::gender, "NEU").set(Dimension::number, "PLU");
  CHECK(format_tag(sub) == "SUB AKK NEU PLU");
}

TEST_CASE("figure-4 spellings parse") {
  CHECK(format_tag(parse_tag("PER PRO", TagSetKind::small)) == "PRO PER");
  CHECK(format_tag(parse_tag("POS ATT", TagSetKind::small)) == "PRO POS ATT");
  CHECK(format_tag(parse_tag("PRO POS ATT", TagSetKind::small)) == "PRO POS ATT");
  const char* large[] = {"ART DEF NOM SIN FEM", "SUB NOM FEM SIN", "VER 3PE SIN", "ART DEF AKK SIN NEU",
                         "SUB AKK NEU SIN",     "PER NOM SIN 1PE", "VER 1PE SIN", "POS AKK SIN FEM ATT",
                         "SUB AKK FEM SIN",     "DEM NOM SIN NEU PRO", "PRP DAT", "SUB DAT MAS SIN",
                         "PA1 SOL NEU AKK PLU", "SUB AKK NEU PLU", "PRP AKK"};
  for (auto s : large) {
    INFO(s);
    CHECK_NOTHROW(parse_tag(s, TagSetKind::large));
  }
  CHECK(format_tag(parse_tag("PER NOM SIN 1PE", TagSetKind::large)) == "PRO PER 1PE NOM SIN");
  CHECK(format_tag(parse_tag("PA1 SOL NEU AKK PLU", TagSetKind::large)) == "PA1 SOL AKK NEU PLU");
}

TEST_CASE("map_large_to_small examples") {
  auto small = [](const char* s) { return format_tag(map_large_to_small(parse_tag(s, TagSetKind::large))); };
  CHECK(small("SUB NOM FEM SIN") == "SUB");
  CHECK(small("ART DEF AKK SIN NEU") == "ART DEF");
  CHECK(small("VER 1PE SIN") == "VER");
  CHECK(small("VER IMP SIN") == "VER IMP");
  CHECK(small("VER MOD IMP SIN") == "VER MOD IMP");
  CHECK(small("VER AUX INF") == "VER AUX INF");
  CHECK(small("POS AKK SIN FEM ATT") == "PRO POS ATT");
  CHECK(small("DEM NOM SIN NEU PRO") == "PRO DEM PRO");
  CHECK(small("PER NOM SIN 1PE") == "PRO PER");
  CHECK(small("ADJ ADV KOM") == "ADJ ADV");
  CHECK(small("PA1 SOL NEU AKK PLU") == "ADJ");
  CHECK(small("ART IND DAT SIN MAS") == "ART IND");
  CHECK(small("PRP DAT") == "PRP");
}

TEST_CASE("large set: round trip, totality, surjectivity") {
  const auto& large = TagSet::get(TagSetKind::large);
  const auto& small = TagSet::get(TagSetKind::small);
  CHECK(large.size() > 400);
  std::set<std::string> reached;
  for (const auto& t : large.members()) {
    auto s = format_tag(t);
    INFO(s);
    auto back = parse_tag(s, TagSetKind::large);
    CHECK(back == t);
    CHECK(format_tag(back) == s);
    auto m = map_large_to_small(t);
    CHECK(small.contains(m));
    reached.insert(format_tag(m));
  }
  CHECK(reached.size() == 51);
  for (const auto& t : small.members()) CHECK(parse_tag(format_tag(t), TagSetKind::small) == t);
}

TEST_CASE("mapping is insensitive to feature order") {
  const auto& large = TagSet::get(TagSetKind::large);
  std::mt19937 rng(7);
  for (const auto& t : large.members()) {
    auto tokens = utf8::split(format_tag(t), ' ');
    std::size_t base_len = utf8::split(t.pos, ' ').size();
    for (int rep = 0; rep < 3; ++rep) {
      std::shuffle(tokens.begin() + static_cast<std::ptrdiff_t>(base_len), tokens.end(), rng);
      auto parsed = parse_tag(utf8::join(tokens, " "), TagSetKind::large);
      CHECK(parsed == t);
      CHECK(map_large_to_small(parsed) == map_large_to_small(t));
    }
  }
}

TEST_CASE("format after parse is idempotent canonicalization") {
  for (auto s : {"SUB NOM FEM SIN", "ART DEF AKK SIN NEU", "VER 3PE SIN PRÄ"}) {
    auto once = format_tag(parse_tag(s, TagSetKind::large));
    CHECK(format_tag(parse_tag(once, TagSetKind::large)) == once);
  }
}

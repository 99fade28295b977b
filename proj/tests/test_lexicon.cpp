#include "doctest.h"

#include <algorithm>

#include "morphy/lexicon.hpp"
#include "seed_data.hpp"

using namespace morphy;

namespace {
const std::string kFluss = "Fluß\tSUB\tn_e\tgender=MAS\tflags=umlaut_in_paradigm,ss_sharp_shift";
}

TEST_CASE("load_lexicon accepts a line with key=value columns") {
  auto lex = load_lexicon(kFluss + "\n", &seed::classes());
  REQUIRE(lex.size() == 1);
  const auto& e = lex.entries().front();
  CHECK(e.root == "Fluß");
  CHECK(e.pos == "SUB");
  CHECK(e.class_id == "n_e");
  CHECK(e.gender == "MAS");
  CHECK(e.has(EntryFlag::umlaut_in_paradigm));
  CHECK(e.has(EntryFlag::ss_sharp_shift));
  CHECK_FALSE(e.has(EntryFlag::no_ge_participle));

  // Oracle: save then load gives the same entry set, and saving again is byte-stable.
  auto saved = save_lexicon(lex);
  CHECK(saved == "Fluß\tSUB\tn_e\tgender=MAS,flags=umlaut_in_paradigm,ss_sharp_shift\n");
  auto again = load_lexicon(saved, &seed::classes());
  CHECK(again == lex);
  CHECK(save_lexicon(again) == saved);
}

TEST_CASE("empty input and empty lexicon") {
  CHECK(load_lexicon("").empty());
  CHECK(load_lexicon("# only a comment\n\n").empty());
  CHECK(save_lexicon(Lexicon{}).empty());
}

TEST_CASE("malformed lines report their line number") {
  try {
    load_lexicon("# header\nFluß\tSUB\n");
    FAIL("expected an error");
  } catch (const LexiconError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).rfind("line 2:", 0) == 0);
  }
  CHECK_THROWS_AS(load_lexicon("Fluß\tSUB\tn_nope\tgender=MAS\n", &seed::classes()), LexiconError);
  CHECK_THROWS_AS(load_lexicon("Fluß\tSUB\tn_e\tgender=MAS,flags=sparkly\n"), LexiconError);
  CHECK_THROWS_AS(load_lexicon("Fluß\tSUB\tn_e\tcolour=blue\n"), LexiconError);
  CHECK_THROWS_AS(load_lexicon("Fluß\tSUB\tn_e\t\n"), LexiconError);  // noun without gender
  CHECK_THROWS_AS(load_lexicon("gehen\tVER\tv_weak\tprefix=ab\n"), LexiconError);
  CHECK_THROWS_AS(load_lexicon("gehen\tVERB\tv_weak\t\n"), LexiconError);
  CHECK_THROWS_AS(load_lexicon("spielen\tVER\tv_weak\toverride.nonslot=x\n", &seed::classes()), LexiconError);
}

TEST_CASE("byte-identical duplicates are rejected, homographs kept") {
  Lexicon lex;
  CHECK(lex.add(seed::entry("Winde\tSUB\tn_n_fem\tgender=FEM")));
  CHECK_FALSE(lex.add(seed::entry("Winde\tSUB\tn_n_fem\tgender=FEM")));
  CHECK(lex.add(seed::entry("Winde\tSUB\tn_e\tgender=MAS")));
  CHECK(lex.size() == 2);
}

TEST_CASE("two entries with the same root save in a stable order") {
  Lexicon a;
  a.add(seed::entry("spielen\tVER\tv_weak\tprefix=ver,prefix_kind=inseparable"));
  a.add(seed::entry("spielen\tVER\tv_weak\t"));
  Lexicon b;
  b.add(seed::entry("spielen\tVER\tv_weak\t"));
  b.add(seed::entry("spielen\tVER\tv_weak\tprefix=ver,prefix_kind=inseparable"));
  auto text = save_lexicon(a);
  CHECK(text == save_lexicon(b));
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(save_lexicon(load_lexicon(text)) == text);
}

TEST_CASE("seed lexicon round-trips") {
  const auto& lex = seed::lexicon();
  CHECK(lex.size() >= 200);
  auto text = save_lexicon(lex);
  auto again = load_lexicon(text, &seed::classes());
  CHECK(again == lex);
  CHECK(save_lexicon(again) == text);
}

TEST_CASE("lookup_roots is exact-match") {
  const auto& lex = seed::lexicon();
  auto fluss = lex.lookup_roots("Fluß");
  REQUIRE(fluss.size() == 1);
  CHECK(fluss[0].pos == "SUB");

  auto nehmen = lex.lookup_roots("nehmen");
  CHECK(std::any_of(nehmen.begin(), nehmen.end(), [](const LexiconEntry& e) {
    return e.prefix == "ein" && e.prefix_kind == PrefixKind::separable;
  }));
  for (const auto& e : nehmen) CHECK(e.root == "nehmen");

  CHECK(lex.lookup_roots("xyzzy").empty());
  CHECK(lex.lookup_roots("fluß").empty());
  for (const auto& e : lex.entries())
    for (const auto& hit : lex.lookup_roots(e.root)) CHECK(hit.root == e.root);
}

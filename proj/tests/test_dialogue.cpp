#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "morphy/dialogue.hpp"
#include "morphy/inflection.hpp"
#include "seed_data.hpp"

using namespace morphy;

namespace {

std::vector<std::string> labels(const Question& q) {
  std::vector<std::string> out;
  for (const auto& a : q.alternatives) out.push_back(a.label);
  return out;
}

std::set<std::string> surfaces(const LexiconEntry& e) {
  std::set<std::string> out;
  for (const auto& r : generate_forms(e, seed::classes()).rows) out.insert(r.surface);
  return out;
}

// Visits every terminal state reachable from `s`.
void walk(const DialogueState& s, int depth, const std::function<void(const DialogueState&, int)>& leaf) {
  if (s.complete()) {
    leaf(s, depth);
    return;
  }
  for (std::size_t i = 1; i <= s.pending->alternatives.size(); ++i)
    walk(answer(s, static_cast<int>(i), seed::classes()), depth + 1, leaf);
}

}  // namespace

TEST_CASE("the telefonieren dialogue") {
  const auto& cls = seed::classes();
  auto s = start_classification("VER", "telefonieren", cls);
  REQUIRE(s.pending);
  CHECK(s.pending->text == "Wird das Verb schwach konjugiert?");
  CHECK(labels(*s.pending) == std::vector<std::string>{"Ja", "Nein"});

  s = answer(s, 1, cls);
  REQUIRE(s.pending);
  CHECK(s.pending->text == "Wie lautet die 2. Person Singular Präsens?");
  CHECK(labels(*s.pending) ==
        std::vector<std::string>{"du telefonierst", "du telefonierest", "du telefoniert"});

  s = answer(s, 1, cls);
  REQUIRE(s.pending);
  CHECK(s.pending->text == "Wie lautet das Partizip des Verbs?");
  CHECK(labels(*s.pending) == std::vector<std::string>{"telefoniert", "getelefoniert"});

  s = answer(s, 1, cls);
  CHECK(s.complete());
  CHECK(s.answered.size() == 3);
  CHECK(s.draft.class_id == "v_weak");
  CHECK(s.draft.has(EntryFlag::no_ge_participle));
  CHECK(s.draft.prefix.empty());
  auto forms = surfaces(s.draft);
  CHECK(forms.count("telefonierst"));
  CHECK(forms.count("telefoniert"));
  CHECK_FALSE(forms.count("getelefoniert"));
  CHECK_THROWS_AS(answer(s, 1, cls), DialogueError);
}

TEST_CASE("spielen takes the ge participle") {
  const auto& cls = seed::classes();
  auto s = start_classification("VER", "spielen", cls);
  for (int c : {1, 1, 2}) s = answer(s, c, cls);
  REQUIRE(s.complete());
  CHECK(s.draft.class_id == "v_weak");
  CHECK_FALSE(s.draft.has(EntryFlag::no_ge_participle));
  CHECK(surfaces(s.draft).count("gespielt"));
}

TEST_CASE("prefixed verbs") {
  const auto& cls = seed::classes();
  auto s = start_classification("VER", "abspielen", cls);
  REQUIRE(s.pending);
  CHECK(s.pending->id == "prefix");
  CHECK(labels(*s.pending) == std::vector<std::string>{"abzuspielen", "zu abspielen"});
  for (int c : {1, 1, 1}) s = answer(s, c, cls);
  REQUIRE(s.complete());
  CHECK(s.draft.prefix == "ab");
  CHECK(s.draft.prefix_kind == PrefixKind::separable);
  auto forms = surfaces(s.draft);
  CHECK(forms.count("abzuspielen"));
  CHECK(forms.count("abgespielt"));

  s = start_classification("VER", "verspielen", cls);
  for (int c : {1, 1, 1}) s = answer(s, c, cls);
  REQUIRE(s.complete());
  CHECK(s.draft.prefix == "ver");
  CHECK(s.draft.prefix_kind == PrefixKind::inseparable);
  CHECK(surfaces(s.draft).count("verspieltest"));
}

TEST_CASE("a strong verb") {
  const auto& cls = seed::classes();
  auto s = start_classification("VER", "singen", cls);
  s = answer(s, 2, cls);
  REQUIRE(s.pending);
  CHECK(s.pending->id == "pret");
  auto pick = [&](const std::string& label) {
    auto ls = labels(*s.pending);
    auto it = std::find(ls.begin(), ls.end(), label);
    REQUIRE(it != ls.end());
    s = answer(s, static_cast<int>(it - ls.begin()) + 1, cls);
  };
  pick("ich sang");
  pick("gesungen");
  pick("du singst");
  REQUIRE(s.complete());
  auto forms = surfaces(s.draft);
  for (const char* w : {"sang", "sangen", "gesungen", "singst", "sänge"}) CHECK_MESSAGE(forms.count(w), w);
}

TEST_CASE("noun and adjective trees") {
  const auto& cls = seed::classes();
  auto s = start_classification("SUB", "Haus", cls);
  REQUIRE(s.pending);
  CHECK(s.pending->id == "gender");
  CHECK(labels(*s.pending) == std::vector<std::string>{"der Haus", "die Haus", "das Haus"});
  s = answer(s, 3, cls);
  auto ls = labels(*s.pending);
  auto it = std::find(ls.begin(), ls.end(), "die Häuser");
  REQUIRE(it != ls.end());
  s = answer(s, static_cast<int>(it - ls.begin()) + 1, cls);
  REQUIRE(s.complete());  // a sibilant root has only the -es genitive
  CHECK(s.draft.class_id == "n_er");
  CHECK(surfaces(s.draft).count("Häusern"));

  s = start_classification("SUB", "Tag", cls);
  s = answer(s, 1, cls);
  s = answer(s, 1, cls);  // die Tage
  REQUIRE(s.pending);
  CHECK(s.pending->id == "genitive");
  CHECK(labels(*s.pending) == std::vector<std::string>{"des Tages", "des Tages / des Tags"});
  s = answer(s, 2, cls);
  REQUIRE(s.complete());
  CHECK(s.draft.class_id == "n_e_s");

  s = start_classification("ADJ", "edel", cls);
  CHECK(labels(*s.pending).front() == "edler");
  s = answer(s, 1, cls);
  REQUIRE(s.complete());
  CHECK(surfaces(s.draft).count("edlem"));
}

TEST_CASE("closed classes and errors") {
  const auto& cls = seed::classes();
  auto s = start_classification("PRP", "durch", cls);
  CHECK(s.complete());
  CHECK(s.answered.empty());
  CHECK(s.draft.class_id == "uninfl");
  CHECK(surfaces(s.draft) == std::set<std::string>{"durch"});

  CHECK_THROWS_AS(start_classification("VER", "", cls), DialogueError);
  CHECK_THROWS_AS(start_classification("ART", "das", cls), DialogueError);
  auto v = start_classification("VER", "spielen", cls);
  CHECK_THROWS_AS(answer(v, 9, cls), DialogueError);
  CHECK_THROWS_AS(answer(v, 0, cls), DialogueError);
}

TEST_CASE("every path terminates soundly within eight questions") {
  const std::vector<std::pair<std::string, std::string>> inputs{
      {"VER", "telefonieren"}, {"VER", "spielen"},  {"VER", "abspielen"}, {"VER", "küssen"}, {"VER", "flattern"},
      {"VER", "finden"},       {"VER", "nehmen"},   {"VER", "einnehmen"}, {"VER", "verstehen"},
      {"VER", "laufen"},       {"SUB", "Haus"},     {"SUB", "Fluß"},      {"SUB", "Blume"},  {"SUB", "Lehrerin"},
      {"SUB", "Meister"},      {"SUB", "Bauer"},    {"SUB", "Wagen"},     {"ADJ", "edel"},   {"ADJ", "alt"},
      {"ADJ", "leise"},        {"ADJ", "schön"},    {"EIG", "Egon"},      {"ADV", "schon"},  {"PRO POS", "mein"}};
  std::size_t leaves = 0;
  for (const auto& [pos, root] : inputs) {
    walk(start_classification(pos, root, seed::classes()), 0, [&](const DialogueState& s, int depth) {
      ++leaves;
      CHECK(depth <= 8);
      CHECK_NOTHROW(validate_entry(s.draft, &seed::classes()));
      auto forms = surfaces(s.draft);
      for (const auto& a : s.answered)
        if (!a.surface.empty()) CHECK_MESSAGE(forms.count(a.surface), root << ": " << a.surface);
    });
  }
  CHECK(leaves > inputs.size());
}

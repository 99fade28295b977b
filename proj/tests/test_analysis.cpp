#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "morphy/analysis.hpp"
#include "morphy/utf8.hpp"
#include "seed_data.hpp"

using namespace morphy;

namespace {

const Analyzer& analyzer() {
  static const Analyzer a(seed::lexicon(), seed::classes());
  return a;
}

using Reading = std::pair<std::string, std::string>;  // lemma, canonical tag

std::set<Reading> readings(const std::vector<Analysis>& as) {
  std::set<Reading> out;
  for (const auto& a : as) out.emplace(a.lemma, format_tag(a.tag));
  return out;
}

std::set<Reading> expect(const std::string& lemma, std::initializer_list<const char*> tags) {
  std::set<Reading> out;
  for (const char* t : tags) out.emplace(lemma, format_tag(parse_tag(t, TagSetKind::large)));
  return out;
}

bool has_candidate(const std::vector<RootCandidate>& cs, const std::string& root, const std::string& suffix) {
  return std::any_of(cs.begin(), cs.end(), [&](const RootCandidate& c) { return c.root == root && c.suffix == suffix; });
}

}  // namespace

TEST_CASE("candidate_roots") {
  auto fl = candidate_roots("Flüssen", seed::classes());
  CHECK(has_candidate(fl, "Fluß", "en"));
  CHECK(has_candidate(fl, "Flüssen", ""));

  auto ku = candidate_roots("küsse", seed::classes());
  CHECK(has_candidate(ku, "küss", "e"));
  CHECK(has_candidate(ku, "kuß", "e"));
  CHECK(has_candidate(candidate_roots("Küsse", seed::classes()), "Kuß", "e"));

  auto xyz = candidate_roots("xyz", seed::classes());
  REQUIRE(xyz.size() == 1);
  CHECK(xyz[0].root == "xyz");
  CHECK(xyz[0].suffix.empty());

  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& c : fl) CHECK(seen.emplace(c.root, c.suffix).second);
}

TEST_CASE("reverse_umlaut") {
  CHECK(reverse_umlaut("Flüss") == "Fluss");
  CHECK(reverse_umlaut("Häus") == "Haus");
  CHECK(reverse_umlaut("Meister") == "Meister");
}

TEST_CASE("analyze reproduces the simple-word examples") {
  const auto& a = analyzer();
  CHECK(readings(a.analyze("Flüssen")) == expect("Fluß", {"SUB DAT PLU MAS"}));
  auto kuesse = expect("Kuß", {"SUB NOM PLU MAS", "SUB GEN PLU MAS", "SUB AKK PLU MAS"});
  auto verb = expect("küssen", {"VER 1PE SIN PRÄ", "VER 1PE SIN KJ1", "VER 3PE SIN KJ1", "VER IMP SIN"});
  CHECK(readings(a.analyze("Küsse")) == kuesse);  // case-exact
  auto all = kuesse;
  all.insert(verb.begin(), verb.end());
  CHECK(readings(a.analyze_initial("Küsse")) == all);
  CHECK(a.analyze_initial("Küsse").size() == 7);
  CHECK(readings(a.analyze("einnahm")) == expect("(ein)nehmen", {"VER 1PE SIN PRT", "VER 3PE SIN PRT"}));
  CHECK(readings(a.analyze("verspieltest")) == expect("ver-spielen", {"VER 2PE SIN PRT", "VER 2PE SIN KJ2"}));
  CHECK(readings(a.analyze("verspieltes")) ==
        expect("verspielt (ver-spielen)", {"ADJ NOM SIN NEU", "ADJ AKK SIN NEU"}));
  CHECK(readings(a.analyze("edlem")) == expect("edel", {"ADJ DAT SIN NEU", "ADJ DAT SIN MAS"}));
}

TEST_CASE("compound segmentation") {
  const auto& a = analyzer();
  auto bh = a.analyze("Bauernhäusern");
  REQUIRE(bh.size() == 1);
  CHECK(format_tag(bh[0].tag) == "SUB DAT NEU PLU");
  CHECK(bh[0].segments == std::vector<std::string>{"Bauer", "Haus"});
  CHECK(bh[0].links == std::vector<std::string>{"n"});
  CHECK(utf8::join(bh[0].pieces, "") == "Bauernhäusern");

  auto sh = a.analyze("Schiffahrtshafenmeisters");
  REQUIRE(sh.size() == 1);
  CHECK(format_tag(sh[0].tag) == "SUB GEN MAS SIN");
  CHECK(sh[0].segments == std::vector<std::string>{"Schiff", "Fahrt", "Hafen", "Meister"});
  CHECK(utf8::join(sh[0].pieces, "") == "Schiffahrtshafenmeisters");
  CHECK(sh[0].links == std::vector<std::string>{"", "s", ""});

  CHECK(a.segment_compound("Hausxyz").empty());
  CHECK(a.analyze("Hausxyz").empty());
  CHECK(a.segment_compound("bauernhäusern").empty());  // compounds are nouns
}

TEST_CASE("compound pieces reassemble the input") {
  const auto& a = analyzer();
  for (const char* w : {"Bauernhäusern", "Schiffahrtshafenmeisters", "Schiffahrt", "Kinderzimmer", "Stadtpark",
                        "Hafenstadt", "Wohnhaus", "Kleinstadt"}) {
    auto rs = a.segment_compound(w);
    CHECK_MESSAGE(!rs.empty(), w);
    for (const auto& r : rs) {
      CHECK(utf8::join(r.pieces, "") == w);
      CHECK(r.segments.size() == r.pieces.size());
      CHECK(r.links.size() + 1 == r.pieces.size());
    }
  }
}

TEST_CASE("analyze is duplicate-free and ordered by tag") {
  const auto& a = analyzer();
  for (const char* w : {"die", "Winde", "meine", "das", "Essen"}) {
    auto rs = a.analyze(w);
    for (std::size_t i = 1; i < rs.size(); ++i) {
      CHECK(format_tag(rs[i - 1].tag) <= format_tag(rs[i].tag));
      CHECK_FALSE(rs[i - 1] == rs[i]);
    }
    CHECK(rs == a.analyze(w));
  }
}

TEST_CASE("round trip and full-form equivalence on a sample") {
  const auto& a = analyzer();
  auto ffl = expand_full_form_lexicon(seed::lexicon(), seed::classes());
  std::size_t i = 0;
  for (const auto& [surface, expected] : ffl) {
    if (i++ % 7) continue;  // the acceptance suite covers every surface
    auto got = readings(a.analyze(surface));
    CHECK(got == std::set<Reading>(expected.begin(), expected.end()));
    CHECK(got == readings(a.lookup_full_form(surface, ffl)));
  }
}

TEST_CASE("train_suffix_model counts every proper suffix") {
  auto m = train_suffix_model({{"spielst", parse_tag("VER 2PE SIN", TagSetKind::large)}}, TagSetKind::large, 3);
  CHECK(m.counts.size() == 3);
  for (const char* s : {"t", "st", "lst"}) {
    REQUIRE(m.counts.count(s));
    CHECK(m.counts.at(s).at("VER 2PE SIN") == 1.0);
  }
  CHECK(train_suffix_model(std::vector<std::pair<std::string, Tag>>{}, TagSetKind::small).empty());

  auto cap = train_suffix_model({{"Haus", make_small("SUB")}, {".", make_small("SZE")}}, TagSetKind::small, 5);
  CHECK(cap.totals.at(SuffixModel::kCapKey) == 1.0);
  CHECK(cap.totals.at("s") == 1.0);
  CHECK_FALSE(cap.counts.count("."));
}

TEST_CASE("guess_unknown") {
  SuffixModel empty;
  auto uni = guess_unknown("Q", empty);
  REQUIRE(uni.size() == open_class_tags(TagSetKind::small).size());
  for (const auto& [t, p] : uni) CHECK(p == doctest::Approx(1.0 / uni.size()));

  auto ffl = expand_full_form_lexicon(seed::lexicon(), seed::classes());
  for (auto kind : {TagSetKind::small, TagSetKind::large}) {
    auto m = train_suffix_model(ffl, kind);
    for (const char* w : {"Verspätung", "grunzelte", "Q", "xyzzy", "Blubberei", "schnurpst"}) {
      auto d = guess_unknown(w, m);
      double sum = 0;
      for (const auto& [t, p] : d) {
        sum += p;
        CHECK_FALSE(is_punctuation(t));
        CHECK(t.kind == kind);
      }
      CHECK(std::abs(sum - 1.0) < 1e-9);
      CHECK(d == guess_unknown(w, m));
    }
    double sub = 0;
    for (const auto& [t, p] : guess_unknown("Verspätung", m))
      if (t.pos == "SUB") sub += p;
    CHECK(sub > 0.5);
  }
}

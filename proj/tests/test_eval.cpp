#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "morphy/eval.hpp"
#include "morphy/io.hpp"
#include "morphy/utf8.hpp"
#include "seed_data.hpp"

using namespace morphy;

namespace {

const Models& desk_models(TagSetKind kind) {
  static const Models small = train_models(seed::desk_corpus(), TagSetKind::small);
  static const Models large = train_models(seed::desk_corpus(), TagSetKind::large);
  return kind == TagSetKind::small ? small : large;
}

// Gold tags copied into tagger output form.
std::vector<TaggedSentence> as_predicted(const AnnotatedCorpus& c, TagSetKind kind) {
  std::vector<TaggedSentence> out;
  for (const auto& s : c.sentences) {
    TaggedSentence ts;
    for (const auto& t : s) ts.tokens.emplace_back(t.surface, to_kind(t.tag, kind));
    out.push_back(std::move(ts));
  }
  return out;
}

std::size_t changed_surfaces(const AnnotatedCorpus& a, const AnnotatedCorpus& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.sentences.size(); ++i)
    for (std::size_t j = 0; j < a.sentences[i].size(); ++j) n += a.sentences[i][j].surface != b.sentences[i][j].surface;
  return n;
}

std::size_t open_class_tokens(const AnnotatedCorpus& c) {
  std::size_t n = 0;
  for (const auto& s : c.sentences)
    for (const auto& t : s) n += is_open_class(t.tag);
  return n;
}

}  // namespace

TEST_CASE("corpus reading") {
  auto c = read_corpus("Die\tART DEF NOM SIN FEM\nFrau\tSUB NOM FEM SIN\n\n");
  REQUIRE(c.sentences.size() == 1);
  REQUIRE(c.sentences[0].size() == 2);
  CHECK(format_tag(c.sentences[0][0].tag) == "ART DEF NOM FEM SIN");
  CHECK(c.sentences[0][1].surface == "Frau");

  CHECK(read_corpus("").sentences.empty());

  try {
    read_corpus("Die\tBOGUS\n");
    FAIL("accepted an invalid tag");
  } catch (const CorpusError& e) {
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(read_corpus("Die\n"), CorpusError);
}

TEST_CASE("corpus round trip is byte stable") {
  const auto& desk = seed::desk_corpus();
  const auto text = write_corpus(desk);
  const auto again = read_corpus(text);
  CHECK(again == desk);
  CHECK(write_corpus(again) == text);
  CHECK(text == io::read_file(seed::kDataDir + "/desk_corpus.tsv"));
}

TEST_CASE("evaluate") {
  const auto& gold = seed::desk_corpus();
  for (auto kind : {TagSetKind::small, TagSetKind::large}) {
    auto pred = as_predicted(gold, kind);
    auto r = evaluate(gold, pred, kind);
    CHECK(r.accuracy == 1.0);
    CHECK(r.token_count == gold.token_count());
    CHECK(r.word_accuracy == 1.0);
  }

  SUBCASE("all wrong") {
    auto pred = as_predicted(gold, TagSetKind::small);
    const auto adv = make_small("ADV"), kon = make_small("KON");
    for (auto& s : pred)
      for (auto& [w, t] : s.tokens) t = t == adv ? kon : adv;
    auto r = evaluate(gold, pred, TagSetKind::small);
    CHECK(r.accuracy == 0.0);
    CHECK(r.correct_count == 0);
  }

  SUBCASE("matches a naive recount and ignores sentence order") {
    const auto& m = desk_models(TagSetKind::small);
    Tagger tagger(seed::analyzer(), m);
    auto [train, hold] = split_corpus(gold, 0.2, 7);
    auto pred = tag_corpus(tagger, Algorithm::varcontext, hold);
    auto r = evaluate(hold, pred, TagSetKind::small, [](const std::string& w) { return w.size() > 6; });

    std::size_t n = 0, ok = 0, words = 0, words_ok = 0, unk = 0, unk_ok = 0;
    for (std::size_t i = 0; i < pred.size(); ++i)
      for (std::size_t j = 0; j < pred[i].tokens.size(); ++j) {
        const auto g = format_tag(map_large_to_small(hold.sentences[i][j].tag));
        const bool hit = format_tag(pred[i].tokens[j].second) == g;
        ++n, ok += hit;
        if (g.rfind("SZ", 0) != 0) ++words, words_ok += hit;
        if (hold.sentences[i][j].surface.size() > 6) ++unk, unk_ok += hit;
      }
    CHECK(r.token_count == n);
    CHECK(r.correct_count == ok);
    CHECK(r.word_count == words);
    CHECK(r.word_correct == words_ok);
    CHECK(r.unknown_count == unk);
    CHECK(r.unknown_correct == unk_ok);
    std::size_t confusion_total = 0;
    for (const auto& [k, c] : r.confusion) confusion_total += c;
    CHECK(confusion_total == n);

    AnnotatedCorpus reversed = hold;
    std::reverse(reversed.sentences.begin(), reversed.sentences.end());
    auto pred_rev = pred;
    std::reverse(pred_rev.begin(), pred_rev.end());
    auto r2 = evaluate(reversed, pred_rev, TagSetKind::small, [](const std::string& w) { return w.size() > 6; });
    CHECK(r2.accuracy == r.accuracy);
    CHECK(r2.confusion == r.confusion);
  }

  SUBCASE("shape mismatch") {
    auto pred = as_predicted(gold, TagSetKind::small);
    pred.pop_back();
    CHECK_THROWS_AS(evaluate(gold, pred, TagSetKind::small), EvalError);
    pred = as_predicted(gold, TagSetKind::small);
    pred[3].tokens.pop_back();
    CHECK_THROWS_AS(evaluate(gold, pred, TagSetKind::small), EvalError);
  }
}

TEST_CASE("report has a machine-readable section") {
  const auto& gold = seed::desk_corpus();
  auto text = format_report(evaluate(gold, as_predicted(gold, TagSetKind::large), TagSetKind::large));
  CHECK(text.find("\naccuracy\t1.000000\n") != std::string::npos);
  CHECK(text.find("\ntoken_count\t" + std::to_string(gold.token_count()) + "\n") != std::string::npos);
  CHECK(text.find("tagset\tlarge") != std::string::npos);
}

TEST_CASE("tag_corpus does not depend on the thread count") {
  Tagger tagger(seed::analyzer(), desk_models(TagSetKind::large));
  const auto& desk = seed::desk_corpus();
  for (auto algo : {Algorithm::church, Algorithm::varcontext}) {
    auto one = tag_corpus(tagger, algo, desk, 1);
    CHECK(tag_corpus(tagger, algo, desk, 4) == one);
    CHECK(tag_corpus(tagger, algo, desk, 0) == one);
  }
}

TEST_CASE("splits") {
  const auto& desk = seed::desk_corpus();
  auto [train, hold] = split_corpus(desk, 0.2, 42);
  CHECK(train.sentences.size() + hold.sentences.size() == desk.sentences.size());
  CHECK(hold.sentences.size() == desk.sentences.size() / 5);
  auto [train2, hold2] = split_corpus(desk, 0.2, 42);
  CHECK(train2 == train);
  CHECK(hold2 == hold);
  CHECK(split_corpus(desk, 0.2, 43).second != hold);

  auto part = take_tokens(train, 500);
  CHECK(part.token_count() >= 500);
  CHECK(part.token_count() - part.sentences.back().size() < 500);
  CHECK(take_tokens(train, 0).sentences.empty());
  CHECK_THROWS_AS(take_tokens(train, train.token_count() + 1), EvalError);

  auto folds = cross_validation(desk, 5, 42);
  REQUIRE(folds.size() == 5);
  std::size_t tested = 0;
  for (const auto& [tr, te] : folds) {
    CHECK(tr.token_count() + te.token_count() == desk.token_count());
    tested += te.sentences.size();
  }
  CHECK(tested == desk.sentences.size());
}

TEST_CASE("learning curve") {
  auto [train, hold] = split_corpus(seed::desk_corpus(), 0.2, 42);
  const auto full = train.token_count();
  const std::vector<std::size_t> sizes{0, full / 10, full};
  for (auto kind : {TagSetKind::small, TagSetKind::large})
    for (auto algo : {Algorithm::church, Algorithm::varcontext}) {
      CAPTURE(to_string(kind));
      CAPTURE(to_string(algo));
      auto curve = learning_curve(train, hold, seed::analyzer(), algo, kind, sizes);
      REQUIRE(curve.size() == 3);
      CHECK(curve[2].second >= curve[1].second);
      CHECK(curve[1].second > curve[0].second);
      CHECK(learning_curve(train, hold, seed::analyzer(), algo, kind, sizes) == curve);
    }
  auto base = evaluate(hold, baseline_tags(hold, seed::analyzer(), TagSetKind::small), TagSetKind::small);
  CHECK(learning_curve(train, hold, seed::analyzer(), Algorithm::church, TagSetKind::small, {0})[0].second ==
        base.accuracy);
  CHECK_THROWS_AS(learning_curve(train, hold, seed::analyzer(), Algorithm::church, TagSetKind::small, {full + 1}),
                  EvalError);
}

TEST_CASE("perturbation") {
  const auto& desk = seed::desk_corpus();
  const auto& an = seed::analyzer();
  CHECK(write_corpus(perturb_unknowns(desk, 0.0, 5, an)) == write_corpus(desk));

  const auto w = open_class_tokens(desk);
  auto p = perturb_unknowns(desk, 0.02, 5, an);
  CHECK(changed_surfaces(desk, p) == w * 2 / 100);
  CHECK(perturb_unknowns(desk, 0.02, 5, an) == p);
  CHECK(perturb_unknowns(desk, 0.02, 6, an) != p);

  auto all = perturb_unknowns(desk, 1.0, 5, an);
  CHECK(changed_surfaces(desk, all) == w);
  for (std::size_t i = 0; i < desk.sentences.size(); ++i)
    for (std::size_t j = 0; j < desk.sentences[i].size(); ++j) {
      const auto& a = desk.sentences[i][j];
      const auto& b = all.sentences[i][j];
      CHECK(a.tag == b.tag);
      if (a.surface == b.surface) continue;
      CHECK(an.analyze_initial(b.surface).empty());
      CHECK(utf8::is_upper_initial(a.surface) == utf8::is_upper_initial(b.surface));
      CHECK(utf8::last_chars(a.surface, 2) == utf8::last_chars(b.surface, 2));
    }
  CHECK_THROWS_AS(perturb_unknowns(desk, 1.5, 5, an), EvalError);
}

TEST_CASE("ambiguity rate") {
  Tagger small(seed::analyzer(), desk_models(TagSetKind::small));
  Tagger large(seed::analyzer(), desk_models(TagSetKind::large));
  AnnotatedCorpus punct = read_corpus(".\tSZE\n,\tSZK\n!\tSZE\n\n");
  CHECK(ambiguity_rate(punct, small) == 1.0);
  CHECK(ambiguity_rate(punct, large) == 1.0);
  const auto& desk = seed::desk_corpus();
  const double s = ambiguity_rate(desk, small), l = ambiguity_rate(desk, large);
  CHECK(s > 1.0);
  CHECK(l >= s);
}

TEST_CASE("n-gram growth") {
  for (const auto& row : ngram_growth({"a"}, {2, 3, 4}, {1})) CHECK(row.distinct == 0);
  CHECK(ngram_growth({"a", "b", "a", "b"}, {2}, {4})[0].distinct == 2);
  CHECK_THROWS_AS(ngram_growth({"a"}, {2}, {3, 2}), EvalError);

  auto stream = tokenize(io::read_file(seed::kDataDir + "/desk_text.txt"));
  REQUIRE(stream.size() >= 100000);
  const std::vector<std::size_t> cps{1000, 10000, 50000, stream.size()};
  auto rows = ngram_growth(stream, {2, 3, 4}, cps);
  REQUIRE(rows.size() == 12);
  for (std::size_t i = 3; i < rows.size(); ++i) CHECK(rows[i].distinct >= rows[i - 3].distinct);
  CHECK(rows[11].distinct > rows[10].distinct);
  CHECK(rows[10].distinct > rows[9].distinct);
}

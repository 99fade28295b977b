#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "morphy/io.hpp"
#include "morphy/lexicon.hpp"
#include "morphy/tagger.hpp"
#include "seed_data.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

struct Scratch {
  fs::path dir;
  Scratch() {
    std::random_device rd;
    dir = fs::temp_directory_path() / ("morphy-cli-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(dir);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

// Runs the CLI through the shell with a clean MORPHY_* environment unless
// `env` sets some.
Run cli(const std::string& args, const std::string& stdin_text = "", const std::string& env = "") {
  static Scratch io_dir;
  static int n = 0;
  const auto in = io_dir.path("in" + std::to_string(++n)), err = io_dir.path("err" + std::to_string(n));
  morphy::io::write_file_atomic(in, stdin_text);
  const std::string cmd = "env -u MORPHY_MODELS -u MORPHY_LEXICON -u MORPHY_DATA_DIR " + env + " '" MORPHY_CLI "' " +
                          args + " < '" + in + "' 2> '" + err + "'";
  Run r{-1, "", ""};
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = morphy::io::read_file(err);
  return r;
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("analyze") {
  auto r = cli("analyze Küsse");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 7);
  CHECK(r.out.find("Küsse\tKuß\tSUB NOM MAS PLU\n") != std::string::npos);
  CHECK(r.out.find("Küsse\tküssen\tVER SIN IMP\n") != std::string::npos);

  r = cli("analyze", "Bauernhäusern Qwzx");
  CHECK(r.code == 0);
  CHECK(r.out == "Bauernhäusern\tBauernhaus\tSUB DAT NEU PLU\tBauer+Haus\nQwzx\t?\n");
}

TEST_CASE("train then tag") {
  Scratch s;
  auto r = cli("train --tagset small --out " + s.path("small.models"));
  REQUIRE(r.code == 0);
  CHECK(morphy::load_models_file(s.path("small.models")).kind() == morphy::TagSetKind::small);

  const std::string expected = "Die\tART DEF\nFrau\tSUB\nbringt\tVER\ndas\tART DEF\nEssen\tSUB\n.\tSZE\n\n";
  r = cli("tag --algo church --tagset small --models " + s.path("small.models"), "Die Frau bringt das Essen .");
  CHECK(r.code == 0);
  CHECK(r.out == expected);

  // Environment fallback, and the flag winning over the environment.
  r = cli("tag", "Die Frau bringt das Essen .", "MORPHY_MODELS=" + s.path("small.models"));
  CHECK(r.code == 0);
  CHECK(r.out == expected);
  r = cli("tag --models " + s.path("small.models"), "Die Frau bringt das Essen .",
             "MORPHY_MODELS=" + s.path("missing.models"));
  CHECK(r.code == 0);

  r = cli("tag --tagset large --models " + s.path("small.models"), "Die Frau .");
  CHECK(r.code == 2);

  r = cli("eval --models " + s.path("small.models"));
  CHECK(r.code == 0);
  CHECK(r.out.find("\ntoken_count\t" + std::to_string(seed::desk_corpus().token_count()) + "\n") !=
        std::string::npos);
}

TEST_CASE("usage and data errors") {
  auto r = cli("tag", "Die Frau .");
  CHECK(r.code == 1);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(r.out.empty());

  CHECK(cli("").code == 1);
  CHECK(cli("frobnicate").code == 1);
  CHECK(cli("analyze --no-such-flag").code == 1);
  CHECK(cli("tag --algo viterbi --models x").code == 1);

  CHECK(cli("tag --models /nonexistent/models", "Die Frau .").code == 2);
  r = cli("eval --models /nonexistent/models");
  CHECK(r.code == 2);
  r = cli("train --in -", "Die\tBOGUS\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("line 1") != std::string::npos);
  CHECK(cli("generate Nichtda").code == 2);
  CHECK(cli("analyze Küsse", "", "MORPHY_DATA_DIR=/nonexistent").code == 2);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("outputs are deterministic") {
  for (const std::string args : {"perturb --seed 3", "curve --sizes 0,500,1000 --tagset large", "ngrams --checkpoints 500,5000"}) {
    auto a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  auto p = cli("perturb --rate 0");
  CHECK(p.out == morphy::io::read_file(seed::kDataDir + "/desk_corpus.tsv"));
}

TEST_CASE("generate and expand") {
  auto r = cli("generate telefonieren");
  CHECK(r.code == 0);
  CHECK(r.out.find("telefonierst\tVER 2PE SIN PRÄ\t") != std::string::npos);
  r = cli("generate --entry 'faxen\tVER\tv_weak\t'");
  CHECK(r.code == 0);
  CHECK(r.out.find("gefaxt\t") != std::string::npos);
  r = cli("expand");
  CHECK(r.code == 0);
  CHECK(r.out.find("Küsse\tKuß\tSUB NOM MAS PLU\n") != std::string::npos);
}

TEST_CASE("lexicon-add dialogue") {
  Scratch s;
  const auto lex = s.path("lexicon.tsv");
  fs::copy_file(seed::kDataDir + "/lexicon.tsv", lex);

  auto r = cli("lexicon-add --lexicon " + lex + " telefonieren", "1\n1\n1\n2\n");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("1. Geben Sie den Stamm ein: telefonieren\n"
                    "2. Wird das Verb schwach konjugiert?\n   1: Ja\n   2: Nein\n"
                    "3. Wie lautet die 2. Person Singular Präsens?\n"
                    "   1: du telefonierst\n   2: du telefonierest\n   3: du telefoniert\n"
                    "4. Wie lautet das Partizip des Verbs?\n   1: telefoniert\n   2: getelefoniert\n"
                    "Verb klassifiziert!\n",
                    0) == 0);

  // Root typed at the prompt, an invalid answer re-asked, then stored.
  r = cli("lexicon-add --lexicon " + lex, "faxen\n7\n1\n1\n2\n1\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("Bitte eine Zahl") != std::string::npos);
  auto stored = morphy::load_lexicon_file(lex, &seed::classes());
  CHECK(stored.size() == seed::lexicon().size() + 1);
  CHECK_FALSE(stored.lookup_roots("faxen").empty());
  CHECK(cli("analyze --lexicon " + lex + " faxte").out.find("faxen") != std::string::npos);

  // Input ending early is a data error and writes nothing.
  r = cli("lexicon-add --lexicon " + lex + " kaufen", "1\n");
  CHECK(r.code == 2);
  CHECK(morphy::load_lexicon_file(lex, &seed::classes()).size() == stored.size());
}

// Command-line front end. Each subcommand wraps one library operation.

#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"
#include "morphy/corpus.hpp"
#include "morphy/dialogue.hpp"
#include "morphy/eval.hpp"
#include "morphy/inflection.hpp"
#include "morphy/io.hpp"
#include "morphy/ops.hpp"
#include "morphy/resources.hpp"
#include "morphy/service.hpp"
#include "morphy/tagger.hpp"
#include "morphy/utf8.hpp"

using namespace morphy;

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  return io::read_file(path);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
  } else {
    io::write_file_atomic(path, text);
  }
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& part : utf8::split(s, ',')) {
    auto t = utf8::trim(part);
    if (t.empty()) continue;
    if (t.find_first_not_of("0123456789") != std::string_view::npos) throw UsageError("not a count: " + part);
    out.push_back(std::stoull(std::string(t)));
  }
  return out;
}

std::string classified_message(const std::string& pos) {
  if (pos.rfind("VER", 0) == 0) return "Verb klassifiziert!";
  if (pos == "SUB") return "Substantiv klassifiziert!";
  if (pos == "ADJ") return "Adjektiv klassifiziert!";
  if (pos == "EIG") return "Eigenname klassifiziert!";
  return "Wort klassifiziert!";
}

// Reads a 1-based choice in [1, n]; re-asks on anything else. Returns 0 at EOF.
int read_choice(std::istream& in, std::ostream& out, std::size_t n) {
  std::string line;
  while (true) {
    if (isatty(STDIN_FILENO)) out << "   > " << std::flush;
    if (!std::getline(in, line)) return 0;
    auto t = utf8::trim(line);
    if (!t.empty() && t.size() < 4 && t.find_first_not_of("0123456789") == std::string_view::npos) {
      int c = std::stoi(std::string(t));
      if (c >= 1 && static_cast<std::size_t>(c) <= n) return c;
    }
    out << "   Bitte eine Zahl von 1 bis " << n << " eingeben.\n";
  }
}

struct Common {
  std::string data_dir, lexicon, models, in, out;
  ResourcePaths paths() const { return resolve_paths(data_dir, lexicon, models); }
};

Models require_models(const Common& c, CLI::App* sub) {
  auto p = c.paths();
  if (p.models.empty()) {
    std::cerr << "error: no models given (use --models or MORPHY_MODELS)\n\n" << sub->help();
    throw UsageError("");
  }
  return load_models_file(p.models);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"German morphology and part-of-speech tagging"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--data-dir", c.data_dir, "data directory (env MORPHY_DATA_DIR)");

  auto add_lexicon = [&](CLI::App* s) { s->add_option("--lexicon", c.lexicon, "lexicon file (env MORPHY_LEXICON)"); };
  auto add_models = [&](CLI::App* s) { s->add_option("--models", c.models, "model file (env MORPHY_MODELS)"); };
  auto add_in = [&](CLI::App* s, const char* what) { s->add_option("--in", c.in, what); };
  auto add_out = [&](CLI::App* s) { s->add_option("--out", c.out, "output file (default stdout)"); };

  std::string tagset_name = "small", algo_name = "church";
  std::uint64_t seed = 0;
  auto add_tagset = [&](CLI::App* s) {
    s->add_option("--tagset", tagset_name, "small or large")->check(CLI::IsMember({"small", "large"}));
  };
  auto add_algo = [&](CLI::App* s) {
    s->add_option("--algo", algo_name, "church or varcontext")->check(CLI::IsMember({"church", "varcontext"}));
  };

  // analyze
  auto* analyze = app.add_subcommand("analyze", "all readings of each word (text from --in or stdin)");
  std::vector<std::string> words;
  analyze->add_option("words", words, "words to analyze instead of input text");
  add_lexicon(analyze), add_in(analyze, "text file"), add_out(analyze);

  // generate
  auto* generate = app.add_subcommand("generate", "form table of a lexicon root or of one entry line");
  std::string gen_root, gen_entry, gen_pos;
  generate->add_option("root", gen_root, "root as stored in the lexicon");
  generate->add_option("--entry", gen_entry, "a lexicon line to inflect instead");
  generate->add_option("--pos", gen_pos, "only entries of this part of speech");
  add_lexicon(generate), add_out(generate);

  // expand
  auto* expand = app.add_subcommand("expand", "full-form lexicon: surface, lemma, tag");
  add_lexicon(expand), add_out(expand);

  // train
  auto* train = app.add_subcommand("train", "n-gram and lexical models from an annotated corpus");
  std::size_t order = 3;
  std::string lambdas = "0.1,0.3,0.6";
  double epsilon = 1e-6;
  train->add_option("--order", order, "longest n-gram (N_max, >= 3)")->capture_default_str();
  train->add_option("--lambdas", lambdas, "uni,bi,trigram weights")->capture_default_str();
  train->add_option("--epsilon", epsilon, "probability floor")->capture_default_str();
  add_tagset(train), add_in(train, "corpus (default: the desk corpus)"), add_out(train);

  // tag
  auto* tag = app.add_subcommand("tag", "tag running text");
  bool no_boundaries = false;
  tag->add_flag("--no-boundaries", no_boundaries, "varcontext: no sentence-boundary context");
  add_models(tag), add_lexicon(tag), add_tagset(tag), add_algo(tag), add_in(tag, "text file"), add_out(tag);

  // eval
  auto* eval = app.add_subcommand("eval", "tag a gold corpus and report accuracy");
  add_models(eval), add_lexicon(eval), add_algo(eval), add_in(eval, "gold corpus (default: the desk corpus)"),
      add_out(eval);

  // curve
  auto* curve = app.add_subcommand("curve", "accuracy versus training size on a fixed holdout");
  std::string sizes_arg;
  double holdout = 0.2;
  curve->add_option("--sizes", sizes_arg, "comma-separated token counts (default 0 and 10%..100%)");
  curve->add_option("--holdout", holdout, "held-out fraction of sentences")->capture_default_str();
  curve->add_option("--seed", seed, "split seed (default 42)");
  add_lexicon(curve), add_tagset(curve), add_algo(curve), add_in(curve, "corpus (default: the desk corpus)"),
      add_out(curve);

  // perturb
  auto* perturb = app.add_subcommand("perturb", "replace a fraction of word forms by unknown pseudowords");
  double rate = 0.02;
  perturb->add_option("--rate", rate, "fraction of open-class tokens")->capture_default_str();
  perturb->add_option("--seed", seed, "random seed (default 1996)");
  add_lexicon(perturb), add_in(perturb, "corpus (default: the desk corpus)"), add_out(perturb);

  // ngrams
  auto* ngrams = app.add_subcommand("ngrams", "distinct n-grams per corpus prefix");
  std::string n_arg = "2,3,4", checkpoints_arg;
  bool use_tags = false;
  ngrams->add_option("--n", n_arg, "n values")->capture_default_str();
  ngrams->add_option("--checkpoints", checkpoints_arg, "prefix sizes (default every 10000 tokens and the end)");
  ngrams->add_flag("--tags", use_tags, "input is an annotated corpus; count tag n-grams of --tagset");
  add_tagset(ngrams), add_in(ngrams, "text or corpus (default: the desk text)"), add_out(ngrams);

  // lexicon-add
  auto* lexadd = app.add_subcommand("lexicon-add", "classify a new root by question and answer");
  std::string add_pos = "VER", add_root;
  bool assume_yes = false;
  lexadd->add_option("--pos", add_pos, "part of speech (VER, SUB, ADJ, EIG, or a closed class)")
      ->capture_default_str();
  lexadd->add_option("root", add_root, "the new root (asked for when omitted)");
  lexadd->add_flag("--yes", assume_yes, "store without the final confirmation");
  add_lexicon(lexadd);

  // serve
  auto* serve = app.add_subcommand("serve", "HTTP/JSON service");
  std::string host = "127.0.0.1", corpora;
  int port = 8080;
  long timeout = 1800;
  serve->add_option("--host", host)->capture_default_str();
  serve->add_option("--port", port)->capture_default_str();
  serve->add_option("--corpora", corpora, "directory of editable corpora (default <data-dir>/corpora)");
  serve->add_option("--session-timeout", timeout, "idle seconds before a dialogue session expires")
      ->capture_default_str();
  add_lexicon(serve), add_models(serve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    const auto paths = c.paths();
    auto morphology = [&] { return load_morphology(paths.paradigms, paths.lexicon); };
    auto corpus_in = [&] { return c.in.empty() ? read_corpus_file(paths.corpus) : read_corpus(read_input(c.in)); };
    const auto kind = parse_tagset_kind(tagset_name);
    const auto algo = parse_algorithm(algo_name);

    if (*analyze) {
      auto m = morphology();
      std::string text;
      if (!words.empty()) {
        for (const auto& w : words) text += w + " ";
      } else {
        text = read_input(c.in);
      }
      write_output(c.out, format_readings(analyze_text(m->analyzer, text)));
    } else if (*generate) {
      auto m = morphology();
      std::string out;
      if (!gen_entry.empty()) {
        out = format_forms(generate_forms(parse_entry(gen_entry, m->classes.get()), *m->classes));
      } else {
        if (gen_root.empty()) throw UsageError("give a root or --entry");
        std::size_t matched = 0;
        for (const auto& e : m->lexicon.lookup_roots(gen_root)) {
          if (!gen_pos.empty() && e.pos != gen_pos) continue;
          ++matched;
          out += "# " + format_entry(e) + "\n" + format_forms(generate_forms(e, *m->classes));
        }
        if (!matched) {
          std::cerr << "error: no lexicon entry for '" << gen_root << "'\n";
          return kDataError;
        }
      }
      write_output(c.out, out);
    } else if (*expand) {
      auto m = morphology();
      write_output(c.out, export_full_form_lexicon(expand_full_form_lexicon(m->lexicon, *m->classes)));
    } else if (*train) {
      auto w = utf8::split(lambdas, ',');
      if (w.size() != 3) throw UsageError("--lambdas needs three comma-separated weights");
      Smoothing sm;
      for (std::size_t i = 0; i < 3; ++i) sm.lambdas[i] = std::stod(w[i]);
      sm.epsilon = epsilon;
      write_output(c.out, save_models(train_models(corpus_in(), kind, order, sm)));
    } else if (*tag) {
      auto models = require_models(c, tag);
      if (tag->count("--tagset") && models.kind() != kind) {
        std::cerr << "error: the models are for the " << to_string(models.kind()) << " tag set\n";
        return kDataError;
      }
      auto m = morphology();
      Tagger tagger(m->analyzer, models);
      write_output(c.out, format_tagged(tag_text(tagger, algo, read_input(c.in), !no_boundaries)));
    } else if (*eval) {
      auto models = require_models(c, eval);
      auto m = morphology();
      auto gold = c.in.empty() ? read_corpus_file(paths.corpus) : read_corpus(read_input(c.in));
      Tagger tagger(m->analyzer, models);
      auto report = evaluate(gold, tag_corpus(tagger, algo, gold), models.kind(),
                             [&](const std::string& w) { return !models.lexicon().count(w); });
      write_output(c.out, format_report(report));
    } else if (*curve) {
      auto m = morphology();
      auto [tr, ho] = split_corpus(corpus_in(), holdout, curve->count("--seed") ? seed : 42);
      std::vector<std::size_t> sizes;
      if (sizes_arg.empty()) {
        for (std::size_t k = 0; k <= 10; ++k) sizes.push_back(tr.token_count() * k / 10);
      } else {
        sizes = parse_sizes(sizes_arg);
      }
      std::ostringstream o;
      o << "# " << to_string(kind) << " " << to_string(algo) << ", holdout " << ho.token_count() << " tokens\n";
      o << "size\taccuracy\n";
      for (const auto& [size, acc] : learning_curve(tr, ho, m->analyzer, algo, kind, sizes))
        o << size << "\t" << std::fixed << std::setprecision(6) << acc << "\n";
      write_output(c.out, o.str());
    } else if (*perturb) {
      auto m = morphology();
      write_output(c.out,
                   write_corpus(perturb_unknowns(corpus_in(), rate, perturb->count("--seed") ? seed : 1996,
                                                 m->analyzer)));
    } else if (*ngrams) {
      std::vector<std::string> stream;
      if (use_tags) {
        for (const auto& s : corpus_in().sentences)
          for (const auto& t : s) stream.push_back(format_tag(to_kind(t.tag, kind)));
      } else {
        stream = tokenize(c.in.empty() ? io::read_file(paths.data_dir + "/desk_text.txt") : read_input(c.in));
      }
      std::vector<std::size_t> cps;
      if (checkpoints_arg.empty()) {
        for (std::size_t k = 10000; k < stream.size(); k += 10000) cps.push_back(k);
        cps.push_back(stream.size());
      } else {
        cps = parse_sizes(checkpoints_arg);
      }
      std::string out = "checkpoint\tn\tdistinct\n";
      for (const auto& r : ngram_growth(stream, parse_sizes(n_arg), cps))
        out += std::to_string(r.checkpoint) + "\t" + std::to_string(r.n) + "\t" + std::to_string(r.distinct) + "\n";
      write_output(c.out, out);
    } else if (*lexadd) {
      auto classes = ParadigmSet::load_file(paths.paradigms);
      std::cout << "1. Geben Sie den Stamm ein: " << std::flush;
      if (add_root.empty()) {
        if (!std::getline(std::cin, add_root)) return kDataError;
        add_root = std::string(utf8::trim(add_root));
      } else {
        std::cout << add_root << "\n";
      }
      auto state = start_classification(add_pos, add_root, classes);
      while (state.pending) {
        const auto& q = *state.pending;
        std::cout << format_question(q, static_cast<int>(state.answered.size()) + 2);
        int choice = read_choice(std::cin, std::cout, q.alternatives.size());
        if (!choice) {
          std::cerr << "\nerror: input ended before the classification was complete\n";
          return kDataError;
        }
        state = answer(state, choice, classes);
      }
      std::cout << classified_message(state.pos_track) << "\n\n" << format_entry(state.draft) << "\n"
                << format_forms(generate_forms(state.draft, classes));
      if (!assume_yes) {
        std::cout << "\nEintrag in " << paths.lexicon << " speichern?\n   1: Ja\n   2: Nein\n";
        if (read_choice(std::cin, std::cout, 2) != 1) {
          std::cout << "Nicht gespeichert.\n";
          return 0;
        }
      }
      bool added = add_entry_to_file(paths.lexicon, state.draft, classes);
      std::cout << (added ? "Gespeichert.\n" : "Eintrag war schon vorhanden.\n");
    } else if (*serve) {
      ServiceConfig cfg;
      cfg.paths = paths;
      cfg.corpora_dir = corpora;
      cfg.session_timeout = std::chrono::seconds(timeout);
      Service service(cfg);
      HttpServer server(service);
      int bound = server.bind(host, port);
      if (bound < 0) {
        std::cerr << "error: cannot bind " << host << ":" << port << "\n";
        return kDataError;
      }
      std::cerr << "listening on http://" << host << ":" << bound << "\n";
      server.listen();
    }
  } catch (const UsageError& e) {
    if (*e.what()) std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
  return 0;
}

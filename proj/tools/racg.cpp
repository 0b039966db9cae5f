#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "racg/classify.hpp"
#include "racg/filter.hpp"
#include "racg/oracle.hpp"
#include "racg/walls.hpp"
#include "racg/words.hpp"
#include "vendor/CLI11.hpp"

namespace {

using namespace racg;

Word parse_word(const PresentationGraph& g, const std::vector<std::string>& toks) {
  Word w;
  for (const std::string& t : toks) {
    Gen s = g.index_of(t);
    if (s < 0) throw CLI::ValidationError("unknown generator: " + t);
    w.push_back(s);
  }
  return w;
}

// A word given as one flag value: space-separated generator names.
Word parse_word_arg(const PresentationGraph& g, const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return parse_word(g, toks);
}

std::size_t element_cap() {
  if (const char* cap = std::getenv("RACG_ELEMENT_CAP"))
    return static_cast<std::size_t>(std::stoull(cap));
  return 5'000'000;
}

std::string ball_dot(const oracle::CayleyBall& b) {
  const PresentationGraph& g = b.graph();
  std::ostringstream os;
  os << "graph ball {\n";
  for (int i = 0; i < b.size(); ++i) {
    std::string label = b.layer(i) == 0 ? "1" : word_to_string(g, b.canonical(i));
    os << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  for (int i = 0; i < b.size(); ++i)
    for (Gen s = 0; s < g.size(); ++s) {
      int j = b.neighbor(i, s);
      if (j > i) os << "  n" << i << " -- n" << j << " [label=\"" << g.name(s) << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"right-angled Coxeter group boundary classification"};
  app.require_subcommand(1);

  std::string file;
  bool json = false, strict = false;
  std::vector<std::string> toks;
  std::string p1a, p1b, p2a, p2b;
  std::string left, right, shared, strategy = "basic", format = "dot";
  int depth = 1, radius = 4, jobs = 1;
  unsigned seed = 12345;
  std::string lemma;

  auto add_cmd = [&](const std::string& name, const std::string& desc) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->add_option("file", file, "presentation graph file")->required();
    return c;
  };
  auto add_word = [&](CLI::App* c) {
    c->add_option("word", toks, "word as generator names (after --)");
  };

  CLI::App* c_classify = add_cmd("classify", "boundary local connectivity verdict");
  c_classify->add_flag("--json", json, "JSON output");
  c_classify->add_flag("--strict", strict, "exit 3 on hypothesis violation");

  CLI::App* c_nf = add_cmd("nf", "canonical normal form of a word");
  add_word(c_nf);
  CLI::App* c_geo = add_cmd("geodesic", "geodesic test with deletable pair");
  add_word(c_geo);
  CLI::App* c_walls = add_cmd("walls", "wall reflections of the edges of a path");
  add_word(c_walls);
  CLI::App* c_comb = add_cmd("combing", "back combing of a word to the identity");
  add_word(c_comb);

  CLI::App* c_diamond = add_cmd("diamond", "bigon decomposition of two geodesics");
  c_diamond->add_option("--p1a", p1a, "first half of first geodesic")->required();
  c_diamond->add_option("--p1b", p1b, "second half of first geodesic")->required();
  c_diamond->add_option("--p2a", p2a, "first half of second geodesic")->required();
  c_diamond->add_option("--p2b", p2b, "second half of second geodesic")->required();

  CLI::App* c_filter = add_cmd("filter", "build a filter between two spines");
  c_filter->add_option("--left", left, "left spine word")->required();
  c_filter->add_option("--right", right, "right spine word")->required();
  c_filter->add_option("--shared", shared, "shared prefix word");
  c_filter->add_option("--depth", depth, "number of fan levels")->required();
  c_filter->add_option("--strategy", strategy, "basic|directed")
      ->check(CLI::IsMember({"basic", "directed"}));
  c_filter->add_option("--format", format, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App* c_ball = add_cmd("ball", "Cayley ball enumeration");
  c_ball->add_option("--radius", radius, "ball radius")->required();
  c_ball->add_option("--format", format, "dot")->check(CLI::IsMember({"dot"}));

  CLI::App* c_verify = add_cmd("verify", "bounded verification suites");
  c_verify->add_option("--lemma", lemma, "suite id or 'all'")->required();
  c_verify->add_option("--radius", radius, "ball radius");
  c_verify->add_option("--seed", seed, "sampling seed");
  c_verify->add_option("--jobs", jobs, "worker hint (output order is fixed)");
  c_verify->add_flag("--json", json, "JSON output");

  CLI::App* c_sep = add_cmd("separators", "separator and factor witnesses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    PresentationGraph g = load_presentation(file);

    if (c_classify->parsed()) {
      Verdict v = classify(g);
      std::cout << (json ? verdict_json(v) : explain(v));
      if (strict && v.status == Status::hypothesis_violated) return 3;
      return 0;
    }
    if (c_nf->parsed()) {
      std::cout << word_to_string(g, normal_form(g, parse_word(g, toks)).word())
                << "\n";
      return 0;
    }
    if (c_geo->parsed()) {
      Word w = parse_word(g, toks);
      if (is_geodesic(g, w)) {
        std::cout << "true\n";
        return 0;
      }
      // report the first deletable pair found by the scan
      for (size_t j = 0; j < w.size(); ++j)
        for (size_t i = 0; i < j; ++i) {
          bool del = w[i] == w[j];
          for (size_t k = i + 1; del && k < j; ++k) del = g.commutes(w[k], w[j]);
          if (del) {
            std::cout << "false " << i << " " << j << "\n";
            return 0;
          }
        }
      std::cout << "false\n";
      return 0;
    }
    if (c_walls->parsed()) {
      Word w = parse_word(g, toks);
      std::vector<Wall> ws = walls_of_path(g, GroupElement(), w);
      for (size_t i = 0; i < ws.size(); ++i)
        std::cout << i << ": " << word_to_string(g, ws[i].reflection.word())
                  << "\n";
      return 0;
    }
    if (c_comb->parsed()) {
      BackCombing bc =
          back_combing(g, normal_form(g, parse_word(g, toks)), GroupElement());
      for (size_t i = 0; i < bc.segments.size(); ++i)
        std::cout << (i ? " | " : "") << word_to_string(g, bc.segments[i]);
      std::cout << "\n";
      return 0;
    }
    if (c_diamond->parsed()) {
      Diamond d = diamond(g, {parse_word_arg(g, p1a), parse_word_arg(g, p1b)},
                          {parse_word_arg(g, p2a), parse_word_arg(g, p2b)});
      std::cout << "gamma1: " << word_to_string(g, d.gamma1) << "\n"
                << "tau1:   " << word_to_string(g, d.tau1) << "\n"
                << "delta1: " << word_to_string(g, d.delta1) << "\n"
                << "delta2: " << word_to_string(g, d.delta2) << "\n"
                << "tau2:   " << word_to_string(g, d.tau2) << "\n"
                << "gamma2: " << word_to_string(g, d.gamma2) << "\n";
      return 0;
    }
    if (c_filter->parsed()) {
      FilterStrategy st =
          strategy == "directed" ? FilterStrategy::directed : FilterStrategy::basic;
      Filter f = build_filter(g, parse_word_arg(g, left), parse_word_arg(g, right),
                              parse_word_arg(g, shared), depth, st);
      std::cout << export_filter(f, format);
      return 0;
    }
    if (c_ball->parsed()) {
      oracle::CayleyBall b(g, radius, element_cap());
      std::cout << ball_dot(b);
      return 0;
    }
    if (c_verify->parsed()) {
      oracle::VerifyBounds bounds;
      bounds.radius = radius;
      bounds.seed = seed;
      bounds.element_cap = element_cap();
      (void)jobs;  // single worker keeps output byte-stable
      std::vector<std::string> ids =
          lemma == "all" ? oracle::kLemmaIds : std::vector<std::string>{lemma};
      for (const std::string& id : ids) {
        oracle::LemmaReport r = oracle::verify_lemma(g, id, bounds);
        std::cout << (json ? r.to_json() : r.to_text(g));
        std::cerr << id << ": " << r.seconds << "s\n";
      }
      return 0;
    }
    if (c_sep->parsed()) {
      std::cout << "ends: " << to_string(ends_class(g)) << "\n";
      if (auto sep = find_clique_separator(g)) {
        std::cout << "clique separator: {" << set_to_string(g, sep->cut) << "}\n";
        for (const GenSet& comp : sep->components)
          std::cout << "  component: {" << set_to_string(g, comp) << "}\n";
      } else {
        std::cout << "clique separator: none\n";
      }
      if (auto d = find_dihedral_factor(g))
        std::cout << "dihedral factor: {" << g.name(d->first) << ", "
                  << g.name(d->second) << "}\n";
      else
        std::cout << "dihedral factor: none\n";
      if (auto v = find_virtual_factor_separator(g))
        std::cout << "virtual factor separator: C=" << set_to_string(g, v->c)
                  << " D=" << set_to_string(g, v->d) << " s=" << g.name(v->s)
                  << " t=" << g.name(v->t) << "\n";
      else
        std::cout << "virtual factor separator: none\n";
      if (auto m = find_mr_nonlocal_witness(g))
        std::cout << "non-local witness pair: {" << g.name(m->first) << ","
                  << g.name(m->second) << "}\n";
      else
        std::cout << "non-local witness pair: none\n";
      return 0;
    }
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << file << ": " << e.what() << "\n";
    return 2;
  } catch (const HypothesisViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

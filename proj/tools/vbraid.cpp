#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "vbraid/pure.hpp"
#include "vbraid/realize.hpp"
#include "vbraid/search.hpp"
#include "vbraid/surface.hpp"

namespace {

vbraid::BraidWord parse_cli_word(const std::string &text, int n) {
  if (n > 0) return vbraid::parse_word(text, n);
  // infer the strand count from the largest index used
  vbraid::BraidWord probe = vbraid::parse_word(text, 1 << 20);
  int m = 1;
  for (const auto &l : probe.letters) m = std::max(m, l.index + 1);
  return vbraid::parse_word(text, m);
}

int env_budget() {
  const char *v = std::getenv("VBRAID_BUDGET");
  if (!v || !*v) return 2000;
  char *end = nullptr;
  long x = std::strtol(v, &end, 10);
  if (end && *end == '\0' && x > 0 && x < (1L << 30)) return static_cast<int>(x);
  return 2000;
}

int rnd_int(std::mt19937 &rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

vbraid::BraidGaussDiagram random_diagram(std::mt19937 &rng, int max_n, int max_arrows) {
  int n = rnd_int(rng, 1, max_n);
  vbraid::BraidGaussDiagram g = vbraid::identity_diagram(n);
  if (n >= 2) {
    int m = rnd_int(rng, 0, max_arrows);
    for (int i = 0; i < m; ++i) {
      int f = rnd_int(rng, 1, n);
      int t = rnd_int(rng, 1, n);
      while (t == f) t = rnd_int(rng, 1, n);
      g.arrows.push_back({f, t, rnd_int(rng, 0, 1) ? 1 : -1});
    }
  }
  std::vector<int> im(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) im[static_cast<size_t>(k)] = k + 1;
  for (int k = n - 1; k > 0; --k)
    std::swap(im[static_cast<size_t>(k)], im[static_cast<size_t>(rnd_int(rng, 0, k))]);
  g.perm = vbraid::Permutation{std::move(im)};
  return g;
}

std::string read_all_stdin() {
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"virtual braid words, diagrams, moves and surfaces"};
  app.require_subcommand(1);

  std::string word_text, word2_text, gauss_text;
  int n = 0;
  bool as_json = false, canonical = false;
  int budget_nodes = env_budget();
  int insert_slack = 2;
  int time_limit = 0;
  bool use_reid = false, use_vm = false;
  bool minimize = false;
  int pv_n = 3, pv_depth = 64;
  int trials = 100, max_arrows = 20, gen_n = 6;
  unsigned seed = 0;

  auto *gauss = app.add_subcommand("gauss", "convert a braid word to its gauss diagram");
  gauss->add_option("word", word_text, "braid word, e.g. \"s1 t2 s1'\"")->required();
  gauss->add_option("-n,--strands", n, "strand count (default: inferred)");
  gauss->add_flag("--json", as_json, "emit json instead of text");
  gauss->add_flag("--canonical", canonical, "canonicalize the arrow order first");

  auto *equal = app.add_subcommand("equal", "compare two braid words");
  equal->add_option("word1", word_text)->required();
  equal->add_option("word2", word2_text)->required();
  equal->add_option("-n,--strands", n, "strand count (default: inferred)");
  equal->add_flag("--vm", use_vm, "virtual moves only (default)");
  equal->add_flag("--reid", use_reid, "full move set, bounded search");
  equal->add_option("--budget", budget_nodes, "search node budget");
  equal->add_option("--insert-slack", insert_slack, "extra arrows allowed above the inputs");
  equal->add_option("--time-limit-ms", time_limit, "wall clock cutoff, 0 = none");

  auto *genus = app.add_subcommand("genus", "canonical genus of a braid word's diagram");
  genus->add_option("word", word_text)->required();
  genus->add_option("-n,--strands", n, "strand count (default: inferred)");
  genus->add_flag("--minimize", minimize, "search the move graph for a smaller genus");
  genus->add_option("--budget", budget_nodes, "search node budget");
  genus->add_option("--insert-slack", insert_slack, "extra arrows allowed above the input");

  auto *graph = app.add_subcommand("graph", "ribbon graph of a braid word as drawn");
  graph->add_option("word", word_text)->required();
  graph->add_option("-n,--strands", n, "strand count (default: inferred)");

  auto *realize_cmd = app.add_subcommand("realize", "braid word presenting a gauss diagram");
  realize_cmd->add_option("diagram", gauss_text, "gauss diagram text (default: stdin)");
  realize_cmd->add_flag("--json", as_json, "input is json");

  auto *selftest = app.add_subcommand("selftest", "internal consistency checks");
  selftest->require_subcommand(1);
  auto *pv = selftest->add_subcommand("pv", "pure subgroup presentation relations");
  pv->add_option("-n,--strands", pv_n, "strand count")->required();
  pv->add_option("--depth", pv_depth, "fallback search budget");
  pv->add_flag("--json", as_json, "emit the full report as json");
  auto *rt = selftest->add_subcommand("roundtrip", "random diagrams survive realize+reparse");
  rt->add_option("--trials", trials, "number of random diagrams");
  rt->add_option("--seed", seed, "rng seed");
  rt->add_option("-n,--strands", gen_n, "largest strand count generated");
  rt->add_option("--arrows", max_arrows, "largest arrow count generated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 3;
  }

  try {
    if (app.got_subcommand(gauss)) {
      vbraid::BraidWord w = parse_cli_word(word_text, n);
      vbraid::BraidGaussDiagram g = vbraid::word_to_gauss(w);
      if (canonical) g = vbraid::canonical_form(g).diagram();
      std::cout << (as_json ? vbraid::gauss_to_json(g) : vbraid::gauss_to_text(g)) << "\n";
      return 0;
    }
    if (app.got_subcommand(equal)) {
      if (use_vm && use_reid) {
        std::cerr << "error: --vm and --reid are mutually exclusive\n";
        return 3;
      }
      int both_n = n;
      if (both_n == 0) {
        vbraid::BraidWord p1 = parse_cli_word(word_text, 0);
        vbraid::BraidWord p2 = parse_cli_word(word2_text, 0);
        both_n = std::max(p1.n, p2.n);
      }
      vbraid::BraidWord w1 = vbraid::parse_word(word_text, both_n);
      vbraid::BraidWord w2 = vbraid::parse_word(word2_text, both_n);
      if (!use_reid) {
        bool eq = vm_equivalent(w1, w2);
        std::cout << (eq ? "equal" : "distinct") << "\n";
        return eq ? 0 : 1;
      }
      vbraid::Budget b{budget_nodes, insert_slack, time_limit};
      vbraid::RResult r = r_equivalent_bounded(w1, w2, b);
      switch (r.status) {
        case vbraid::RStatus::Equivalent:
          std::cout << "equivalent\n" << "trace=" << trace_to_json(r.trace) << "\n";
          return 0;
        case vbraid::RStatus::Inequivalent:
          std::cout << "inequivalent\n"
                    << "certificate=" << r.certificate.invariant << ": "
                    << r.certificate.details << "\n";
          return 1;
        case vbraid::RStatus::Unknown:
          std::cout << "unknown\n" << "nodes=" << r.nodes_expanded << "\n";
          return 2;
      }
      return 3;
    }
    if (app.got_subcommand(genus)) {
      vbraid::BraidWord w = parse_cli_word(word_text, n);
      if (!minimize) {
        std::cout << "genus=" << vbraid::canonical_genus(w) << "\n";
        return 0;
      }
      vbraid::Budget b{budget_nodes, insert_slack, time_limit};
      vbraid::GenusResult r = min_genus_bounded(w, b);
      std::cout << "genus=" << r.genus << "\n"
                << "witness=" << word_to_text(r.witness) << "\n";
      return 0;
    }
    if (app.got_subcommand(graph)) {
      vbraid::BraidWord w = parse_cli_word(word_text, n);
      std::cout << vbraid::graph_to_text(vbraid::build_ribbon_graph(w));
      return 0;
    }
    if (app.got_subcommand(realize_cmd)) {
      std::string text = realize_cmd->count("diagram") ? gauss_text : read_all_stdin();
      vbraid::BraidGaussDiagram g =
          as_json ? vbraid::gauss_from_json(text) : vbraid::gauss_from_text(text);
      std::cout << word_to_text(vbraid::realize(g)) << "\n";
      return 0;
    }
    if (selftest->got_subcommand(pv)) {
      vbraid::PvReport rep = vbraid::verify_pv_presentation(pv_n, pv_depth);
      if (as_json) {
        std::cout << pv_report_to_json(rep) << "\n";
      } else {
        std::cout << "pv n=" << rep.n << " instances=" << rep.instances.size()
                  << (rep.ok ? " ok" : " FAILED") << "\n";
        for (const auto &inst : rep.instances) {
          if (inst.ok) continue;
          std::cout << "failed " << inst.relation << " (";
          for (size_t i = 0; i < inst.indices.size(); ++i)
            std::cout << (i ? "," : "") << inst.indices[i];
          std::cout << ")\n";
        }
      }
      return rep.ok ? 0 : 1;
    }
    if (selftest->got_subcommand(rt)) {
      std::mt19937 rng(seed);
      for (int i = 0; i < trials; ++i) {
        vbraid::BraidGaussDiagram g = random_diagram(rng, gen_n, max_arrows);
        vbraid::CanonicalGauss want = vbraid::canonical_form(g);
        vbraid::BraidWord w = vbraid::realize(want);
        if (!(vbraid::canonical_form(vbraid::word_to_gauss(w)) == want)) {
          std::cout << "roundtrip FAILED at trial " << i << "\n"
                    << "diagram: " << gauss_to_text(g) << "\n"
                    << "word:    " << word_to_text(w) << "\n";
          return 1;
        }
      }
      std::cout << "roundtrip trials=" << trials << " ok\n";
      return 0;
    }
  } catch (const vbraid::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}

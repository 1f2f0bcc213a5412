#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "singraph/graph.hpp"

int main(int argc, char** argv) {
  using namespace singraph::cli;
  CLI::App app{"singraph: resolution graphs of rational surface singularities"};
  app.require_subcommand(1);
  Output o;
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_flag("--dot", o.dot, "emit the graph in DOT");

  std::string path;
  std::size_t max_m = 0;
  std::size_t depth = 0;
  long budget = 0;
  std::optional<std::string> e0;
  std::string corpus_dir = SINGRAPH_CORPUS_DIR;
  std::function<int()> action;

  auto graph_cmd = [&](const std::string& name, const std::string& help, auto run) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", path, "graph file (JSON)")->required();
    sub->callback([&, run] { action = [&, run] { return run(path, o, std::cout); }; });
    return sub;
  };
  graph_cmd("classify", "Laufer type, obtainability, simpleness and sandwich obstruction", run_classify);
  graph_cmd("zcycle", "fundamental cycle and a computation sequence", run_zcycle);
  graph_cmd("roots", "positive roots", run_roots);
  graph_cmd("star", "star deformation of a Table-2 graph", run_star);
  graph_cmd("blowup-profile", "multiplicities in the iterated blow-up", run_blowup_profile);
  auto* adj = app.add_subcommand("adjacencies", "Artin-component adjacencies");
  adj->add_option("graph", path, "graph file (JSON)")->required();
  adj->add_option("--max-m", max_m, "largest collection size (default: number of vertices)");
  adj->callback([&] { action = [&] { return run_adjacencies(path, max_m, o, std::cout); }; });

  auto* sw = app.add_subcommand("sandwich", "decorated curves and sandwiched singularities");
  sw->require_subcommand(1);
  auto* build = sw->add_subcommand("build", "decorated curve of a graph with reduced fundamental cycle");
  build->add_option("graph", path, "graph file (JSON)")->required();
  build->add_option("--e0", e0, "end vertex receiving one arrow less (default: least end)");
  build->callback([&] { action = [&] { return run_sandwich_build(path, e0, o, std::cout); }; });
  auto* graph = sw->add_subcommand("graph", "graphs of X(C,l) for a decorated curve");
  graph->add_option("curve", path, "decorated curve file (JSON)")->required();
  graph->callback([&] { action = [&] { return run_sandwich_graph(path, o, std::cout); }; });
  auto* deform = sw->add_subcommand("deform", "combinatorial delta-constant deformation candidates");
  deform->add_option("curve", path, "decorated curve file (JSON)")->required();
  deform->add_option("--depth", depth, "largest number of singular points in a fibre");
  deform->callback([&] { action = [&] { return run_sandwich_deform(path, depth, o, std::cout); }; });
  auto* check = sw->add_subcommand("check", "decide whether a graph is sandwiched");
  check->add_option("graph", path, "graph file (JSON)")->required();
  check->add_option("--budget", budget, "arrows per vertex (default: the multiplicity)")->check(CLI::NonNegativeNumber);
  check->callback([&] { action = [&] { return run_sandwich_check(path, budget, o, std::cout); }; });

  auto* corpus = app.add_subcommand("corpus", "golden-file corpus");
  corpus->require_subcommand(1);
  auto* verify = corpus->add_subcommand("verify", "check every golden value");
  verify->add_option("--dir", corpus_dir, "corpus directory");
  verify->callback([&] { action = [&] { return run_corpus_verify(corpus_dir, o, std::cout); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const singraph::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

// Command-line front end: color, verify, exact, gen, stats.
// Exit codes: 0 success/valid, 1 invalid or failed run, 2 usage/input error.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "strongedge/delta5.hpp"
#include "strongedge/generate.hpp"
#include "strongedge/io.hpp"
#include "strongedge/oracle.hpp"

namespace {

using namespace strongedge;

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open '" + path + "' for writing");
  return file;
}

int run_color(const std::string& in_path, const std::string& out_path,
              const std::string& branch) {
  Graph g = read_graph_file(in_path);
  PartialColoring coloring;
  std::string branch_used;
  int bound = 0;

  if (branch == "auto") {
    auto [c, rep] = strong_color(g);
    coloring = std::move(c);
    branch_used = rep.branch;
    bound = rep.bound_claimed;
  } else if (branch == "greedy") {
    GraphStats s = stats(g);
    std::vector<EdgeId> order(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) order[e] = e;
    bound = greedy_bound(s.max_degree);
    coloring = greedy_full(g, order, Palette{bound});
    branch_used = branch_name(Branch::greedy_general);
  } else if (branch == "delta5") {
    auto [c, rep] = strong_color_delta5(g);
    coloring = std::move(c);
    branch_used = rep.branch;
    bound = rep.bound_claimed;
  } else {
    throw CLI::ValidationError("--branch must be auto, greedy, or delta5");
  }

  if (auto violation = verify_strong(g, coloring)) {
    std::cerr << "internal error: produced coloring is invalid: " << describe(*violation, g)
              << "\n";
    return 1;
  }
  std::ofstream file;
  write_coloring(g, coloring, branch_used, bound, open_output(out_path, file));
  return 0;
}

int run_verify(const std::string& graph_path, const std::string& coloring_path) {
  Graph g = read_graph_file(graph_path);
  std::ifstream in(coloring_path);
  if (!in) throw std::invalid_argument("cannot open '" + coloring_path + "'");
  ColoringFile file = read_coloring(in, g);
  if (auto violation = verify_strong(g, file.coloring)) {
    std::cout << "INVALID: " << describe(*violation, g) << "\n";
    return 1;
  }
  std::cout << "valid strong edge-coloring, " << file.coloring.colors_used() << " colors, "
            << file.coloring.colored_count() << "/" << g.edge_count() << " edges colored\n";
  return 0;
}

int run_exact(const std::string& in_path, std::uint64_t budget) {
  Graph g = read_graph_file(in_path);
  OracleResult res = exact_chi_s(g, budget);
  if (!res.solved) {
    std::cout << "budget exceeded after " << res.nodes_explored << " nodes; " << res.lower
              << " <= chi_s <= " << res.upper << "\n";
    return 1;
  }
  std::cout << "chi_s = " << res.chi_s << " (" << res.nodes_explored << " nodes)\n";
  return 0;
}

int run_gen(const std::string& spec_text, std::uint64_t seed, const std::string& out_path,
            bool as_json) {
  GeneratorSpec spec = GeneratorSpec::parse(spec_text, seed);
  Graph g = spec.build();
  std::ofstream file;
  write_graph(g, open_output(out_path, file), as_json ? GraphFormat::json : GraphFormat::edgelist);
  return 0;
}

int run_stats(const std::string& in_path) {
  Graph g = read_graph_file(in_path);
  GraphStats s = stats(g);
  std::cout << "n " << g.vertex_count() << "\n"
            << "m " << g.edge_count() << "\n"
            << "max_degree " << s.max_degree << "\n"
            << "min_degree " << s.min_degree << "\n"
            << "girth " << (s.girth ? std::to_string(*s.girth) : std::string("inf")) << "\n"
            << "regular " << (s.is_regular ? "true" : "false") << "\n"
            << "components " << s.component_count << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strong edge-coloring toolkit"};
  app.require_subcommand(1);

  std::string in_path, out_path, coloring_path, branch = "auto", spec_text;
  std::uint64_t seed = 0, budget = 100'000'000;
  bool as_json = false;

  auto* color = app.add_subcommand("color", "color a graph and emit coloring JSON");
  color->add_option("input", in_path, "graph file (edge list, or .json)")->required();
  color->add_option("--out", out_path, "output file (default stdout)");
  color->add_option("--branch", branch, "auto|greedy|delta5")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "check a coloring against a graph");
  verify->add_option("graph", in_path, "graph file")->required();
  verify->add_option("coloring", coloring_path, "coloring JSON file")->required();

  auto* exact = app.add_subcommand("exact", "exact strong chromatic index (small graphs)");
  exact->add_option("input", in_path, "graph file")->required();
  exact->add_option("--budget", budget, "search node budget")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("spec", spec_text,
                  "petersen | cycle:n | c5_blowup:d | random_regular:n,d,girth |"
                  " random_max_degree:n,d")
      ->required();
  gen->add_option("--seed", seed, "generator seed")->capture_default_str();
  gen->add_option("--out", out_path, "output file (default stdout)");
  gen->add_flag("--json", as_json, "emit graph JSON instead of an edge list");

  auto* st = app.add_subcommand("stats", "structural summary of a graph");
  st->add_option("input", in_path, "graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(color)) return run_color(in_path, out_path, branch);
    if (app.got_subcommand(verify)) return run_verify(in_path, coloring_path);
    if (app.got_subcommand(exact)) return run_exact(in_path, budget);
    if (app.got_subcommand(gen)) return run_gen(spec_text, seed, out_path, as_json);
    if (app.got_subcommand(st)) return run_stats(in_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

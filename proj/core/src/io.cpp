#include "strongedge/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace strongedge {

namespace {

Graph read_edgelist(std::istream& in) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  int declared_n = -1;
  int max_id = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank
    if (first == "p") {
      int n, m;
      if (!(ls >> n >> m) || n < 0)
        throw std::invalid_argument("bad header on line " + std::to_string(line_no));
      declared_n = n;
      continue;
    }
    int u, v;
    std::string extra;
    try {
      size_t used = 0;
      u = std::stoi(first, &used);
      if (used != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad edge on line " + std::to_string(line_no));
    }
    if (!(ls >> v) || (ls >> extra))
      throw std::invalid_argument("bad edge on line " + std::to_string(line_no));
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  int n = declared_n >= 0 ? declared_n : max_id + 1;
  return Graph(n, edges);
}

Graph read_graph_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs fields 'n' and 'edges'");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph JSON edges must be [u, v] pairs");
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return Graph(j.at("n").get<int>(), edges);
}

}  // namespace

Graph read_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::json ? read_graph_json(in) : read_edgelist(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  return read_graph(in, json ? GraphFormat::json : GraphFormat::edgelist);
}

void write_graph(const Graph& g, std::ostream& out, GraphFormat format) {
  if (format == GraphFormat::edgelist) {
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return;
  }
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  out << j.dump(2) << "\n";
}

void write_coloring(const Graph& g, const PartialColoring& c, const std::string& branch,
                    int bound_claimed, std::ostream& out) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["num_colors"] = c.colors_used();
  j["bound_claimed"] = bound_claimed;
  j["branch"] = branch;
  j["edges"] = nlohmann::json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    j["edges"].push_back({{"u", u}, {"v", v}, {"color", c.color(e)}});
  }
  out << j.dump(2) << "\n";
}

ColoringFile read_coloring(std::istream& in, const Graph& g) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad coloring JSON: ") + e.what());
  }
  ColoringFile file;
  try {
    if (j.at("n").get<int>() != g.vertex_count())
      throw std::invalid_argument("coloring vertex count does not match the graph");
    file.branch = j.at("branch").get<std::string>();
    file.bound_claimed = j.at("bound_claimed").get<int>();
    file.coloring = PartialColoring(g.edge_count());
    const auto& edges = j.at("edges");
    if (static_cast<int>(edges.size()) != g.edge_count())
      throw std::invalid_argument("coloring edge count does not match the graph");
    std::vector<char> seen(g.edge_count(), 0);
    for (const auto& e : edges) {
      auto id = g.edge_id(e.at("u").get<int>(), e.at("v").get<int>());
      if (!id) throw std::invalid_argument("coloring lists an edge the graph does not have");
      if (seen[*id]) throw std::invalid_argument("coloring lists an edge twice");
      seen[*id] = 1;
      int color = e.at("color").get<int>();
      if (color < 0) throw std::invalid_argument("negative color");
      if (color > 0) file.coloring.assign(*id, color);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad coloring JSON: ") + e.what());
  }
  return file;
}

}  // namespace strongedge

#include "strongedge/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace strongedge {

int lower_bound(const Graph& g) {
  int best = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    best = std::max(best, g.degree(u) + g.degree(v) - 1);
  }
  return best;
}

namespace {

struct Searcher {
  const Graph& g;
  std::vector<std::vector<EdgeId>> nbr;
  std::vector<EdgeId> order;
  std::vector<Color> color;
  int k = 0;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool budget_hit = false;

  explicit Searcher(const Graph& graph, std::uint64_t node_budget)
      : g(graph), color(graph.edge_count(), 0), budget(node_budget) {
    nbr.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) nbr[e] = edge_neighborhood(g, e);
    order.resize(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
      return nbr[a].size() > nbr[b].size();
    });
  }

  bool feasible(size_t pos, int max_used) {
    if (pos == order.size()) return true;
    EdgeId e = order[pos];
    std::vector<bool> forbidden(k + 1, false);
    for (EdgeId f : nbr[e])
      if (color[f] != 0) forbidden[color[f]] = true;
    int limit = std::min(k, max_used + 1);  // fresh colors are interchangeable
    for (Color c = 1; c <= limit; ++c) {
      if (forbidden[c]) continue;
      if (nodes >= budget) {
        budget_hit = true;
        return false;
      }
      ++nodes;
      color[e] = c;
      if (feasible(pos + 1, std::max(max_used, c))) return true;
      color[e] = 0;
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace

OracleResult exact_chi_s(const Graph& g, std::uint64_t node_budget) {
  OracleResult res;
  res.witness = PartialColoring(g.edge_count());
  if (g.edge_count() == 0) {
    res.solved = true;
    return res;
  }

  std::vector<EdgeId> id_order(g.edge_count());
  std::iota(id_order.begin(), id_order.end(), 0);
  GraphStats s = stats(g);
  PartialColoring greedy = greedy_full(g, id_order, Palette{greedy_bound(s.max_degree)});

  res.lower = lower_bound(g);
  res.upper = greedy.colors_used();

  Searcher search(g, node_budget);
  for (int k = res.lower; k <= res.upper; ++k) {
    if (k == res.upper) {
      // every smaller palette is refuted, so the greedy witness is optimal
      res.solved = true;
      res.chi_s = k;
      res.witness = greedy;
      res.nodes_explored = search.nodes;
      return res;
    }
    search.k = k;
    std::fill(search.color.begin(), search.color.end(), 0);
    if (search.feasible(0, 0)) {
      res.solved = true;
      res.chi_s = k;
      res.lower = res.upper = k;
      for (EdgeId e = 0; e < g.edge_count(); ++e) res.witness.assign(e, search.color[e]);
      res.nodes_explored = search.nodes;
      return res;
    }
    if (search.budget_hit) {
      res.lower = k;  // palettes below k are refuted
      res.nodes_explored = search.nodes;
      return res;
    }
    res.lower = k + 1;
  }
  return res;  // unreachable: k == upper always solves
}

}  // namespace strongedge

#include "strongedge/delta5.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "strongedge/girth5.hpp"

namespace strongedge {

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::trivial: return "trivial";
    case Branch::greedy_general: return "greedy-general";
    case Branch::low_degree: return "low-degree";
    case Branch::regular_girth5: return "regular-girth5";
    case Branch::delta5_girth3: return "delta5-girth3";
    case Branch::delta5_girth4: return "delta5-girth4";
  }
  return "unknown";
}

std::optional<std::array<VertexId, 3>> find_triangle(const Graph& g) {
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      for (VertexId w : g.neighbors(u)) {
        if (w <= v) continue;
        if (g.has_edge(v, w)) return std::array<VertexId, 3>{u, v, w};
      }
    }
  }
  return std::nullopt;
}

std::optional<VertexId> find_four_cycle_root(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        // a second common neighbor of nb[i], nb[j] closes a 4-cycle through v
        for (VertexId x : g.neighbors(nb[i])) {
          if (x != v && g.has_edge(nb[j], x)) return v;
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

void require_regular(const Graph& g, int degree, const char* who) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != degree)
      throw std::invalid_argument(std::string(who) + " requires a " + std::to_string(degree) +
                                  "-regular graph");
}

// Colors `edges` in the given fixed order; on exhaustion falls back to
// backtracking over whatever is still uncolored.
void color_in_order_with_fallback(const Graph& g, PartialColoring& c,
                                  const std::vector<EdgeId>& edges, Palette p,
                                  bool* fallback_invoked) {
  for (size_t i = 0; i < edges.size(); ++i) {
    if (c.is_colored(edges[i])) continue;
    try {
      greedy_assign(g, c, edges[i], p);
    } catch (const PaletteExhausted&) {
      if (fallback_invoked) *fallback_invoked = true;
      std::vector<EdgeId> rest(edges.begin() + i, edges.end());
      if (!backtrack_complete(g, c, rest, p)) throw;
      return;
    }
  }
}

}  // namespace

PartialColoring color_delta5_girth3(const Graph& g, Palette p, bool* fallback_invoked) {
  if (fallback_invoked) *fallback_invoked = false;
  if (p.size < regular_girth5_bound(5))
    throw std::invalid_argument("color_delta5_girth3 needs a palette of at least 37 colors");
  require_regular(g, 5, "color_delta5_girth3");
  auto tri = find_triangle(g);
  if (!tri) throw std::invalid_argument("color_delta5_girth3: graph has no triangle");
  auto [v1, v2, v3] = *tri;

  PartialColoring c = greedy_partial(g, v1, Palette{rooted_partial_bound(5)});
  for (VertexId z : {v2, v3})
    for (EdgeId e : g.incident_edges(z)) c.clear(e);

  std::vector<EdgeId> triangle_edges{*g.edge_id(v1, v2), *g.edge_id(v2, v3), *g.edge_id(v3, v1)};
  std::vector<EdgeId> spokes;  // the 9 non-triangle edges at the triangle
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (c.is_colored(e)) continue;
    if (std::find(triangle_edges.begin(), triangle_edges.end(), e) == triangle_edges.end())
      spokes.push_back(e);
  }

  complete_with_fallback(g, c, spokes, p, fallback_invoked);
  color_in_order_with_fallback(g, c, triangle_edges, p, fallback_invoked);
  return c;
}

namespace {

// First induced matching of E(D_1, D_2) hitting three distinct D_1 vertices,
// in ascending index order; nullopt when none exists.
std::optional<std::vector<EdgeId>> find_induced_three_matching(const Graph& g,
                                                               const LayerStructure& ls) {
  const size_t k = ls.d1.size();
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      for (size_t l = j + 1; l < k; ++l) {
        for (VertexId vi : ls.w_sets[i]) {
          for (VertexId vj : ls.w_sets[j]) {
            for (VertexId vl : ls.w_sets[l]) {
              if (vi == vj || vi == vl || vj == vl) continue;
              std::vector<EdgeId> cand{*g.edge_id(ls.d1[i], vi), *g.edge_id(ls.d1[j], vj),
                                       *g.edge_id(ls.d1[l], vl)};
              if (is_induced_matching(g, cand)) return cand;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PartialColoring color_delta5_girth4(const Graph& g, Palette p, bool* fallback_invoked) {
  if (fallback_invoked) *fallback_invoked = false;
  if (p.size < regular_girth5_bound(5))
    throw std::invalid_argument("color_delta5_girth4 needs a palette of at least 37 colors");
  require_regular(g, 5, "color_delta5_girth4");
  auto root = find_four_cycle_root(g);
  if (!root) throw std::invalid_argument("color_delta5_girth4: graph has no 4-cycle");

  PartialColoring base = greedy_partial(g, *root, Palette{rooted_partial_bound(5)});
  DistanceClasses dc = distance_classes(g, *root);
  LayerStructure ls = build_layers(g, dc, /*expect_girth5=*/false);
  auto matching = find_induced_three_matching(g, ls);

  PartialColoring c = base;
  if (matching) {
    const Color alpha = p.size;
    for (EdgeId e : *matching) c.clear(e);
    for (EdgeId e : *matching) c.assign(e, alpha);
  }
  try {
    complete_with_fallback(g, c, g.incident_edges(*root), p, fallback_invoked);
    return c;
  } catch (const PaletteExhausted&) {
    if (!matching) throw;
  }
  // Retry without the recolored matching before giving up.
  c = base;
  complete_with_fallback(g, c, g.incident_edges(*root), p, fallback_invoked);
  return c;
}

namespace {

struct SubgraphView {
  Graph sub;
  std::vector<VertexId> to_orig_vertex;
  std::vector<EdgeId> to_orig_edge;
};

SubgraphView induced_subgraph(const Graph& g, const std::vector<VertexId>& vertices) {
  SubgraphView view;
  view.to_orig_vertex = vertices;  // ascending
  std::vector<int> local(g.vertex_count(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
  }
  view.sub = Graph(static_cast<int>(vertices.size()), edges);
  view.to_orig_edge.resize(view.sub.edge_count());
  for (EdgeId e = 0; e < view.sub.edge_count(); ++e) {
    auto [u, v] = view.sub.edge(e);
    view.to_orig_edge[e] = *g.edge_id(view.to_orig_vertex[u], view.to_orig_vertex[v]);
  }
  return view;
}

// Branch selection and coloring for one connected graph.
std::pair<PartialColoring, ComponentReport> color_connected(const Graph& g) {
  ComponentReport rep;
  if (g.edge_count() == 0) return {PartialColoring(0), rep};

  GraphStats s = stats(g);
  const int max_deg = s.max_degree;
  const int girth = s.girth.value_or(std::numeric_limits<int>::max());

  if (max_deg <= 2) {
    std::vector<EdgeId> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    rep.branch = Branch::greedy_general;
    rep.bound_claimed = greedy_bound(max_deg);
    PartialColoring c = greedy_full(g, order, Palette{rep.bound_claimed});
    rep.colors_used = c.colors_used();
    return {std::move(c), rep};
  }

  if (s.min_degree < max_deg) {
    VertexId root = 0;
    while (g.degree(root) >= max_deg) ++root;
    rep.branch = Branch::low_degree;
    rep.witness = {root};
    rep.bound_claimed = rooted_partial_bound(max_deg);
    PartialColoring c =
        color_low_degree_root(g, root, Palette{rep.bound_claimed}, &rep.fallback_invoked);
    rep.colors_used = c.colors_used();
    return {std::move(c), rep};
  }

  if (girth >= 5) {
    rep.branch = Branch::regular_girth5;
    rep.witness = {0};
    rep.bound_claimed = regular_girth5_bound(max_deg);
    PartialColoring c =
        color_regular_girth5(g, Palette{rep.bound_claimed}, &rep.fallback_invoked);
    rep.colors_used = c.colors_used();
    return {std::move(c), rep};
  }

  if (max_deg == 5) {
    rep.bound_claimed = regular_girth5_bound(5);
    PartialColoring c;
    if (girth == 3) {
      rep.branch = Branch::delta5_girth3;
      auto tri = find_triangle(g);
      rep.witness.assign(tri->begin(), tri->end());
      c = color_delta5_girth3(g, Palette{rep.bound_claimed}, &rep.fallback_invoked);
    } else {
      rep.branch = Branch::delta5_girth4;
      rep.witness = {*find_four_cycle_root(g)};
      c = color_delta5_girth4(g, Palette{rep.bound_claimed}, &rep.fallback_invoked);
    }
    rep.colors_used = c.colors_used();
    return {std::move(c), rep};
  }

  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  rep.branch = Branch::greedy_general;
  rep.bound_claimed = greedy_bound(max_deg);
  PartialColoring c = greedy_full(g, order, Palette{rep.bound_claimed});
  rep.colors_used = c.colors_used();
  return {std::move(c), rep};
}

void finalize_report(DispatchReport& rep) {
  rep.branch = "trivial";
  for (const auto& comp : rep.components) {
    rep.bound_claimed = std::max(rep.bound_claimed, comp.bound_claimed);
    rep.fallback_invoked = rep.fallback_invoked || comp.fallback_invoked;
    std::string name = branch_name(comp.branch);
    if (rep.branch == "trivial")
      rep.branch = name;
    else if (rep.branch != name)
      rep.branch = "mixed";
  }
}

}  // namespace

std::pair<PartialColoring, DispatchReport> strong_color_delta5(const Graph& g) {
  GraphStats s = stats(g);
  if (s.max_degree != 5)
    throw std::invalid_argument("strong_color_delta5 requires max degree exactly 5");
  if (s.component_count != 1)
    throw std::invalid_argument("strong_color_delta5 requires a connected graph");

  auto [coloring, comp] = color_connected(g);
  DispatchReport rep;
  rep.components = {comp};
  rep.colors_used = coloring.colors_used();
  finalize_report(rep);
  return {std::move(coloring), std::move(rep)};
}

std::pair<PartialColoring, DispatchReport> strong_color(const Graph& g) {
  PartialColoring merged(g.edge_count());
  DispatchReport rep;
  for (const auto& comp_vertices : connected_components(g)) {
    SubgraphView view = induced_subgraph(g, comp_vertices);
    if (view.sub.edge_count() == 0) continue;
    auto [local, comp_rep] = color_connected(view.sub);
    for (EdgeId e = 0; e < view.sub.edge_count(); ++e)
      if (local.is_colored(e)) merged.assign(view.to_orig_edge[e], local.color(e));
    for (VertexId& w : comp_rep.witness) w = view.to_orig_vertex[w];
    rep.components.push_back(std::move(comp_rep));
  }
  rep.colors_used = merged.colors_used();
  finalize_report(rep);
  return {std::move(merged), std::move(rep)};
}

}  // namespace strongedge

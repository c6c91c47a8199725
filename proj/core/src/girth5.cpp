#include "strongedge/girth5.hpp"

#include <algorithm>
#include <string>

namespace strongedge {

int LayerStructure::d2_index(VertexId v) const {
  if (v < 0 || v >= static_cast<int>(d2_pos_.size())) return -1;
  return d2_pos_[v];
}

namespace {

bool adjacent_in_d2(const LayerStructure& ls, VertexId u, VertexId v) {
  int i = ls.d2_index(u);
  if (i < 0) return false;
  const auto& nb = ls.d2_adjacency[i];
  return std::binary_search(nb.begin(), nb.end(), v);
}

}  // namespace

LayerStructure build_layers(const Graph& g, const DistanceClasses& dc, bool expect_girth5) {
  LayerStructure ls;
  ls.root = dc.root;
  if (dc.classes.size() > 1) ls.d1 = dc.classes[1];
  if (dc.classes.size() > 2) ls.d2 = dc.classes[2];

  ls.d2_pos_.assign(g.vertex_count(), -1);
  for (size_t i = 0; i < ls.d2.size(); ++i) ls.d2_pos_[ls.d2[i]] = static_cast<int>(i);

  ls.w_sets.resize(ls.d1.size());
  for (size_t i = 0; i < ls.d1.size(); ++i)
    for (VertexId u : g.neighbors(ls.d1[i]))
      if (ls.d2_index(u) >= 0) ls.w_sets[i].push_back(u);

  ls.d2_adjacency.resize(ls.d2.size());
  for (size_t i = 0; i < ls.d2.size(); ++i)
    for (VertexId u : g.neighbors(ls.d2[i]))
      if (ls.d2_index(u) >= 0) ls.d2_adjacency[i].push_back(u);

  if (expect_girth5) {
    std::vector<int> owner(g.vertex_count(), -1);
    for (size_t i = 0; i < ls.w_sets.size(); ++i) {
      for (VertexId u : ls.w_sets[i]) {
        if (owner[u] != -1)
          throw LayerStructureError("W_" + std::to_string(owner[u]) + " and W_" +
                                    std::to_string(i) + " intersect at vertex " +
                                    std::to_string(u) + "; girth below 5");
        owner[u] = static_cast<int>(i);
      }
    }
    for (size_t i = 0; i < ls.d1.size(); ++i)
      for (size_t j = i + 1; j < ls.d1.size(); ++j)
        if (g.has_edge(ls.d1[i], ls.d1[j]))
          throw LayerStructureError("D_1 not independent; girth below 5");
    for (const auto& w : ls.w_sets)
      for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
          if (g.has_edge(w[i], w[j]))
            throw LayerStructureError("a W set is not independent; girth below 5");
    for (size_t i = 0; i < ls.w_sets.size(); ++i) {
      for (VertexId u : ls.w_sets[i]) {
        std::vector<int> hits(ls.w_sets.size(), 0);
        int pos = ls.d2_index(u);
        for (VertexId v : ls.d2_adjacency[pos])
          if (owner[v] != -1 && owner[v] != static_cast<int>(i)) ++hits[owner[v]];
        for (int h : hits)
          if (h > 1)
            throw LayerStructureError("vertex " + std::to_string(u) +
                                      " has two neighbors in one other W set; girth below 5");
      }
    }
  }
  return ls;
}

namespace {

bool transversal_search(const Graph& g, const LayerStructure& ls, size_t i,
                        std::vector<VertexId>& chosen) {
  if (i == ls.w_sets.size()) return true;
  for (VertexId cand : ls.w_sets[i]) {
    bool ok = true;
    for (VertexId prev : chosen) {
      if (prev == cand || adjacent_in_d2(ls, prev, cand)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(cand);
    if (transversal_search(g, ls, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::vector<EdgeId> find_transversal_matching(const Graph& g, const LayerStructure& ls) {
  std::vector<VertexId> chosen;
  chosen.reserve(ls.d1.size());
  if (!transversal_search(g, ls, 0, chosen))
    throw TransversalNotFound(
        "no independent transversal of the W sets exists at root " + std::to_string(ls.root));
  std::vector<EdgeId> matching;
  matching.reserve(ls.d1.size());
  for (size_t i = 0; i < ls.d1.size(); ++i)
    matching.push_back(*g.edge_id(ls.d1[i], chosen[i]));
  return matching;
}

PartialColoring color_regular_girth5(const Graph& g, Palette p, bool* fallback_invoked) {
  if (fallback_invoked) *fallback_invoked = false;
  if (g.vertex_count() == 0) return PartialColoring(0);
  for (VertexId v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != g.degree(0))
      throw std::invalid_argument("color_regular_girth5 requires a regular graph");

  const VertexId root = 0;  // fixed for reproducibility
  Palette partial{p.size - 1};
  PartialColoring c = greedy_partial(g, root, partial);

  DistanceClasses dc = distance_classes(g, root);
  LayerStructure ls = build_layers(g, dc, /*expect_girth5=*/true);
  std::vector<EdgeId> matching = find_transversal_matching(g, ls);

  // Move the matching into the one new color class, releasing its old colors.
  const Color alpha = p.size;
  for (EdgeId e : matching) c.clear(e);
  for (EdgeId e : matching) c.assign(e, alpha);

  complete_with_fallback(g, c, g.incident_edges(root), p, fallback_invoked);
  return c;
}

}  // namespace strongedge

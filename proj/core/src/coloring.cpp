#include "strongedge/coloring.hpp"

#include <algorithm>
#include <cassert>

namespace strongedge {

void PartialColoring::assign(EdgeId e, Color c) {
  assert(c > 0);
  if (colors_[e] == 0) ++colored_;
  colors_[e] = c;
  max_color_ = std::max(max_color_, c);
}

void PartialColoring::clear(EdgeId e) {
  if (colors_[e] == 0) return;
  bool was_max = colors_[e] == max_color_;
  colors_[e] = 0;
  --colored_;
  if (was_max) max_color_ = *std::max_element(colors_.begin(), colors_.end());
}

std::string describe(const Violation& v, const Graph& g) {
  auto [a, b] = g.edge(v.first);
  auto [c, d] = g.edge(v.second);
  std::string why = v.reason == Violation::Reason::shared_endpoint ? "share an endpoint"
                                                                   : "have adjacent endpoints";
  return "edges (" + std::to_string(a) + "," + std::to_string(b) + ") and (" + std::to_string(c) +
         "," + std::to_string(d) + ") " + why + " and carry the same color";
}

PaletteExhausted::PaletteExhausted(EdgeId edge, std::set<Color> forbidden)
    : std::runtime_error("palette exhausted on edge " + std::to_string(edge) + ": " +
                         std::to_string(forbidden.size()) + " forbidden colors cover the palette"),
      edge_(edge),
      forbidden_(std::move(forbidden)) {}

std::set<Color> forbidden_colors(const Graph& g, const PartialColoring& c, EdgeId e) {
  std::set<Color> out;
  for (EdgeId f : edge_neighborhood(g, e))
    if (c.is_colored(f)) out.insert(c.color(f));
  return out;
}

int forbidden_count(const Graph& g, const PartialColoring& c, EdgeId e) {
  return static_cast<int>(forbidden_colors(g, c, e).size());
}

namespace {

std::optional<Color> first_free_color(const Graph& g, const PartialColoring& c, EdgeId e,
                                      Palette p) {
  std::vector<bool> forbidden(p.size + 1, false);
  for (EdgeId f : edge_neighborhood(g, e)) {
    Color col = c.color(f);
    if (col > 0 && col <= p.size) forbidden[col] = true;
  }
  for (Color col = 1; col <= p.size; ++col)
    if (!forbidden[col]) return col;
  return std::nullopt;
}

}  // namespace

Color greedy_assign(const Graph& g, PartialColoring& c, EdgeId e, Palette p) {
  auto col = first_free_color(g, c, e, p);
  if (!col) throw PaletteExhausted(e, forbidden_colors(g, c, e));
  c.assign(e, *col);
  return *col;
}

std::vector<EdgeId> compatible_edge_order(const Graph& g, const DistanceClasses& dc) {
  std::vector<std::pair<int, EdgeId>> keyed;
  keyed.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (u == dc.root || v == dc.root) continue;
    keyed.emplace_back(-edge_distance(g, dc, e), e);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<EdgeId> order;
  order.reserve(keyed.size());
  for (auto& [d, e] : keyed) order.push_back(e);
  return order;
}

PartialColoring greedy_partial(const Graph& g, VertexId root, Palette p) {
  DistanceClasses dc = distance_classes(g, root);
  PartialColoring c(g.edge_count());
  for (EdgeId e : compatible_edge_order(g, dc)) greedy_assign(g, c, e, p);
  return c;
}

void complete_with_fallback(const Graph& g, PartialColoring& c, std::vector<EdgeId> pending,
                            Palette p, bool* fallback_invoked) {
  std::erase_if(pending, [&](EdgeId e) { return c.is_colored(e); });
  std::sort(pending.begin(), pending.end());
  while (!pending.empty()) {
    // least-constrained edge first: ascending current |F(e)|, ties by id
    size_t pick = 0;
    int pick_count = p.size + 1;
    for (size_t i = 0; i < pending.size(); ++i) {
      int fc = forbidden_count(g, c, pending[i]);
      if (fc < pick_count) {
        pick_count = fc;
        pick = i;
      }
    }
    EdgeId stuck = pending[pick];
    if (pick_count >= p.size) {
      if (fallback_invoked) *fallback_invoked = true;
      if (!backtrack_complete(g, c, pending, p))
        throw PaletteExhausted(stuck, forbidden_colors(g, c, stuck));
      return;
    }
    pending.erase(pending.begin() + pick);
    greedy_assign(g, c, stuck, p);
  }
}

PartialColoring color_low_degree_root(const Graph& g, VertexId root, Palette p,
                                      bool* fallback_invoked) {
  if (fallback_invoked) *fallback_invoked = false;
  GraphStats s = stats(g);
  if (g.degree(root) >= s.max_degree)
    throw std::invalid_argument("color_low_degree_root: root degree must be below max degree");

  PartialColoring c = greedy_partial(g, root, p);
  complete_with_fallback(g, c, g.incident_edges(root), p, fallback_invoked);
  return c;
}

PartialColoring greedy_full(const Graph& g, std::span<const EdgeId> order, Palette p) {
  if (static_cast<int>(order.size()) != g.edge_count())
    throw std::invalid_argument("greedy_full: order must cover every edge exactly once");
  std::vector<bool> seen(g.edge_count(), false);
  for (EdgeId e : order) {
    if (e < 0 || e >= g.edge_count() || seen[e])
      throw std::invalid_argument("greedy_full: order is not a permutation of the edges");
    seen[e] = true;
  }
  PartialColoring c(g.edge_count());
  for (EdgeId e : order) {
    try {
      greedy_assign(g, c, e, p);
    } catch (const PaletteExhausted&) {
      throw std::logic_error("greedy_full exhausted a palette of size " +
                             std::to_string(p.size) + "; palette below the greedy bound");
    }
  }
  return c;
}

std::optional<Violation> verify_strong(const Graph& g, const PartialColoring& c) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!c.is_colored(e)) continue;
    for (EdgeId f : edge_neighborhood(g, e)) {
      if (f <= e || !c.is_colored(f) || c.color(f) != c.color(e)) continue;
      auto [a, b] = g.edge(e);
      auto [x, y] = g.edge(f);
      bool shared = a == x || a == y || b == x || b == y;
      return Violation{e, f,
                       shared ? Violation::Reason::shared_endpoint
                              : Violation::Reason::adjacent_endpoints};
    }
  }
  return std::nullopt;
}

namespace {

bool backtrack_step(const Graph& g, PartialColoring& c, std::vector<EdgeId>& pending, Palette p) {
  if (pending.empty()) return true;
  // most-constrained edge first
  size_t pick = 0;
  int pick_count = -1;
  for (size_t i = 0; i < pending.size(); ++i) {
    int fc = forbidden_count(g, c, pending[i]);
    if (fc > pick_count) {
      pick_count = fc;
      pick = i;
    }
  }
  EdgeId e = pending[pick];
  pending.erase(pending.begin() + pick);

  std::vector<bool> forbidden(p.size + 1, false);
  for (EdgeId f : edge_neighborhood(g, e)) {
    Color col = c.color(f);
    if (col > 0 && col <= p.size) forbidden[col] = true;
  }
  for (Color col = 1; col <= p.size; ++col) {
    if (forbidden[col]) continue;
    c.assign(e, col);
    if (backtrack_step(g, c, pending, p)) return true;
    c.clear(e);
  }
  pending.insert(pending.begin() + pick, e);
  return false;
}

}  // namespace

bool backtrack_complete(const Graph& g, PartialColoring& c, std::vector<EdgeId> remaining,
                        Palette p) {
  std::erase_if(remaining, [&](EdgeId e) { return c.is_colored(e); });
  return backtrack_step(g, c, remaining, p);
}

}  // namespace strongedge

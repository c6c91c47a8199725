#include "strongedge/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace strongedge {

namespace {

std::string pair_str(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edge_list)
    : n_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  edges_.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u == v) throw std::invalid_argument("self-loop " + pair_str(u, v));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("endpoint out of range in " + pair_str(u, v));
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw std::invalid_argument("duplicate edge " + pair_str(dup->first, dup->second));

  adj_.resize(n_);
  inc_.resize(n_);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    auto [u, v] = edges_[e];
    adj_[u].push_back(v);
    inc_[u].push_back(e);
    adj_[v].push_back(u);
    inc_[v].push_back(e);
  }
  for (VertexId v = 0; v < n_; ++v) {
    // sort adjacency by neighbor id, keeping incident edge ids aligned
    std::vector<int> order(adj_[v].size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return adj_[v][a] < adj_[v][b]; });
    std::vector<VertexId> a(order.size());
    std::vector<EdgeId> i2(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
      a[i] = adj_[v][order[i]];
      i2[i] = inc_[v][order[i]];
    }
    adj_[v] = std::move(a);
    inc_[v] = std::move(i2);
  }
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edge_list)
    : Graph(vertex_count,
            std::span<const std::pair<VertexId, VertexId>>(edge_list.begin(), edge_list.size())) {}

std::optional<EdgeId> Graph::edge_id(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return std::nullopt;
  const auto& nb = adj_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return inc_[u][it - nb.begin()];
}

namespace {

// Shortest cycle through the BFS performed from `root`: every scanned
// non-tree arc (u, v) closes a cycle of length <= dist[u] + dist[v] + 1, and
// for a root on a shortest cycle one arc attains the girth exactly.
int shortest_cycle_from(const Graph& g, VertexId root, int best) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<VertexId> parent(g.vertex_count(), -1);
  std::queue<VertexId> q;
  dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    if (2 * dist[u] >= best) continue;  // no shorter cycle reachable
    for (VertexId v : g.neighbors(u)) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        q.push(v);
      } else if (v != parent[u]) {
        best = std::min(best, dist[u] + dist[v] + 1);
      }
    }
  }
  return best;
}

}  // namespace

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.component_count = static_cast<int>(connected_components(g).size());
  if (g.vertex_count() == 0) {
    s.is_regular = true;
    return s;
  }
  s.max_degree = 0;
  s.min_degree = g.degree(0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    s.max_degree = std::max(s.max_degree, g.degree(v));
    s.min_degree = std::min(s.min_degree, g.degree(v));
  }
  s.is_regular = s.max_degree == s.min_degree;

  int best = g.vertex_count() + 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    best = shortest_cycle_from(g, v, best);
  if (best <= g.vertex_count()) s.girth = best;
  return s;
}

DistanceClasses distance_classes(const Graph& g, VertexId root) {
  if (root < 0 || root >= g.vertex_count())
    throw std::invalid_argument("root vertex out of range");
  DistanceClasses dc;
  dc.root = root;
  dc.dist.assign(g.vertex_count(), DistanceClasses::kUnreachable);
  dc.dist[root] = 0;
  std::queue<VertexId> q;
  q.push(root);
  int max_dist = 0;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    max_dist = std::max(max_dist, dc.dist[u]);
    for (VertexId v : g.neighbors(u)) {
      if (dc.dist[v] == DistanceClasses::kUnreachable) {
        dc.dist[v] = dc.dist[u] + 1;
        q.push(v);
      }
    }
  }
  dc.classes.resize(max_dist + 1);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (dc.dist[v] != DistanceClasses::kUnreachable) dc.classes[dc.dist[v]].push_back(v);
  return dc;
}

int edge_distance(const Graph& g, const DistanceClasses& dc, EdgeId e) {
  auto [u, v] = g.edge(e);
  if (dc.dist[u] == DistanceClasses::kUnreachable || dc.dist[v] == DistanceClasses::kUnreachable)
    throw std::logic_error("edge_distance: endpoint unreachable from root");
  return std::min(dc.dist[u], dc.dist[v]);
}

std::vector<EdgeId> edge_neighborhood(const Graph& g, EdgeId e) {
  auto [x, y] = g.edge(e);
  std::set<EdgeId> out;
  for (VertexId z : {x, y})
    for (VertexId w : g.neighbors(z))
      for (EdgeId f : g.incident_edges(w)) out.insert(f);
  out.erase(e);
  return {out.begin(), out.end()};
}

bool is_induced_matching(const Graph& g, std::span<const EdgeId> edge_set) {
  for (size_t i = 0; i < edge_set.size(); ++i) {
    auto [a, b] = g.edge(edge_set[i]);
    for (size_t j = i + 1; j < edge_set.size(); ++j) {
      auto [c, d] = g.edge(edge_set[j]);
      if (a == c || a == d || b == c || b == d) return false;
      if (g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d))
        return false;
    }
  }
  return true;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<std::vector<VertexId>> comps;
  std::vector<bool> seen(g.vertex_count(), false);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    std::queue<VertexId> q;
    seen[s] = true;
    q.push(s);
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop();
      comp.push_back(u);
      for (VertexId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace strongedge

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace strongedge {

using VertexId = int;
using EdgeId = int;

/// Immutable simple undirected graph with dense, stable edge ids.
///
/// Edges are stored once as canonical pairs (u, v) with u < v, sorted
/// lexicographically; the edge id is the position in that order, so ids are
/// 0..m-1 and independent of input order. All queries are const and safe for
/// concurrent readers.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, duplicate edges, or
  /// out-of-range endpoints; the message names the offending pair.
  Graph(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edge_list);
  Graph(int vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Canonical endpoint pair (u < v) of an edge.
  const std::pair<VertexId, VertexId>& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

  /// Neighbors of v, ascending.
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }

  /// Edge ids incident to v, aligned with neighbors(v).
  const std::vector<EdgeId>& incident_edges(VertexId v) const { return inc_[v]; }

  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(VertexId u, VertexId v) const { return edge_id(u, v).has_value(); }
  std::optional<EdgeId> edge_id(VertexId u, VertexId v) const;

 private:
  int n_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<EdgeId>> inc_;
};

/// Structural summary driving algorithm dispatch.
struct GraphStats {
  int max_degree = 0;
  int min_degree = 0;
  std::optional<int> girth;  // nullopt for forests
  bool is_regular = false;
  int component_count = 0;
};

GraphStats stats(const Graph& g);

/// BFS distance classes D_0, D_1, ... from a root vertex. Vertices outside
/// the root's component have dist == kUnreachable and appear in no class.
struct DistanceClasses {
  static constexpr int kUnreachable = -1;

  VertexId root = 0;
  std::vector<int> dist;
  std::vector<std::vector<VertexId>> classes;
};

DistanceClasses distance_classes(const Graph& g, VertexId root);

/// Smallest endpoint distance of edge e from the root of dc.
/// Throws std::logic_error if an endpoint is unreachable.
int edge_distance(const Graph& g, const DistanceClasses& dc, EdgeId e);

/// N(e): edge ids incident to e or with an endpoint adjacent to an endpoint
/// of e, excluding e itself. Sorted ascending. |N(e)| <= 2*D*(D-1).
std::vector<EdgeId> edge_neighborhood(const Graph& g, EdgeId e);

/// True iff no two edges of the set share an endpoint or have adjacent
/// endpoints. The empty set and singletons are induced matchings.
bool is_induced_matching(const Graph& g, std::span<const EdgeId> edge_set);

/// Vertex sets of connected components, each ascending; components ordered
/// by smallest vertex. Isolated vertices form their own components.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

}  // namespace strongedge

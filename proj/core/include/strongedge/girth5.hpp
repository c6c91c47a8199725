#pragma once

#include <stdexcept>
#include <vector>

#include "strongedge/coloring.hpp"
#include "strongedge/graph.hpp"

namespace strongedge {

/// The two distance layers around a root vertex, decomposed per D_1 vertex.
///
/// For girth >= 5 the layers satisfy: the sets W_i are pairwise disjoint,
/// D_1 and each W_i are independent, and a vertex of W_i has at most one
/// neighbor inside any other W_j. build_layers checks all four when the
/// caller claims girth >= 5.
struct LayerStructure {
  VertexId root = 0;
  std::vector<VertexId> d1;                    // ascending
  std::vector<std::vector<VertexId>> w_sets;   // w_sets[i] = N(d1[i]) inside D_2, ascending
  std::vector<VertexId> d2;                    // ascending
  std::vector<std::vector<VertexId>> d2_adjacency;  // aligned with d2; neighbors inside D_2

  /// Position of v in d2, or -1.
  int d2_index(VertexId v) const;

 private:
  friend LayerStructure build_layers(const Graph&, const DistanceClasses&, bool);
  std::vector<int> d2_pos_;  // per-vertex index into d2, -1 elsewhere
};

/// Raised when a girth-claimed layer invariant fails, which signals a
/// miscomputed girth upstream.
class LayerStructureError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when no transversal matching exists; for a Delta-regular graph of
/// girth >= 5 with Delta >= 3 this contradicts a guaranteed existence result
/// and signals a precondition breach.
class TransversalNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LayerStructure build_layers(const Graph& g, const DistanceClasses& dc, bool expect_girth5);

/// One edge w_i v_i per D_1 vertex with {v_1..v_Delta} independent inside
/// D_2; the result is an induced matching of size |D_1|. Deterministic:
/// first witness in ascending candidate order. Throws TransversalNotFound.
std::vector<EdgeId> find_transversal_matching(const Graph& g, const LayerStructure& ls);

/// Total strong coloring of a connected Delta-regular graph of girth >= 5
/// (Delta >= 3) with at most regular_girth5_bound(Delta) colors.
///
/// Procedure: greedy_partial at the lowest-id vertex over the first
/// 2D^2-3D+1 colors, recolor a transversal matching with the one extra
/// color, then complete the root edges greedily from the full palette.
PartialColoring color_regular_girth5(const Graph& g, Palette p, bool* fallback_invoked = nullptr);

}  // namespace strongedge

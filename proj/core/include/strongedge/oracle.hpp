#pragma once

#include <cstdint>

#include "strongedge/coloring.hpp"
#include "strongedge/graph.hpp"

namespace strongedge {

/// Outcome of the exact solver. When solved, lower == upper == chi_s and
/// witness is an optimal coloring; otherwise lower/upper are the best bounds
/// proven before the node budget ran out.
struct OracleResult {
  bool solved = false;
  int chi_s = 0;
  int lower = 0;
  int upper = 0;
  PartialColoring witness;
  std::uint64_t nodes_explored = 0;
};

/// max over edges (u,v) of deg(u) + deg(v) - 1: all edges meeting u or v
/// pairwise conflict through (u,v). 0 for edgeless graphs.
int lower_bound(const Graph& g);

/// Exact strong chromatic index by iterative deepening on the palette size,
/// backtracking over edges in descending |N(e)| order with first-fresh-color
/// symmetry breaking. Practical up to m of about 16; the node budget turns
/// larger runs into an explicit budget-exceeded result, never a silent bound.
OracleResult exact_chi_s(const Graph& g, std::uint64_t node_budget = 100'000'000);

}  // namespace strongedge

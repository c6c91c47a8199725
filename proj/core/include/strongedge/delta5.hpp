#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strongedge/coloring.hpp"
#include "strongedge/graph.hpp"

namespace strongedge {

enum class Branch {
  trivial,          // no edges
  greedy_general,   // plain greedy, 2D^2-2D+1
  low_degree,       // rooted at a vertex of degree < D, 2D^2-3D+1
  regular_girth5,   // transversal recoloring, 2D^2-3D+2
  delta5_girth3,    // triangle release, 37
  delta5_girth4,    // 4-cycle root, 37
};

std::string branch_name(Branch b);

/// Audit record for one colored component.
struct ComponentReport {
  Branch branch = Branch::trivial;
  std::vector<VertexId> witness;  // root vertex, triangle, or 4-cycle root
  int colors_used = 0;
  int bound_claimed = 0;
  bool fallback_invoked = false;
};

/// Audit record for a whole run; components are colored independently and
/// share the palette, so colors_used is the max over components.
struct DispatchReport {
  std::string branch = "trivial";  // single branch name, or "mixed"
  std::vector<ComponentReport> components;
  int colors_used = 0;
  int bound_claimed = 0;
  bool fallback_invoked = false;
};

/// Lexicographically smallest triangle, or nullopt if triangle-free.
std::optional<std::array<VertexId, 3>> find_triangle(const Graph& g);

/// Smallest-id vertex lying on a 4-cycle, or nullopt if none exists.
std::optional<VertexId> find_four_cycle_root(const Graph& g);

/// Total strong coloring of a connected 5-regular girth-3 graph with at most
/// 37 colors: greedy_partial rooted at a triangle vertex, release the other
/// two triangle vertices' edges, then recolor the 12 released edges
/// (triangle-incident edges first, triangle edges last).
PartialColoring color_delta5_girth3(const Graph& g, Palette p, bool* fallback_invoked = nullptr);

/// Total strong coloring of a connected 5-regular girth-4 graph with at most
/// 37 colors: greedy_partial rooted on a 4-cycle, recolor an induced
/// 3-matching of E(D_1, D_2) with the extra color when one exists, then
/// complete the root edges.
PartialColoring color_delta5_girth4(const Graph& g, Palette p, bool* fallback_invoked = nullptr);

/// Dispatcher for connected graphs with max degree exactly 5; always at most
/// 37 colors.
std::pair<PartialColoring, DispatchReport> strong_color_delta5(const Graph& g);

/// Universal entry point. Colors every component with the branch its
/// structure admits and merges the results on a shared palette.
std::pair<PartialColoring, DispatchReport> strong_color(const Graph& g);

}  // namespace strongedge

#pragma once

#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "strongedge/graph.hpp"

namespace strongedge {

using Color = int;  // colors are 1-based; 0 means uncolored

/// Contiguous color range {1, ..., size}.
struct Palette {
  int size = 0;
};

// Worst-case palette sizes by branch, as functions of the maximum degree.
constexpr int greedy_bound(int max_degree) { return 2 * max_degree * max_degree - 2 * max_degree + 1; }
constexpr int rooted_partial_bound(int max_degree) { return 2 * max_degree * max_degree - 3 * max_degree + 1; }
constexpr int regular_girth5_bound(int max_degree) { return 2 * max_degree * max_degree - 3 * max_degree + 2; }

/// Per-edge color assignment. Colors are positive; 0 marks uncolored edges.
/// The container itself enforces no coloring rule; the engine functions keep
/// their outputs strong-valid and verify_strong() checks any assignment.
class PartialColoring {
 public:
  PartialColoring() = default;
  explicit PartialColoring(int edge_count) : colors_(edge_count, 0) {}

  int size() const { return static_cast<int>(colors_.size()); }
  Color color(EdgeId e) const { return colors_[e]; }
  bool is_colored(EdgeId e) const { return colors_[e] != 0; }
  int colors_used() const { return max_color_; }
  int colored_count() const { return colored_; }
  const std::vector<Color>& colors() const { return colors_; }

  void assign(EdgeId e, Color c);
  void clear(EdgeId e);

  bool operator==(const PartialColoring& other) const { return colors_ == other.colors_; }

 private:
  std::vector<Color> colors_;
  int max_color_ = 0;
  int colored_ = 0;
};

/// Witness of a strong-coloring conflict: two equal-colored edges at
/// distance <= 2, with the reason they conflict.
struct Violation {
  enum class Reason { shared_endpoint, adjacent_endpoints };

  EdgeId first = 0;
  EdgeId second = 0;
  Reason reason = Reason::shared_endpoint;
};

std::string describe(const Violation& v, const Graph& g);

/// Raised when a greedy step finds every palette color forbidden.
class PaletteExhausted : public std::runtime_error {
 public:
  PaletteExhausted(EdgeId edge, std::set<Color> forbidden);

  EdgeId edge() const { return edge_; }
  const std::set<Color>& forbidden() const { return forbidden_; }

 private:
  EdgeId edge_;
  std::set<Color> forbidden_;
};

/// F(e): colors currently on edges of N(e). Uncolored neighbors contribute
/// nothing.
std::set<Color> forbidden_colors(const Graph& g, const PartialColoring& c, EdgeId e);

/// |F(e)| without materializing the set.
int forbidden_count(const Graph& g, const PartialColoring& c, EdgeId e);

/// Assigns the least color of {1..p.size} not in F(e) and returns it.
/// Throws PaletteExhausted when F(e) covers the whole palette.
Color greedy_assign(const Graph& g, PartialColoring& c, EdgeId e, Palette p);

/// All edges not incident to dc.root, ordered by nonincreasing root distance;
/// ties broken by ascending edge id. Edges at distance i+1 from the root all
/// precede edges at distance i.
std::vector<EdgeId> compatible_edge_order(const Graph& g, const DistanceClasses& dc);

/// Greedily colors every edge except those incident to `root`, processing
/// edges in compatible order. Requires g connected and
/// p.size >= rooted_partial_bound(max_degree); the result then uses at most
/// that many colors.
PartialColoring greedy_partial(const Graph& g, VertexId root, Palette p);

/// Completes `pending` greedily by ascending current |F(e)| (ties by edge
/// id), recomputing after each assignment. If a step finds the palette
/// exhausted, exhaustive backtracking over the still-uncolored pending edges
/// runs instead and *fallback_invoked is set (never reset); PaletteExhausted
/// propagates only when backtracking also fails.
void complete_with_fallback(const Graph& g, PartialColoring& c, std::vector<EdgeId> pending,
                            Palette p, bool* fallback_invoked = nullptr);

/// Total strong coloring for a connected graph with deg(root) < max_degree,
/// using at most rooted_partial_bound(max_degree) colors: greedy_partial,
/// then the root edges by ascending current |F(e)|. If a guaranteed greedy
/// step ever exhausts the palette, bounded backtracking over the remaining
/// root edges runs before an error is raised; *fallback_invoked reports it.
PartialColoring color_low_degree_root(const Graph& g, VertexId root, Palette p,
                                      bool* fallback_invoked = nullptr);

/// Greedy over an explicit order covering all edges. Requires
/// p.size >= greedy_bound(max_degree); exhaustion is then impossible and is
/// reported as std::logic_error.
PartialColoring greedy_full(const Graph& g, std::span<const EdgeId> order, Palette p);

/// nullopt iff the colored subset is strong-valid; otherwise the first
/// violating pair in edge-id order.
std::optional<Violation> verify_strong(const Graph& g, const PartialColoring& c);

/// Exhaustive backtracking over the uncolored edges in `remaining`, all
/// within {1..p.size}. Returns true and leaves c totally colored on those
/// edges on success; false (c restored) if no completion exists. Intended
/// for small remainders (call sites pass at most max_degree edges).
bool backtrack_complete(const Graph& g, PartialColoring& c, std::vector<EdgeId> remaining,
                        Palette p);

}  // namespace strongedge

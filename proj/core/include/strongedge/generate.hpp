#pragma once

#include <cstdint>
#include <string>

#include "strongedge/graph.hpp"

namespace strongedge {

/// The 10-vertex 3-regular girth-5 graph: outer 5-cycle 0..4, spokes to 5..9,
/// inner pentagram.
Graph gen_petersen();

/// Cycle 0-1-...-(n-1)-0. Requires n >= 3.
Graph gen_cycle(int n);

/// Blowup of the 5-cycle into independent sets joined completely along the
/// cycle. Even max_degree: five parts of size max_degree/2, the result is
/// regular with 5*max_degree^2/4 edges. Odd max_degree: two adjacent parts of
/// size (max_degree+1)/2 and three of size (max_degree-1)/2, giving
/// (5*max_degree^2 - 2*max_degree + 1)/4 edges and minimum degree
/// max_degree - 1. Every pair of edges is within distance two.
Graph gen_c5_blowup(int max_degree);

/// d-regular simple graph with girth >= girth_min, sampled by seeded
/// randomized construction (incremental edge placement constrained to
/// distance >= girth_min - 1, with exhaustive completion of the endgame and
/// full restarts). Identical arguments give identical graphs.
/// Throws std::runtime_error naming the retry limit when no graph is found,
/// and std::invalid_argument for impossible parameter combinations.
Graph gen_random_regular(int n, int degree, int girth_min, std::uint64_t seed);

/// Connected random graph with maximum degree exactly max_degree (when
/// n > max_degree): a degree-capped random spanning tree plus random extra
/// edges, then one vertex topped up to the cap. Deterministic per seed.
Graph gen_random_max_degree(int n, int max_degree, std::uint64_t seed);

/// Parsed form of a generator request such as "petersen", "cycle:7",
/// "c5_blowup:4", "random_regular:30,3,5", "random_max_degree:40,5".
struct GeneratorSpec {
  enum class Kind { petersen, cycle, c5_blowup, random_regular, random_max_degree };

  Kind kind = Kind::petersen;
  int n = 0;
  int degree = 0;
  int girth_min = 3;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on unknown kinds or malformed arguments.
  static GeneratorSpec parse(const std::string& text, std::uint64_t seed);

  Graph build() const;
};

}  // namespace strongedge

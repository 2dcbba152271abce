#pragma once
// Independent brute-force baselines used to validate the main algorithms.
//
// These deliberately avoid the library's enumeration and group machinery:
// lines come from subset search (or a geometric ray walk on larger cubes),
// automorphisms from a backtracking search over point bijections driven only
// by the oracle's own line sets, and graph isomorphism from exhaustive
// bijection search.  Everything here is single-threaded and deterministic,
// with hard size guards.

#include <optional>
#include <vector>

#include "cubesym/cube.hpp"
#include "cubesym/graph.hpp"

namespace cubesym::oracle {

// All n-point subsets that form a line, as ascending point-index vectors,
// sorted lexicographically.  For n^d <= 32 this tests every n-subset under
// the candidate orderings (sort by each coordinate, ties lexicographic)
// with is_linear_sequence; for n^d <= 4096 it walks geometric rays from
// every point in every {-1,0,1}^d direction instead.  TooLargeError beyond.
std::vector<std::vector<PointIndex>> brute_force_lines(const CubeParams& c);

// All point bijections mapping every line onto a line, as image vectors
// (entry p is the image of point p), sorted lexicographically.  Backtracking
// over images in decreasing-degree order with degree and partial-line
// pruning.  Requires n^d <= 64.
std::vector<std::vector<PointIndex>> brute_force_automorphisms(
    const CubeParams& c);

// Lexicographically smallest vertex bijection g1 -> g2 that preserves
// adjacency both ways, or nullopt.  Requires at most 8 vertices per graph.
std::optional<std::vector<int>> brute_force_graph_iso(const Graph& g1,
                                                      const Graph& g2);

}  // namespace cubesym::oracle

#pragma once
// Reduction from Graph Isomorphism to the colored-cube decision: a graph on
// n vertices becomes a 2-coloring of the square cube [2n+4]^2 whose top-left
// n x n block is the adjacency matrix, with two marker cells at [n,n] and
// [n,n+1].  The marker pair breaks the transpose symmetry, so every
// automorphism carrying one gadget coloring to another is a pure value
// permutation that restricts to a vertex bijection.

#include <cstdint>
#include <optional>
#include <vector>

#include "cubesym/coloring.hpp"
#include "cubesym/graph.hpp"

namespace cubesym {

// Side length of the gadget cube for an n-vertex graph.
inline int reduction_side(int vertex_count) { return 2 * vertex_count + 4; }

// The gadget coloring s with s[[i,j]] = 1 iff [i,j] = [n,n], [i,j] = [n,n+1],
// or i,j < n and {i,j} is an edge.  Requires at least one vertex
// (EmptyGraphError) and minimum degree 1 (IsolatedVertexError): an isolated
// vertex admits spurious value permutations that move its index out of the
// vertex block, breaking extraction.
Coloring reduce_graph(const Graph& g);

// Restriction of a pure value permutation on the [2n+4]^2 cube to the vertex
// block [n].  NotAValuePermutationError if the coordinate part is not the
// identity; RangeViolationError if some vertex index leaves [n].
std::vector<int> extract_graph_isomorphism(const Automorphism& a,
                                           int vertex_count);

// The value-permutation automorphism with pi(i) = f(i) on the vertex block,
// pi fixing n and n+1, and the upper half forced by the palindromic property
// pi(k-1-i) = k-1-pi(i).  NotABijectionError if f is not a bijection on [n].
Automorphism embed_graph_isomorphism(const std::vector<int>& f,
                                     int vertex_count);

enum class GraphIsoMode { fast, full };

// Decides graph isomorphism through the gadget and returns a vertex
// bijection (the lexicographically smallest one in fast mode).  Fast mode
// tries every embedded vertex bijection against the two colorings; full mode
// runs the general colored-cube decision over the whole group and extracts
// the witness.  Both validate the gadget preconditions; full mode propagates
// CapExceededError.
std::optional<std::vector<int>> graph_iso_via_cube(
    const Graph& g1, const Graph& g2, GraphIsoMode mode = GraphIsoMode::fast,
    std::uint64_t cap = kDefaultGroupCap, int threads = 1);

}  // namespace cubesym

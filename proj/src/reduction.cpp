#include "cubesym/reduction.hpp"

#include <algorithm>
#include <numeric>

namespace cubesym {

Coloring reduce_graph(const Graph& g) {
  if (g.n == 0) throw EmptyGraphError("reduce_graph: graph has no vertices");
  const std::vector<int> degs = vertex_degrees(g);
  for (int v = 0; v < g.n; ++v)
    if (degs[v] == 0)
      throw IsolatedVertexError(
          "reduce_graph: vertex " + std::to_string(v) +
          " has degree 0; the gadget needs minimum degree 1");
  const int k = reduction_side(g.n);
  CubeParams cube(k, 2);
  std::vector<int> colors(cube.point_count(), 0);
  auto cell = [&](int i, int j) -> int& {
    return colors[i + static_cast<PointIndex>(j) * k];
  };
  cell(g.n, g.n) = 1;
  cell(g.n, g.n + 1) = 1;
  for (const auto& [u, v] : g.edges) {
    cell(u, v) = 1;
    cell(v, u) = 1;
  }
  return make_coloring(cube, 2, std::move(colors));
}

std::vector<int> extract_graph_isomorphism(const Automorphism& a,
                                           int vertex_count) {
  if (vertex_count < 1)
    throw std::invalid_argument(
        "extract_graph_isomorphism: vertex count must be positive");
  const int k = reduction_side(vertex_count);
  if (a.cube.d != 2 || a.cube.n != k)
    throw std::invalid_argument(
        "extract_graph_isomorphism: automorphism must act on the [2n+4]^2 "
        "cube");
  std::vector<int> id2{0, 1};
  if (a.coord.perm != id2 || a.coord.flips != std::vector<int>{0, 0})
    throw NotAValuePermutationError(
        "extract_graph_isomorphism: coordinate part is not the identity");
  std::vector<int> f(vertex_count);
  for (int i = 0; i < vertex_count; ++i) {
    if (a.value.perm[i] >= vertex_count)
      throw RangeViolationError(
          "extract_graph_isomorphism: value permutation sends vertex " +
          std::to_string(i) + " to " + std::to_string(a.value.perm[i]) +
          ", outside the vertex block");
    f[i] = a.value.perm[i];
  }
  return f;
}

Automorphism embed_graph_isomorphism(const std::vector<int>& f,
                                     int vertex_count) {
  if (vertex_count < 1)
    throw std::invalid_argument(
        "embed_graph_isomorphism: vertex count must be positive");
  if (static_cast<int>(f.size()) != vertex_count)
    throw NotABijectionError(
        "embed_graph_isomorphism: map size differs from the vertex count");
  std::vector<bool> seen(vertex_count, false);
  for (int x : f) {
    if (x < 0 || x >= vertex_count || seen[x])
      throw NotABijectionError(
          "embed_graph_isomorphism: map is not a bijection on the vertices");
    seen[x] = true;
  }
  const int k = reduction_side(vertex_count);
  std::vector<int> pi(k);
  for (int i = 0; i < vertex_count; ++i) pi[i] = f[i];
  pi[vertex_count] = vertex_count;
  pi[vertex_count + 1] = vertex_count + 1;
  for (int i = 0; i <= vertex_count + 1; ++i) pi[k - 1 - i] = k - 1 - pi[i];
  return value_perm(CubeParams(k, 2), std::move(pi));
}

std::optional<std::vector<int>> graph_iso_via_cube(const Graph& g1,
                                                   const Graph& g2,
                                                   GraphIsoMode mode,
                                                   std::uint64_t cap,
                                                   int threads) {
  // gadget preconditions hold for both inputs in every mode
  const Coloring s1 = reduce_graph(g1);
  const Coloring s2 = reduce_graph(g2);
  if (g1.n != g2.n) return std::nullopt;
  if (g1.edges.size() != g2.edges.size()) return std::nullopt;

  if (mode == GraphIsoMode::full) {
    std::optional<Automorphism> w = are_isomorphic(s1, s2, cap, threads);
    if (!w) return std::nullopt;
    return extract_graph_isomorphism(*w, g1.n);
  }

  // fast mode: the only candidates are embedded vertex bijections; the two
  // colorings have equally many 1-cells, so carrying every 1 of s1 onto a 1
  // of s2 already forces equality
  std::vector<PointIndex> ones;
  for (PointIndex p = 0; p < static_cast<PointIndex>(s1.colors.size()); ++p)
    if (s1.colors[p] == 1) ones.push_back(p);
  std::vector<int> f(g1.n);
  std::iota(f.begin(), f.end(), 0);
  do {
    const Automorphism a = embed_graph_isomorphism(f, g1.n);
    bool carries = true;
    for (PointIndex p : ones) {
      if (s2.colors[apply_point(a, p)] != 1) {
        carries = false;
        break;
      }
    }
    if (carries) return f;
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

}  // namespace cubesym

#pragma once
// Simple undirected graphs on vertex set {0,...,n-1}.

#include <string>
#include <utility>
#include <vector>

#include "cubesym/errors.hpp"

namespace cubesym {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized: u < v, sorted, unique

  bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

// Validates vertex ranges, rejects self-loops, normalizes edge order.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

bool has_edge(const Graph& g, int u, int v);
std::vector<int> vertex_degrees(const Graph& g);
int min_degree(const Graph& g);  // 0 for a graph without edges

// Text format: one "u v" edge per line, '#' starts a comment, an optional
// "p <n>" header pins the vertex count; otherwise it is 1 + max index.
Graph parse_graph_file(const std::string& text);

}  // namespace cubesym

#include "cubesym/graph.hpp"

#include <algorithm>
#include <sstream>

namespace cubesym {

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("make_graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("make_graph: edge endpoint outside [0, n)");
    if (u == v)
      throw std::invalid_argument("make_graph: self-loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{n, std::move(edges)};
}

bool has_edge(const Graph& g, int u, int v) {
  if (u > v) std::swap(u, v);
  return std::binary_search(g.edges.begin(), g.edges.end(),
                            std::make_pair(u, v));
}

std::vector<int> vertex_degrees(const Graph& g) {
  std::vector<int> deg(g.n, 0);
  for (const auto& [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

int min_degree(const Graph& g) {
  if (g.n == 0) return 0;
  const std::vector<int> deg = vertex_degrees(g);
  return *std::min_element(deg.begin(), deg.end());
}

Graph parse_graph_file(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  bool have_header = false;
  int header_n = 0;
  int max_index = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream line(raw);
    std::string first;
    if (!(line >> first)) continue;  // blank
    const std::string where = " (line " + std::to_string(line_no) + ")";
    if (first == "p") {
      if (have_header || !edges.empty())
        throw ParseError("graph file: stray 'p' header" + where);
      if (!(line >> header_n) || header_n < 0)
        throw ParseError("graph file: bad vertex count after 'p'" + where);
      have_header = true;
    } else {
      int u = 0, v = 0;
      try {
        u = std::stoi(first);
      } catch (const std::exception&) {
        throw ParseError("graph file: bad vertex '" + first + "'" + where);
      }
      if (!(line >> v))
        throw ParseError("graph file: edge needs two vertices" + where);
      if (u < 0 || v < 0)
        throw ParseError("graph file: negative vertex" + where);
      if (u == v) throw ParseError("graph file: self-loop" + where);
      edges.emplace_back(u, v);
      max_index = std::max({max_index, u, v});
    }
    std::string extra;
    if (line >> extra)
      throw ParseError("graph file: trailing token '" + extra + "'" + where);
  }
  int n = have_header ? header_n : max_index + 1;
  if (max_index >= n)
    throw ParseError("graph file: vertex " + std::to_string(max_index) +
                     " outside declared count " + std::to_string(n));
  return make_graph(n, std::move(edges));
}

}  // namespace cubesym

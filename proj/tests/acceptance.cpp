// Acceptance checks for the cube symmetry library.  Each criterion prints
// exactly one PASS/FAIL line; the binary exits nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubesym/autgroup.hpp"
#include "cubesym/coloring.hpp"
#include "cubesym/cube.hpp"
#include "cubesym/graph.hpp"
#include "cubesym/oracle.hpp"
#include "cubesym/reduction.hpp"

using namespace cubesym;

namespace {

int failures = 0;

template <typename F>
void criterion(int id, const char* label, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << id
            << "  " << label << "  (" << ms << " ms)\n";
  if (!ok) {
    ++failures;
    if (!err.empty()) std::cout << "      error: " << err << "\n";
  }
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t lcg_next(std::uint64_t& s) {
  s = s * 6364136223846793005ULL + 1442695040888963407ULL;
  return s >> 33;
}

std::vector<std::vector<PointIndex>> sorted_line_sets(const CubeParams& c) {
  std::vector<std::vector<PointIndex>> out;
  for (const Line& l : enumerate_lines(c)) {
    std::vector<PointIndex> pts = l.points;
    std::sort(pts.begin(), pts.end());
    out.push_back(std::move(pts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Closure of a generating set inside the full group, keyed by the printed
// canonical triple.
std::set<std::string> closure_keys(const CubeParams& c,
                                   const std::vector<Automorphism>& gens) {
  std::map<std::string, Automorphism> seen;
  std::vector<Automorphism> queue;
  const Automorphism e = identity(c);
  seen.emplace(format_automorphism(e), e);
  queue.push_back(e);
  while (!queue.empty()) {
    const Automorphism x = queue.back();
    queue.pop_back();
    for (const Automorphism& g : gens) {
      Automorphism y = compose(x, g);
      std::string key = format_automorphism(y);
      if (seen.emplace(std::move(key), y).second) queue.push_back(y);
    }
  }
  std::set<std::string> keys;
  for (const auto& [k, v] : seen) keys.insert(k);
  return keys;
}

std::vector<Graph> min_degree_one_graphs(int m) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(m, 0);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1u) {
        edges.push_back(slots[i]);
        ++deg[slots[i].first];
        ++deg[slots[i].second];
      }
    if (std::all_of(deg.begin(), deg.end(), [](int x) { return x > 0; }))
      out.push_back(make_graph(m, edges));
  }
  return out;
}

bool valid_graph_iso(const Graph& a, const Graph& b,
                     const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != a.n || a.n != b.n) return false;
  std::vector<int> seen(b.n, 0);
  for (int v : f) {
    if (v < 0 || v >= b.n || seen[v]++) return false;
  }
  if (a.edges.size() != b.edges.size()) return false;
  for (const auto& [u, v] : a.edges)
    if (!has_edge(b, f[u], f[v])) return false;
  return true;
}

}  // namespace

int main() {
  // 1. Enumerated group size == closed-form order == exhaustive search count.
  criterion(1, "group order: formula vs enumeration vs exhaustive search", [] {
    const std::vector<std::tuple<int, int, std::uint64_t>> cases{
        {3, 2, 8}, {4, 2, 32}, {5, 2, 32}, {3, 3, 48}, {4, 3, 192}};
    for (const auto& [n, d, expect] : cases) {
      CubeParams c(n, d);
      if (group_order(c) != expect) return false;
      if (enumerate_group(c).size() != expect) return false;
      if (oracle::brute_force_automorphisms(c).size() != expect) return false;
    }
    return true;
  });

  // 2. The 4x4x4 cube has exactly 192 symmetries.
  criterion(2, "4^3 cube has 192 symmetries", [] {
    CubeParams c(4, 3);
    return group_order(c) == 192 && enumerate_group(c).size() == 192;
  });

  // 3. n = 2: every bijection preserves lines, so the group is symmetric
  // on 2^d points.
  criterion(3, "n=2 collapses to the full symmetric group", [] {
    return oracle::brute_force_automorphisms(CubeParams(2, 2)).size() == 24 &&
           group_order(CubeParams(2, 2)) == 24 &&
           group_order(CubeParams(2, 3)) == 40320;
  });

  // 4. Line enumeration against the subset oracle and the closed form.
  criterion(4, "line enumeration vs subset oracle and closed-form count", [] {
    for (const auto& [n, d] : {std::pair{3, 2}, {4, 2}, {3, 3}}) {
      CubeParams c(n, d);
      if (sorted_line_sets(c) != oracle::brute_force_lines(c)) return false;
    }
    for (int n = 2; n <= 7; ++n)
      for (int d = 1; d <= 4; ++d) {
        CubeParams c(n, d);
        const std::int64_t closed = (ipow(n + 2, d) - ipow(n, d)) / 2;
        if (line_count(c) != closed) return false;
        if (static_cast<std::int64_t>(enumerate_lines(c).size()) != closed)
          return false;
      }
    return true;
  });

  // 5. Blockwise degree formula equals the counted incident lines.
  criterion(5, "blockwise degree formula vs counted incident lines", [] {
    for (int n = 2; n <= 5; ++n)
      for (int d = 1; d <= 3; ++d) {
        CubeParams c(n, d);
        std::vector<std::int64_t> incident(c.point_count(), 0);
        for (const Line& l : enumerate_lines(c))
          for (PointIndex p : l.points) ++incident[p];
        for (PointIndex p = 0; p < c.point_count(); ++p)
          if (degree(c, point_coords(c, p)) != incident[p]) return false;
      }
    // spot instance: [0,2,2] in 5^3 sits on a one-dimensional central line;
    // its blocks contribute (2^1 - 1) + (3^2 - 1)/2 = 5
    return degree(CubeParams(5, 3), {0, 2, 2}) == 5;
  });

  // 6. Rigidity: fixing every corner and one full edge forces the identity.
  criterion(6, "fixing all corners and one edge forces the identity", [] {
    for (const auto& [n, d] :
         {std::pair{4, 2}, {5, 2}, {3, 3}, {4, 3}}) {
      CubeParams c(n, d);
      const std::vector<PointIndex> corners = corner_indices(c);
      std::vector<PointIndex> edge_points;
      for (int i = 0; i < n; ++i) {
        Coords p(d, 0);
        p[0] = i;
        edge_points.push_back(point_index(c, p));
      }
      std::vector<Automorphism> fixers;
      for (const Automorphism& a : enumerate_group(c)) {
        const std::vector<PointIndex> m = point_map(a);
        bool fixes = true;
        for (PointIndex q : corners) fixes = fixes && m[q] == q;
        for (PointIndex q : edge_points) fixes = fixes && m[q] == q;
        if (fixes) fixers.push_back(a);
      }
      if (fixers.size() != 1 || !(fixers[0] == identity(c))) return false;
    }
    return true;
  });

  // 7. Factorization round trip: whole groups at (4,2) and (3,3), sampled
  // at (5,3).
  criterion(7, "point-map factorization round trip", [] {
    for (const auto& [n, d] : {std::pair{4, 2}, {3, 3}}) {
      CubeParams c(n, d);
      for (const Automorphism& t : enumerate_group(c))
        if (!(factor_automorphism(c, point_map(t)) == t)) return false;
    }
    CubeParams c(5, 3);
    GroupEnumeration g = enumerate_group(c);
    std::uint64_t seed = 20260819;
    for (int trial = 0; trial < 1000; ++trial) {
      const Automorphism t = g.element_at(lcg_next(seed) % g.size());
      if (!(factor_automorphism(c, point_map(t)) == t)) return false;
    }
    return true;
  });

  // 8. Structural properties: diagonals map onto diagonals; an edge's image
  // is always a dimension-1 line, and is an edge whenever the element keeps
  // the corner set (at even n a value permutation may swap the extreme pair
  // with an interior pair, so corners can move; at odd n the full statement
  // holds and is checked at (3,3)); rotation/value-perm subgroup
  // intersection sizes; the axial swap lies in their span iff d is odd.
  criterion(8, "diagonal/edge image structure, subgroup meet, axial membership",
            [] {
    CubeParams c43(4, 3);
    std::set<std::vector<PointIndex>> diag_sets, edge_sets, dim1_sets;
    for (const Line& l : main_diagonals(c43)) {
      std::vector<PointIndex> s = l.points;
      std::sort(s.begin(), s.end());
      diag_sets.insert(std::move(s));
    }
    for (const Line& l : enumerate_lines(c43)) {
      if (dim_of_line(l.type) != 1) continue;
      std::vector<PointIndex> s = l.points;
      std::sort(s.begin(), s.end());
      dim1_sets.insert(s);
    }
    for (const Line& l : edges(c43)) {
      std::vector<PointIndex> s = l.points;
      std::sort(s.begin(), s.end());
      edge_sets.insert(std::move(s));
    }
    const std::vector<PointIndex> corners43 = corner_indices(c43);
    const std::set<PointIndex> corner_set(corners43.begin(), corners43.end());
    bool corner_mover_seen = false;
    for (const Automorphism& a : enumerate_group(c43)) {
      const std::vector<PointIndex> m = point_map(a);
      bool keeps_corners = true;
      for (PointIndex q : corners43)
        keeps_corners = keeps_corners && corner_set.count(m[q]) > 0;
      corner_mover_seen = corner_mover_seen || !keeps_corners;
      for (const auto& ds : diag_sets) {
        std::vector<PointIndex> img;
        for (PointIndex p : ds) img.push_back(m[p]);
        std::sort(img.begin(), img.end());
        if (!diag_sets.count(img)) return false;
      }
      for (const auto& es : edge_sets) {
        std::vector<PointIndex> img;
        for (PointIndex p : es) img.push_back(m[p]);
        std::sort(img.begin(), img.end());
        if (!dim1_sets.count(img)) return false;
        if (keeps_corners && !edge_sets.count(img)) return false;
      }
    }
    if (!corner_mover_seen) return false;  // even n: the weaker check matters
    // odd n: every element maps edges onto edges
    CubeParams c33(3, 3);
    std::set<std::vector<PointIndex>> edges33;
    for (const Line& l : edges(c33)) {
      std::vector<PointIndex> s = l.points;
      std::sort(s.begin(), s.end());
      edges33.insert(std::move(s));
    }
    for (const Automorphism& a : enumerate_group(c33)) {
      const std::vector<PointIndex> m = point_map(a);
      for (const auto& es : edges33) {
        std::vector<PointIndex> img;
        for (PointIndex p : es) img.push_back(m[p]);
        std::sort(img.begin(), img.end());
        if (!edges33.count(img)) return false;
      }
    }
    // rotation subgroup meet value-perm subgroup: size 2 at d=2, 1 at d=3
    for (const auto& [d, meet] : {std::pair{2, 2}, {3, 1}}) {
      CubeParams c(4, d);
      std::set<std::string> rot, val;
      for (const Automorphism& a : enumerate_rotations(c))
        rot.insert(format_automorphism(a));
      for (const Automorphism& a : enumerate_value_perms(c))
        val.insert(format_automorphism(a));
      std::size_t common = 0;
      for (const std::string& k : rot) common += val.count(k);
      if (common != static_cast<std::size_t>(meet)) return false;
    }
    // axial swap of the last two coordinates: inside the span iff d odd
    for (int d : {2, 3}) {
      CubeParams c(4, d);
      std::vector<Automorphism> gens = enumerate_rotations(c);
      const std::vector<Automorphism> vals = enumerate_value_perms(c);
      gens.insert(gens.end(), vals.begin(), vals.end());
      const bool inside =
          closure_keys(c, gens).count(format_automorphism(axial(c))) > 0;
      if (inside != (d % 2 == 1)) return false;
    }
    return true;
  });

  // 9. Canonical forms: orbit invariance on random colorings, and the class
  // count over all 3^9 colorings of 3^2 matches cycle counting.
  criterion(9, "canonical form orbit invariance and class counting", [] {
    CubeParams c43(4, 3);
    GroupEnumeration g43 = enumerate_group(c43);
    std::uint64_t seed = 424243;
    for (int trial = 0; trial < 10000; ++trial) {
      std::vector<int> colors(c43.point_count());
      for (int& x : colors) x = static_cast<int>(lcg_next(seed) % 3);
      const Coloring s = make_coloring(c43, 3, colors);
      const Automorphism g = g43.element_at(lcg_next(seed) % g43.size());
      if (!(canonical_form(s).coloring ==
            canonical_form(apply_to_coloring(g, s)).coloring))
        return false;
    }
    CubeParams c32(3, 2);
    // orbit count by averaging fixed colorings over the group
    std::uint64_t fixed_sum = 0, order = 0;
    for (const Automorphism& a : enumerate_group(c32)) {
      const std::vector<PointIndex> m = point_map(a);
      std::vector<char> visited(m.size(), 0);
      int cycles = 0;
      for (std::size_t p = 0; p < m.size(); ++p) {
        if (visited[p]) continue;
        ++cycles;
        for (std::size_t q = p; !visited[q]; q = m[q]) visited[q] = 1;
      }
      fixed_sum += ipow(3, cycles);
      ++order;
    }
    const std::uint64_t orbit_count = fixed_sum / order;
    // distinct canonical forms over every 3-coloring of the 9 points
    std::set<std::vector<int>> canon;
    std::vector<int> colors(9, 0);
    for (;;) {
      canon.insert(canonical_form(make_coloring(c32, 3, colors))
                       .coloring.colors);
      int i = 0;
      while (i < 9 && ++colors[i] == 3) colors[i++] = 0;
      if (i == 9) break;
    }
    return orbit_count == 2862 && canon.size() == 2862;
  });

  // 10. The graph gadget agrees with exhaustive bijection search.
  criterion(10, "graph isomorphism gadget vs exhaustive bijection search",
            [] {
    std::vector<Graph> graphs;
    const std::vector<std::size_t> expect_counts{1, 4, 41, 768};
    for (int m = 2; m <= 5; ++m) {
      std::vector<Graph> level = min_degree_one_graphs(m);
      if (level.size() != expect_counts[m - 2]) return false;
      graphs.insert(graphs.end(), level.begin(), level.end());
    }
    for (const Graph& a : graphs)
      for (const Graph& b : graphs)
        if (graph_iso_via_cube(a, b, GraphIsoMode::fast) !=
            oracle::brute_force_graph_iso(a, b))
          return false;
    // full-group mode on every pair with at most 4 vertices
    for (const Graph& a : graphs) {
      if (a.n > 4) continue;
      for (const Graph& b : graphs) {
        if (b.n > 4) continue;
        const auto expect = oracle::brute_force_graph_iso(a, b);
        const auto got = graph_iso_via_cube(a, b, GraphIsoMode::full);
        if (expect.has_value() != got.has_value()) return false;
        if (got && !valid_graph_iso(a, b, *got)) return false;
      }
    }
    // the path on three vertices reduces to this exact 10x10 matrix
    std::vector<int> expected(100, 0);
    for (int idx : {1, 10, 12, 21, 33, 43}) expected[idx] = 1;
    const Coloring r = reduce_graph(make_graph(3, {{0, 1}, {1, 2}}));
    return r.cube == CubeParams(10, 2) && r.k == 2 && r.colors == expected;
  });

  std::cout << "\n"
            << (10 - failures) << "/10 criteria passed\n";
  return failures == 0 ? 0 : 1;
}

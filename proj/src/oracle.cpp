#include "cubesym/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace cubesym::oracle {

namespace {

// Local mixed-radix decode; the oracle must not lean on the indexing code it
// is used to check, so this is deliberately written out again.
Coords decode(const CubeParams& c, PointIndex index) {
  Coords p(c.d);
  for (int i = 0; i < c.d; ++i) {
    p[i] = static_cast<int>(index % c.n);
    index /= c.n;
  }
  return p;
}

PointIndex encode(const CubeParams& c, const Coords& p) {
  PointIndex idx = 0;
  for (int i = c.d - 1; i >= 0; --i) idx = idx * c.n + p[i];
  return idx;
}

// Every n-subset, tested under the candidate orderings: sort by coordinate j
// with lexicographic tie-break, for each j.  Sufficient because a line is
// strictly monotone in every non-constant coordinate, so sorting by any
// coordinate (ties resolved by the full tuple) lists a line in linear order.
std::vector<std::vector<PointIndex>> lines_by_subsets(const CubeParams& c) {
  const int N = static_cast<int>(c.point_count());
  std::vector<Coords> coords(N);
  for (int p = 0; p < N; ++p) coords[p] = decode(c, p);
  std::vector<std::vector<PointIndex>> found;
  std::vector<int> pick(c.n);
  for (int i = 0; i < c.n; ++i) pick[i] = i;
  for (;;) {
    for (int j = 0; j < c.d; ++j) {
      std::vector<Coords> seq(c.n);
      for (int i = 0; i < c.n; ++i) seq[i] = coords[pick[i]];
      std::sort(seq.begin(), seq.end(), [j](const Coords& a, const Coords& b) {
        if (a[j] != b[j]) return a[j] < b[j];
        return a < b;
      });
      if (is_linear_sequence(c, seq)) {
        std::vector<PointIndex> line(pick.begin(), pick.end());
        found.push_back(std::move(line));  // pick is already ascending
        break;
      }
    }
    // next combination
    int i = c.n - 1;
    while (i >= 0 && pick[i] == N - c.n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int t = i + 1; t < c.n; ++t) pick[t] = pick[t - 1] + 1;
  }
  std::sort(found.begin(), found.end());
  return found;
}

// Geometric variant: from every point, walk every {-1,0,1}^d direction and
// keep the rays that stay inside the cube for n steps.  Each line shows up
// from both of its end points; a set dedupes.
std::vector<std::vector<PointIndex>> lines_by_rays(const CubeParams& c) {
  const PointIndex N = c.point_count();
  std::set<std::vector<PointIndex>> found;
  const std::int64_t dirs = [&] {
    std::int64_t r = 1;
    for (int i = 0; i < c.d; ++i) r *= 3;
    return r;
  }();
  for (PointIndex p = 0; p < N; ++p) {
    const Coords start = decode(c, p);
    for (std::int64_t dcode = 0; dcode < dirs; ++dcode) {
      std::vector<int> v(c.d);
      std::int64_t rest = dcode;
      bool zero = true;
      for (int i = 0; i < c.d; ++i) {
        v[i] = static_cast<int>(rest % 3) - 1;
        rest /= 3;
        if (v[i] != 0) zero = false;
      }
      if (zero) continue;
      std::vector<PointIndex> line;
      line.reserve(c.n);
      bool ok = true;
      for (int t = 0; t < c.n && ok; ++t) {
        Coords q(c.d);
        for (int i = 0; i < c.d; ++i) {
          q[i] = start[i] + t * v[i];
          if (q[i] < 0 || q[i] >= c.n) {
            ok = false;
            break;
          }
        }
        if (ok) line.push_back(encode(c, q));
      }
      if (!ok) continue;
      std::sort(line.begin(), line.end());
      found.insert(std::move(line));
    }
  }
  return {found.begin(), found.end()};
}

// ---- automorphism backtracking ----

struct AutoSearch {
  int N = 0;
  int n = 0;
  std::vector<std::vector<int>> lines;
  std::vector<std::uint64_t> line_mask;
  std::vector<std::vector<int>> point_lines;
  std::vector<std::vector<int>> pair_line;  // [p][q] -> line id or -1
  std::vector<int> deg;
  std::vector<int> order;

  std::vector<int> img;
  std::uint64_t used = 0;
  std::vector<int> cnt;  // assigned points per line
  std::vector<int> tgt;  // committed image line, -1 while fewer than 2 images
  std::vector<int> rep;  // first image point seen on the line
  std::vector<std::vector<PointIndex>> results;

  explicit AutoSearch(const CubeParams& c,
                      std::vector<std::vector<PointIndex>> oracle_lines)
      : N(static_cast<int>(c.point_count())), n(c.n) {
    lines.reserve(oracle_lines.size());
    for (const auto& l : oracle_lines)
      lines.emplace_back(l.begin(), l.end());
    const int L = static_cast<int>(lines.size());
    line_mask.assign(L, 0);
    point_lines.assign(N, {});
    pair_line.assign(N, std::vector<int>(N, -1));
    for (int id = 0; id < L; ++id) {
      for (int p : lines[id]) {
        line_mask[id] |= std::uint64_t{1} << p;
        point_lines[p].push_back(id);
      }
      for (int a : lines[id])
        for (int b : lines[id])
          if (a != b) pair_line[a][b] = id;  // two points share at most one line
    }
    deg.assign(N, 0);
    for (int p = 0; p < N; ++p) deg[p] = static_cast<int>(point_lines[p].size());
    order.resize(N);
    for (int p = 0; p < N; ++p) order[p] = p;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (deg[a] != deg[b]) return deg[a] > deg[b];
      return a < b;
    });
    img.assign(N, -1);
    cnt.assign(L, 0);
    tgt.assign(L, -1);
    rep.assign(L, -1);
  }

  // Push p -> q through every line incident to p; records touched lines so
  // the caller can roll back.  False on a pruned contradiction.
  bool assign(int p, int q, std::vector<int>& touched) {
    for (int id : point_lines[p]) {
      if (cnt[id] == 0) {
        rep[id] = q;
      } else if (cnt[id] == 1) {
        int t = pair_line[rep[id]][q];
        if (t < 0) return false;
        tgt[id] = t;
      } else {
        if (!((line_mask[tgt[id]] >> q) & 1)) return false;
      }
      ++cnt[id];
      touched.push_back(id);
    }
    return true;
  }

  void rollback(const std::vector<int>& touched) {
    for (int id : touched) {
      --cnt[id];
      if (cnt[id] < 2) tgt[id] = -1;
    }
  }

  void search(int k) {
    if (k == N) {
      results.emplace_back(img.begin(), img.end());
      return;
    }
    const int p = order[k];
    std::vector<int> touched;
    for (int q = 0; q < N; ++q) {
      if ((used >> q) & 1) continue;
      if (deg[q] != deg[p]) continue;
      touched.clear();
      if (assign(p, q, touched)) {
        img[p] = q;
        used |= std::uint64_t{1} << q;
        search(k + 1);
        used &= ~(std::uint64_t{1} << q);
        img[p] = -1;
      }
      rollback(touched);
    }
  }
};

}  // namespace

std::vector<std::vector<PointIndex>> brute_force_lines(const CubeParams& c) {
  if (c.point_count() <= 32) return lines_by_subsets(c);
  if (c.point_count() <= 4096) return lines_by_rays(c);
  throw TooLargeError("brute_force_lines: needs n^d <= 4096");
}

std::vector<std::vector<PointIndex>> brute_force_automorphisms(
    const CubeParams& c) {
  if (c.point_count() > 64)
    throw TooLargeError("brute_force_automorphisms: needs n^d <= 64");
  AutoSearch s(c, brute_force_lines(c));
  s.search(0);
  std::sort(s.results.begin(), s.results.end());
  return std::move(s.results);
}

std::optional<std::vector<int>> brute_force_graph_iso(const Graph& g1,
                                                      const Graph& g2) {
  if (g1.n > 8 || g2.n > 8)
    throw TooLargeError("brute_force_graph_iso: needs at most 8 vertices");
  if (g1.n != g2.n) return std::nullopt;
  const int n = g1.n;
  std::vector<std::vector<bool>> a1(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> a2 = a1;
  for (const auto& [u, v] : g1.edges) a1[u][v] = a1[v][u] = true;
  for (const auto& [u, v] : g2.edges) a2[u][v] = a2[v][u] = true;
  std::vector<int> f(n);
  for (int i = 0; i < n; ++i) f[i] = i;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a1[u][v] != a2[f[u]][f[v]]) ok = false;
    if (ok) return f;
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

}  // namespace cubesym::oracle

#include "cubesym/coloring.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <thread>

namespace cubesym {

namespace {

void check_coloring(const Coloring& s, const char* what) {
  if (s.k < 1)
    throw std::invalid_argument(std::string(what) + ": needs k >= 1");
  if (static_cast<PointIndex>(s.colors.size()) != s.cube.point_count())
    throw std::invalid_argument(std::string(what) +
                                ": color array size must be n^d");
  for (int v : s.colors)
    if (v < 0 || v >= s.k)
      throw std::invalid_argument(std::string(what) +
                                  ": color outside [0, k)");
}

// Flattened coordinate table so the scan below runs on plain arrays.
struct FlatCube {
  int n, d;
  PointIndex N;
  std::vector<int> coords;       // N x d, row-major
  std::vector<PointIndex> pows;  // n^i

  explicit FlatCube(const CubeParams& c)
      : n(c.n), d(c.d), N(c.point_count()), coords(N * d), pows(d) {
    PointIndex pw = 1;
    for (int i = 0; i < d; ++i) {
      pows[i] = pw;
      pw *= n;
    }
    for (PointIndex p = 0; p < N; ++p) {
      PointIndex r = p;
      for (int i = 0; i < d; ++i) {
        coords[p * d + i] = static_cast<int>(r % n);
        r /= n;
      }
    }
  }
};

struct ChunkResult {
  std::vector<int> best;       // minimal transported coloring in the chunk
  std::uint64_t witness = 0;   // first enumeration index achieving it
};

// Scans enumeration indices [from, to), keeping the lexicographically
// smallest transported coloring.  The transported coloring of element g is
// q -> s[apply(inverse(g), q)], evaluated lazily so a candidate that is
// already larger on a prefix is abandoned without computing the rest.
void scan_chunk(const FlatCube& fc, const std::vector<int>& s,
                const GroupEnumeration& g, std::uint64_t from, std::uint64_t to,
                ChunkResult& out) {
  const int d = fc.d;
  const int n = fc.n;
  const PointIndex N = fc.N;
  std::vector<int> iperm(d), iflips(d), ivalue(n);
  auto load_inverse = [&](const Automorphism& a) {
    for (int i = 0; i < d; ++i) iperm[a.coord.perm[i]] = i;
    for (int i = 0; i < d; ++i) iflips[i] = a.coord.flips[iperm[i]];
    for (int v = 0; v < n; ++v) ivalue[a.value.perm[v]] = v;
  };
  auto cand_at = [&](PointIndex q) {
    const int* xc = &fc.coords[q * d];
    PointIndex p = 0;
    for (int i = 0; i < d; ++i) {
      int v = xc[iperm[i]];
      if (iflips[i]) v = n - 1 - v;
      p += ivalue[v] * fc.pows[i];
    }
    return s[p];
  };

  auto it = g.iter_at(from);
  load_inverse(*it);
  out.best.resize(N);
  for (PointIndex q = 0; q < N; ++q) out.best[q] = cand_at(q);
  out.witness = from;

  for (std::uint64_t idx = from + 1; idx < to; ++idx) {
    ++it;
    load_inverse(*it);
    PointIndex q = 0;
    bool better = false;
    for (; q < N; ++q) {
      const int cv = cand_at(q);
      if (cv > out.best[q]) break;  // prefix already larger: prune
      if (cv < out.best[q]) {
        out.best[q] = cv;
        better = true;
        ++q;
        break;
      }
    }
    if (better) {
      for (; q < N; ++q) out.best[q] = cand_at(q);
      out.witness = idx;
    }
    // exact tie keeps the earlier witness
  }
}

}  // namespace

Coloring make_coloring(const CubeParams& c, int k, std::vector<int> colors) {
  Coloring s{c, k, std::move(colors)};
  check_coloring(s, "make_coloring");
  return s;
}

Coloring apply_to_coloring(const Automorphism& a, const Coloring& s) {
  check_coloring(s, "apply_to_coloring");
  if (a.cube != s.cube)
    throw std::invalid_argument(
        "apply_to_coloring: automorphism and coloring live on different "
        "cubes");
  Coloring r{s.cube, s.k, std::vector<int>(s.colors.size())};
  for (PointIndex p = 0; p < static_cast<PointIndex>(s.colors.size()); ++p)
    r.colors[apply_point(a, p)] = s.colors[p];
  return r;
}

CanonicalForm canonical_form(const Coloring& s, std::uint64_t cap,
                             int threads) {
  check_coloring(s, "canonical_form");
  GroupEnumeration g = enumerate_group(s.cube, cap);
  const FlatCube fc(s.cube);
  const std::uint64_t size = g.size();
  const int t = static_cast<int>(std::min<std::uint64_t>(
      std::max(threads, 1), size));

  std::vector<ChunkResult> results(t);
  if (t == 1) {
    scan_chunk(fc, s.colors, g, 0, size, results[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(t);
    const std::uint64_t base = size / t;
    const std::uint64_t rem = size % t;
    std::uint64_t from = 0;
    for (int i = 0; i < t; ++i) {
      const std::uint64_t len = base + (static_cast<std::uint64_t>(i) < rem);
      pool.emplace_back(scan_chunk, std::cref(fc), std::cref(s.colors),
                        std::cref(g), from, from + len, std::ref(results[i]));
      from += len;
    }
    for (std::thread& th : pool) th.join();
  }

  int bi = 0;
  for (int i = 1; i < t; ++i) {
    if (results[i].best < results[bi].best ||
        (results[i].best == results[bi].best &&
         results[i].witness < results[bi].witness))
      bi = i;
  }
  return CanonicalForm{Coloring{s.cube, s.k, std::move(results[bi].best)},
                       g.element_at(results[bi].witness)};
}

std::optional<Automorphism> are_isomorphic(const Coloring& s1,
                                           const Coloring& s2,
                                           std::uint64_t cap, int threads) {
  check_coloring(s1, "are_isomorphic");
  check_coloring(s2, "are_isomorphic");
  if (s1.cube != s2.cube || s1.k != s2.k)
    throw std::invalid_argument(
        "are_isomorphic: colorings must share a cube and a palette");
  // transported colorings keep the color multiset, so histograms must match
  std::vector<std::int64_t> h1(s1.k, 0), h2(s1.k, 0);
  for (int v : s1.colors) ++h1[v];
  for (int v : s2.colors) ++h2[v];
  if (h1 != h2) return std::nullopt;

  CanonicalForm c1 = canonical_form(s1, cap, threads);
  CanonicalForm c2 = canonical_form(s2, cap, threads);
  if (c1.coloring.colors != c2.coloring.colors) return std::nullopt;
  // w1 carries s1 and w2 carries s2 to the same coloring, so w1 then the
  // reverse of w2 carries s1 to s2
  return compose(c1.witness, inverse(c2.witness));
}

std::pair<std::uint64_t, std::uint64_t> orbit_and_stabilizer_size(
    const Coloring& s, std::uint64_t cap) {
  check_coloring(s, "orbit_and_stabilizer_size");
  GroupEnumeration g = enumerate_group(s.cube, cap);
  std::set<std::vector<int>> orbit;
  std::uint64_t stabilizer = 0;
  for (const Automorphism& a : g) {
    Coloring t = apply_to_coloring(a, s);
    if (t.colors == s.colors) ++stabilizer;
    orbit.insert(std::move(t.colors));
  }
  return {orbit.size(), stabilizer};
}

std::string coloring_to_json(const Coloring& s) {
  check_coloring(s, "coloring_to_json");
  nlohmann::json j;
  j["n"] = s.cube.n;
  j["d"] = s.cube.d;
  j["k"] = s.k;
  j["colors"] = s.colors;
  return j.dump();
}

Coloring coloring_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("coloring JSON: ") + e.what());
  }
  if (!j.is_object())
    throw ParseError("coloring JSON: top level must be an object");
  for (const char* key : {"n", "d", "k", "colors"})
    if (!j.contains(key))
      throw ParseError(std::string("coloring JSON: missing key '") + key +
                       "'");
  for (const char* key : {"n", "d", "k"})
    if (!j[key].is_number_integer())
      throw ParseError(std::string("coloring JSON: '") + key +
                       "' must be an integer");
  if (!j["colors"].is_array())
    throw ParseError("coloring JSON: 'colors' must be an array");
  CubeParams c(j["n"].get<int>(), j["d"].get<int>());
  std::vector<int> colors;
  colors.reserve(j["colors"].size());
  for (const nlohmann::json& el : j["colors"]) {
    if (!el.is_number_integer())
      throw ParseError("coloring JSON: 'colors' entries must be integers");
    colors.push_back(el.get<int>());
  }
  return make_coloring(c, j["k"].get<int>(), std::move(colors));
}

Coloring coloring_from_board_string(const CubeParams& c,
                                    const std::string& board) {
  if (static_cast<PointIndex>(board.size()) != c.point_count())
    throw ParseError("board string: length " + std::to_string(board.size()) +
                     " does not match the cube's " +
                     std::to_string(c.point_count()) + " points");
  std::vector<int> colors(board.size());
  for (std::size_t i = 0; i < board.size(); ++i) {
    switch (board[i]) {
      case '.': colors[i] = 0; break;
      case 'x': colors[i] = 1; break;
      case 'o': colors[i] = 2; break;
      default:
        throw ParseError(std::string("board string: invalid character '") +
                         board[i] + "' (expected '.', 'x', or 'o')");
    }
  }
  return make_coloring(c, 3, std::move(colors));
}

std::string board_string_from_coloring(const Coloring& s) {
  check_coloring(s, "board_string_from_coloring");
  if (s.k > 3)
    throw std::invalid_argument(
        "board string: only colorings with at most 3 colors have a board "
        "form");
  static const char symbols[3] = {'.', 'x', 'o'};
  std::string out(s.colors.size(), '.');
  for (std::size_t i = 0; i < s.colors.size(); ++i)
    out[i] = symbols[s.colors[i]];
  return out;
}

}  // namespace cubesym

#include "cubesym/autgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cubesym {

namespace {

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b)
    throw TooLargeError("group order overflows 64 bits");
  return a * b;
}

bool is_perm_vector(const std::vector<int>& v) {
  std::vector<bool> seen(v.size(), false);
  for (int x : v) {
    if (x < 0 || x >= static_cast<int>(v.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

int perm_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

void check_value_perm(const CubeParams& c, const std::vector<int>& pi,
                      const char* what) {
  if (static_cast<int>(pi.size()) != c.n)
    throw std::invalid_argument(std::string(what) +
                                ": value permutation size must be n");
  if (!is_perm_vector(pi))
    throw NotABijectionError(std::string(what) +
                             ": value part is not a permutation");
  for (int v = 0; v < c.n; ++v)
    if (pi[c.n - 1 - v] != c.n - 1 - pi[v])
      throw SymmetryViolationError(
          std::string(what) + ": value permutation must satisfy pi[n-1-v] == n-1-pi[v]");
}

// The triples (perm, flips, value) and (perm, ~flips, value o mirror) act
// identically; the canonical representative has flips[0] == 0.
void canonicalize(const CubeParams& c, CoordSignedPerm& coord,
                  SymValuePerm& value) {
  if (coord.flips[0] == 0) return;
  for (int& f : coord.flips) f ^= 1;
  std::vector<int> nv(c.n);
  for (int v = 0; v < c.n; ++v) nv[v] = value.perm[c.n - 1 - v];
  value.perm = std::move(nv);
}

std::vector<int> identity_vector(int m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Value permutation determined by a permutation of the k = floor(n/2) value
// pairs {v, n-1-v} plus one orientation bit per pair (bit of pair 0 is the
// most significant).
std::vector<int> build_sym_perm(int n, const std::vector<int>& rho,
                                std::uint64_t bits) {
  const int k = n / 2;
  std::vector<int> pi(n);
  if (n % 2 == 1) pi[k] = k;
  for (int p = 0; p < k; ++p) {
    int low = rho[p];
    int v = ((bits >> (k - 1 - p)) & 1) ? n - 1 - low : low;
    pi[p] = v;
    pi[n - 1 - p] = n - 1 - v;
  }
  return pi;
}

std::vector<int> unrank_perm(std::uint64_t rank, int m) {
  std::vector<std::uint64_t> fact(m + 1, 1);
  for (int i = 1; i <= m; ++i) fact[i] = fact[i - 1] * i;
  std::vector<int> avail = identity_vector(m);
  std::vector<int> out;
  out.reserve(m);
  for (int i = m; i >= 1; --i) {
    std::uint64_t f = fact[i - 1];
    int idx = static_cast<int>(rank / f);
    rank %= f;
    out.push_back(avail[idx]);
    avail.erase(avail.begin() + idx);
  }
  return out;
}

std::string format_int_list(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

std::vector<int> parse_int_list(const std::string& text, std::size_t& pos,
                                const std::string& label) {
  std::size_t at = text.find(label + "=[", pos);
  if (at == std::string::npos)
    throw ParseError("automorphism text: missing '" + label + "=[...]'");
  std::size_t cur = at + label.size() + 2;
  std::size_t close = text.find(']', cur);
  if (close == std::string::npos)
    throw ParseError("automorphism text: unterminated '" + label + "' list");
  std::vector<int> out;
  std::string body = text.substr(cur, close - cur);
  std::istringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ParseError("automorphism text: bad integer '" + tok + "' in '" +
                       label + "'");
    }
  }
  pos = close + 1;
  return out;
}

}  // namespace

Automorphism make_automorphism(const CubeParams& c, CoordSignedPerm coord,
                               SymValuePerm value) {
  if (static_cast<int>(coord.perm.size()) != c.d ||
      static_cast<int>(coord.flips.size()) != c.d)
    throw std::invalid_argument(
        "make_automorphism: coordinate part size must be d");
  if (!is_perm_vector(coord.perm))
    throw NotABijectionError(
        "make_automorphism: position part is not a permutation");
  for (int f : coord.flips)
    if (f != 0 && f != 1)
      throw std::invalid_argument("make_automorphism: flips must be 0/1");
  check_value_perm(c, value.perm, "make_automorphism");
  canonicalize(c, coord, value);
  return Automorphism{c, std::move(coord), std::move(value)};
}

Automorphism identity(const CubeParams& c) {
  return Automorphism{
      c, CoordSignedPerm{identity_vector(c.d), std::vector<int>(c.d, 0)},
      SymValuePerm{identity_vector(c.n)}};
}

Automorphism rotation_generator(const CubeParams& c, int i, int j) {
  if (i < 0 || i >= c.d || j < 0 || j >= c.d)
    throw std::invalid_argument("rotation_generator: position outside [0, d)");
  if (i == j)
    throw std::invalid_argument("rotation_generator: positions must differ");
  CoordSignedPerm coord{identity_vector(c.d), std::vector<int>(c.d, 0)};
  coord.perm[i] = j;
  coord.perm[j] = i;
  coord.flips[i] = 1;
  return make_automorphism(c, std::move(coord),
                           SymValuePerm{identity_vector(c.n)});
}

Automorphism value_perm(const CubeParams& c, std::vector<int> pi) {
  check_value_perm(c, pi, "value_perm");
  return Automorphism{
      c, CoordSignedPerm{identity_vector(c.d), std::vector<int>(c.d, 0)},
      SymValuePerm{std::move(pi)}};
}

Automorphism axial(const CubeParams& c) {
  if (c.d < 2) throw std::invalid_argument("axial: needs d >= 2");
  CoordSignedPerm coord{identity_vector(c.d), std::vector<int>(c.d, 0)};
  std::swap(coord.perm[c.d - 2], coord.perm[c.d - 1]);
  return Automorphism{c, std::move(coord),
                      SymValuePerm{identity_vector(c.n)}};
}

Automorphism mirror_value(const CubeParams& c) {
  std::vector<int> pi(c.n);
  for (int v = 0; v < c.n; ++v) pi[v] = c.n - 1 - v;
  return value_perm(c, std::move(pi));
}

Coords apply_coords(const Automorphism& a, const Coords& x) {
  const CubeParams& c = a.cube;
  if (static_cast<int>(x.size()) != c.d)
    throw std::invalid_argument("apply_coords: point size must be d");
  Coords y(c.d);
  for (int i = 0; i < c.d; ++i) {
    int v = x[a.coord.perm[i]];
    if (v < 0 || v >= c.n)
      throw std::invalid_argument("apply_coords: coordinate outside cube");
    if (a.coord.flips[i]) v = c.n - 1 - v;
    y[i] = a.value.perm[v];
  }
  return y;
}

PointIndex apply_point(const Automorphism& a, PointIndex p) {
  return point_index(a.cube, apply_coords(a, point_coords(a.cube, p)));
}

std::vector<PointIndex> point_map(const Automorphism& a) {
  const PointIndex N = a.cube.point_count();
  std::vector<PointIndex> m(N);
  for (PointIndex p = 0; p < N; ++p) m[p] = apply_point(a, p);
  return m;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  if (a.cube != b.cube)
    throw std::invalid_argument("compose: elements act on different cubes");
  const CubeParams& c = a.cube;
  CoordSignedPerm coord;
  coord.perm.resize(c.d);
  coord.flips.resize(c.d);
  for (int i = 0; i < c.d; ++i) {
    coord.perm[i] = a.coord.perm[b.coord.perm[i]];
    coord.flips[i] = a.coord.flips[b.coord.perm[i]] ^ b.coord.flips[i];
  }
  SymValuePerm value;
  value.perm.resize(c.n);
  for (int v = 0; v < c.n; ++v)
    value.perm[v] = b.value.perm[a.value.perm[v]];
  canonicalize(c, coord, value);
  return Automorphism{c, std::move(coord), std::move(value)};
}

Automorphism inverse(const Automorphism& a) {
  const CubeParams& c = a.cube;
  CoordSignedPerm coord;
  coord.perm.resize(c.d);
  coord.flips.resize(c.d);
  for (int i = 0; i < c.d; ++i) coord.perm[a.coord.perm[i]] = i;
  for (int i = 0; i < c.d; ++i) coord.flips[i] = a.coord.flips[coord.perm[i]];
  SymValuePerm value;
  value.perm.resize(c.n);
  for (int v = 0; v < c.n; ++v) value.perm[a.value.perm[v]] = v;
  canonicalize(c, coord, value);
  return Automorphism{c, std::move(coord), std::move(value)};
}

std::uint64_t group_order(const CubeParams& c) {
  if (c.d < 2) throw std::invalid_argument("group_order: needs d >= 2");
  if (c.n == 2) {
    // every point bijection preserves lines: the full symmetric group
    std::uint64_t size = std::uint64_t{1} << c.d;
    std::uint64_t order = 1;
    for (std::uint64_t i = 2; i <= size; ++i) order = mul_checked(order, i);
    return order;
  }
  const int k = c.n / 2;
  std::uint64_t order = 1;
  for (int i = 0; i < c.d - 1 + k; ++i) order = mul_checked(order, 2);
  for (int i = 2; i <= c.d; ++i) order = mul_checked(order, i);
  for (int i = 2; i <= k; ++i) order = mul_checked(order, i);
  return order;
}

// ---- enumeration ----

GroupEnumeration::GroupEnumeration(const CubeParams& c, std::uint64_t cap)
    : cube_(c), size_(0) {
  if (c.n == 2)
    throw UnsupportedError(
        "enumerate_group: n = 2 groups are full symmetric groups and are not "
        "triple-shaped; only group_order supports them");
  size_ = group_order(c);
  if (size_ > cap)
    throw CapExceededError("enumerate_group: order " + std::to_string(size_) +
                           " exceeds cap " + std::to_string(cap));
}

GroupEnumeration::iterator::iterator(const CubeParams& c, std::uint64_t index,
                                     std::uint64_t size)
    : index_(index), size_(size), k_(c.n / 2), cur_(identity(c)) {
  rho_ = identity_vector(k_);
  if (index_ < size_) load(index_);
}

void GroupEnumeration::iterator::load(std::uint64_t index) {
  const CubeParams& c = cur_.cube;
  std::uint64_t pair_count = 1;
  for (int i = 2; i <= k_; ++i) pair_count *= i;
  const std::uint64_t v_total = pair_count << k_;
  const std::uint64_t b_total = std::uint64_t{1} << (c.d - 1);
  std::uint64_t v_idx = index % v_total;
  index /= v_total;
  fbits_ = index % b_total;
  std::uint64_t p_rank = index / b_total;
  vbits_ = v_idx & ((std::uint64_t{1} << k_) - 1);
  rho_ = unrank_perm(v_idx >> k_, k_);
  cur_.coord.perm = unrank_perm(p_rank, c.d);
  rebuild_flips();
  rebuild_value();
}

void GroupEnumeration::iterator::rebuild_flips() {
  const int d = cur_.cube.d;
  cur_.coord.flips[0] = 0;
  for (int i = 1; i < d; ++i)
    cur_.coord.flips[i] = static_cast<int>((fbits_ >> (d - 1 - i)) & 1);
}

void GroupEnumeration::iterator::rebuild_value() {
  cur_.value.perm = build_sym_perm(cur_.cube.n, rho_, vbits_);
}

GroupEnumeration::iterator& GroupEnumeration::iterator::operator++() {
  ++index_;
  if (index_ >= size_) return *this;
  const CubeParams& c = cur_.cube;
  if (++vbits_ < (std::uint64_t{1} << k_)) {
    rebuild_value();
    return *this;
  }
  vbits_ = 0;
  if (std::next_permutation(rho_.begin(), rho_.end())) {
    rebuild_value();
    return *this;
  }
  // rho_ wrapped to the identity
  rebuild_value();
  if (++fbits_ < (std::uint64_t{1} << (c.d - 1))) {
    rebuild_flips();
    return *this;
  }
  fbits_ = 0;
  rebuild_flips();
  std::next_permutation(cur_.coord.perm.begin(), cur_.coord.perm.end());
  return *this;
}

Automorphism GroupEnumeration::element_at(std::uint64_t index) const {
  if (index >= size_)
    throw std::invalid_argument("element_at: index outside the group");
  return *iterator(cube_, index, size_);
}

GroupEnumeration enumerate_group(const CubeParams& c, std::uint64_t cap) {
  return GroupEnumeration(c, cap);
}

std::vector<Automorphism> enumerate_rotations(const CubeParams& c) {
  if (c.d < 2)
    throw std::invalid_argument("enumerate_rotations: needs d >= 2");
  std::vector<Automorphism> out;
  std::vector<int> perm = identity_vector(c.d);
  SymValuePerm id_value{identity_vector(c.n)};
  do {
    const int sign = perm_sign(perm);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << c.d); ++bits) {
      int count = 0;
      std::vector<int> flips(c.d);
      for (int i = 0; i < c.d; ++i) {
        flips[i] = static_cast<int>((bits >> (c.d - 1 - i)) & 1);
        count += flips[i];
      }
      if ((count % 2 == 0 ? 1 : -1) != sign) continue;
      out.push_back(make_automorphism(c, CoordSignedPerm{perm, flips},
                                      id_value));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Automorphism> enumerate_value_perms(const CubeParams& c) {
  const int k = c.n / 2;
  std::vector<Automorphism> out;
  std::vector<int> rho = identity_vector(k);
  do {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits)
      out.push_back(value_perm(c, build_sym_perm(c.n, rho, bits)));
  } while (std::next_permutation(rho.begin(), rho.end()));
  return out;
}

// ---- recognition and factorization ----

bool is_automorphism(const CubeParams& c, const std::vector<PointIndex>& m) {
  const PointIndex N = c.point_count();
  if (static_cast<PointIndex>(m.size()) != N)
    throw std::invalid_argument("is_automorphism: map size must be n^d");
  std::vector<bool> seen(N, false);
  for (PointIndex q : m) {
    if (q < 0 || q >= N)
      throw std::invalid_argument("is_automorphism: image outside the cube");
    if (seen[q]) return false;
    seen[q] = true;
  }
  std::set<std::vector<PointIndex>> line_set;
  for (const Line& l : enumerate_lines(c)) line_set.insert(l.points);
  for (const auto& line : line_set) {
    std::vector<PointIndex> img;
    img.reserve(line.size());
    for (PointIndex p : line) img.push_back(m[p]);
    std::sort(img.begin(), img.end());
    if (!line_set.count(img)) return false;
  }
  return true;
}

Automorphism factor_automorphism(const CubeParams& c,
                                 const std::vector<PointIndex>& m) {
  if (c.n == 2)
    throw UnsupportedError(
        "factor_automorphism: n = 2 maps are arbitrary bijections and have "
        "no triple form");
  if (c.d < 2)
    throw UnsupportedError("factor_automorphism: needs d >= 2");
  const PointIndex N = c.point_count();
  if (static_cast<PointIndex>(m.size()) != N)
    throw std::invalid_argument("factor_automorphism: map size must be n^d");
  {
    std::vector<bool> seen(N, false);
    for (PointIndex q : m) {
      if (q < 0 || q >= N)
        throw std::invalid_argument(
            "factor_automorphism: image outside the cube");
      if (seen[q])
        throw NotABijectionError("factor_automorphism: map repeats an image");
      seen[q] = true;
    }
  }
  if (!is_automorphism(c, m))
    throw NotAnAutomorphismError(
        "factor_automorphism: the map does not preserve lines");

  std::vector<PointIndex> cur = m;
  Automorphism word = identity(c);
  bool word_trivial = true;
  auto push = [&](const Automorphism& f) {
    const std::vector<PointIndex> fm = point_map(f);
    for (PointIndex p = 0; p < N; ++p) cur[p] = fm[cur[p]];
    word = word_trivial ? f : compose(word, f);
    word_trivial = false;
  };

  // 1. The image of the zero corner lies on a main diagonal; align its value
  // pair with {0, n-1}.
  {
    const Coords q = point_coords(c, cur[0]);
    const int q0 = q[0];
    if (q0 == c.n - 1 - q0)
      throw NotAnAutomorphismError(
          "factor_automorphism: corner image sits on the central layer");
    for (int x : q)
      if (x != q0 && x != c.n - 1 - q0)
        throw NotAnAutomorphismError(
            "factor_automorphism: corner image is not on a main diagonal");
    if (q0 != 0 && q0 != c.n - 1) {
      std::vector<int> pi = identity_vector(c.n);
      pi[q0] = 0;
      pi[c.n - 1 - q0] = c.n - 1;
      pi[0] = q0;
      pi[c.n - 1] = c.n - 1 - q0;
      push(value_perm(c, pi));
    }
  }

  // 2. A rotation carries that corner to the zero corner (an extra position
  // swap keeps the flip parity consistent with a pure rotation).
  {
    const Coords c0 = point_coords(c, cur[0]);
    int boundary_high = 0;
    for (int x : c0) boundary_high += (x == c.n - 1);
    if (boundary_high > 0) {
      std::vector<int> perm0 = identity_vector(c.d);
      if (boundary_high % 2 == 1) std::swap(perm0[0], perm0[1]);
      std::vector<int> flips0(c.d);
      for (int i = 0; i < c.d; ++i)
        flips0[i] = (c0[perm0[i]] == c.n - 1) ? 1 : 0;
      push(make_automorphism(c, CoordSignedPerm{perm0, flips0},
                             SymValuePerm{identity_vector(c.n)}));
    }
  }
  if (cur[0] != 0)
    throw NotAnAutomorphismError(
        "factor_automorphism: could not pin the zero corner");

  // 3. The neighbors of the pinned corner are permuted among themselves;
  // realign them with a position permutation.
  {
    std::vector<int> rho(c.d, -1);
    std::vector<bool> seen(c.d, false);
    for (int j = 0; j < c.d; ++j) {
      PointIndex ej = 1;
      for (int t = 0; t < j; ++t) ej *= c.n;
      ej *= c.n - 1;
      const Coords ic = point_coords(c, cur[ej]);
      int axis = -1;
      for (int i = 0; i < c.d; ++i) {
        if (ic[i] == c.n - 1) {
          if (axis != -1)
            throw NotAnAutomorphismError(
                "factor_automorphism: neighbor image is not a neighbor");
          axis = i;
        } else if (ic[i] != 0) {
          throw NotAnAutomorphismError(
              "factor_automorphism: neighbor image is not a neighbor");
        }
      }
      if (axis < 0 || seen[axis])
        throw NotAnAutomorphismError(
            "factor_automorphism: neighbor images are not distinct");
      seen[axis] = true;
      rho[j] = axis;
    }
    if (rho != identity_vector(c.d))
      push(make_automorphism(c,
                             CoordSignedPerm{rho, std::vector<int>(c.d, 0)},
                             SymValuePerm{identity_vector(c.n)}));
  }
  for (PointIndex corner : corner_indices(c))
    if (cur[corner] != corner)
      throw NotAnAutomorphismError(
          "factor_automorphism: corners did not pin after realignment");

  // 4. Fix the edge {[i,0,...,0]} pointwise with pair-swap value
  // permutations; points [i,0,...,0] have index i.
  for (int i = 1; i <= (c.n - 1) / 2; ++i) {
    const Coords ic = point_coords(c, cur[i]);
    for (int t = 1; t < c.d; ++t)
      if (ic[t] != 0)
        throw NotAnAutomorphismError(
            "factor_automorphism: edge image left its line");
    const int j = ic[0];
    if (j < i || j > c.n - 1 - i)
      throw NotAnAutomorphismError(
          "factor_automorphism: edge image collides with pinned points");
    if (j != i) {
      std::vector<int> pi = identity_vector(c.n);
      pi[i] = j;
      pi[j] = i;
      pi[c.n - 1 - i] = c.n - 1 - j;
      pi[c.n - 1 - j] = c.n - 1 - i;
      push(value_perm(c, pi));
    }
  }

  // 5. The residue fixes all corners and a full edge, so it must be the
  // identity; the inverse of the accumulated word is the factorization.
  for (PointIndex p = 0; p < N; ++p)
    if (cur[p] != p)
      throw NotAnAutomorphismError(
          "factor_automorphism: residue is not the identity");
  Automorphism result = word_trivial ? identity(c) : inverse(word);
  if (point_map(result) != m)
    throw NotAnAutomorphismError(
        "factor_automorphism: factorization self-check failed");
  return result;
}

// ---- serialization ----

std::string format_automorphism(const Automorphism& a) {
  std::ostringstream os;
  os << "perm=" << format_int_list(a.coord.perm)
     << " flips=" << format_int_list(a.coord.flips)
     << " value=" << format_int_list(a.value.perm);
  return os.str();
}

Automorphism parse_automorphism(const CubeParams& c, const std::string& text) {
  std::size_t pos = 0;
  std::vector<int> perm = parse_int_list(text, pos, "perm");
  std::vector<int> flips = parse_int_list(text, pos, "flips");
  std::vector<int> value = parse_int_list(text, pos, "value");
  return make_automorphism(c, CoordSignedPerm{std::move(perm), std::move(flips)},
                           SymValuePerm{std::move(value)});
}

}  // namespace cubesym

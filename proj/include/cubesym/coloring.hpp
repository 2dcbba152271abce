#pragma once
// Colorings of the cube n^d, their canonical forms under the automorphism
// group, and the color-preserving isomorphism decision.
//
// Transport convention: apply_to_coloring(a, s) is the coloring r with
// r[apply(a, p)] = s[p] for every point p, so r[q] = s[apply(inverse(a), q)].

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubesym/autgroup.hpp"

namespace cubesym {

struct Coloring {
  CubeParams cube;
  int k;                    // number of colors
  std::vector<int> colors;  // size n^d, entries in [0, k), point-index order

  bool operator==(const Coloring& o) const {
    return cube == o.cube && k == o.k && colors == o.colors;
  }
  bool operator!=(const Coloring& o) const { return !(*this == o); }
};

// Validates k >= 1, array length n^d, entries in [0, k).
Coloring make_coloring(const CubeParams& c, int k, std::vector<int> colors);

struct CanonicalForm {
  Coloring coloring;     // the lexicographic minimum over the orbit
  Automorphism witness;  // first enumeration element carrying the input there
};

Coloring apply_to_coloring(const Automorphism& a, const Coloring& s);

// Lexicographically minimal coloring in {apply_to_coloring(g, s)} over the
// whole group, compared in point-index order.  The witness is deterministic:
// the first element in enumeration order achieving the minimum, regardless
// of thread count.  Prefix pruning never changes the result.  Throws
// CapExceededError when the group order exceeds cap, UnsupportedError for
// n = 2 cubes.
CanonicalForm canonical_form(const Coloring& s,
                             std::uint64_t cap = kDefaultGroupCap,
                             int threads = 1);

// Some g with apply_to_coloring(g, s1) == s2, or nullopt if none exists.
// Decided via canonical forms; a color-histogram mismatch short-circuits.
std::optional<Automorphism> are_isomorphic(const Coloring& s1,
                                           const Coloring& s2,
                                           std::uint64_t cap = kDefaultGroupCap,
                                           int threads = 1);

// (orbit size, stabilizer size); their product is always the group order.
std::pair<std::uint64_t, std::uint64_t> orbit_and_stabilizer_size(
    const Coloring& s, std::uint64_t cap = kDefaultGroupCap);

// JSON schema: {"colors": [int x n^d], "d": int, "k": int, "n": int}
// (keys serialized alphabetically, so output is byte-stable).
std::string coloring_to_json(const Coloring& s);
Coloring coloring_from_json(const std::string& text);

// Board text over {'.', 'x', 'o'} -> colors {0, 1, 2} in point-index order,
// with k = 3.
Coloring coloring_from_board_string(const CubeParams& c,
                                    const std::string& board);
std::string board_string_from_coloring(const Coloring& s);

}  // namespace cubesym

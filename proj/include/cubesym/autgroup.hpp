#pragma once
// The automorphism group of the line structure of n^d.
//
// Every automorphism is represented by a canonical triple
//   (perm, flips, value):
//     apply(a, x)[i] = value( flip( x[perm[i]], flips[i] ) )
// where flip(v, 0) = v and flip(v, 1) = n-1-v, perm permutes coordinate
// positions, and value is a permutation of {0,...,n-1} with the palindromic
// property value[n-1-v] = n-1 - value[v].  The triple (perm, flips, value)
// and (perm, complemented flips, value o mirror) act identically, so the
// canonical representative fixes flips[0] = 0.
//
// Composition convention: compose(a, b) applies a first, then b.

#include <cstdint>
#include <string>
#include <vector>

#include "cubesym/cube.hpp"

namespace cubesym {

struct CoordSignedPerm {
  std::vector<int> perm;   // size d, bijection of positions
  std::vector<int> flips;  // size d, entries 0/1

  bool operator==(const CoordSignedPerm& o) const {
    return perm == o.perm && flips == o.flips;
  }
};

struct SymValuePerm {
  std::vector<int> perm;  // size n, bijection with perm[n-1-v] == n-1-perm[v]

  bool operator==(const SymValuePerm& o) const { return perm == o.perm; }
};

struct Automorphism {
  CubeParams cube;
  CoordSignedPerm coord;  // canonical: coord.flips[0] == 0
  SymValuePerm value;

  bool operator==(const Automorphism& o) const {
    return cube == o.cube && coord == o.coord && value == o.value;
  }
  bool operator!=(const Automorphism& o) const { return !(*this == o); }
};

// Validates and canonicalizes (complements flips and mirrors the value part
// when flips[0] == 1).  Throws std::invalid_argument for malformed parts,
// SymmetryViolationError if value breaks the palindromic property.
Automorphism make_automorphism(const CubeParams& c, CoordSignedPerm coord,
                               SymValuePerm value);

// ---- generators ----
Automorphism identity(const CubeParams& c);

// The plane rotation on positions i, j: position i receives the flipped old
// coordinate j, position j receives the old coordinate i.
Automorphism rotation_generator(const CubeParams& c, int i, int j);

// Pure value permutation (identity coordinate part).
Automorphism value_perm(const CubeParams& c, std::vector<int> pi);

// Swap of the last two coordinate positions; requires d >= 2.
Automorphism axial(const CubeParams& c);

// The mirror value map v -> n-1-v.
Automorphism mirror_value(const CubeParams& c);

// ---- action and group operations ----
Coords apply_coords(const Automorphism& a, const Coords& x);
PointIndex apply_point(const Automorphism& a, PointIndex p);
std::vector<PointIndex> point_map(const Automorphism& a);

Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism inverse(const Automorphism& a);

// |group|: 2^(d-1+k) d! k! with k = floor(n/2) for n >= 3; (2^d)! for n = 2.
// Requires d >= 2; TooLargeError if the order overflows 64 bits.
std::uint64_t group_order(const CubeParams& c);

inline constexpr std::uint64_t kDefaultGroupCap = 100'000'000;

// Deterministic enumeration of the whole group, every canonical triple
// exactly once, ordered by (perm lexicographic; flips as a binary number,
// position 1 most significant; value part by pair permutation lexicographic,
// then orientation bits).  Index arithmetic makes partitioned parallel
// iteration possible: element_at(i) is the same element every iterator walk
// visits i-th.  Refuses n = 2 (UnsupportedError) and orders above the cap
// (CapExceededError).
class GroupEnumeration {
 public:
  class iterator {
   public:
    const Automorphism& operator*() const { return cur_; }
    const Automorphism* operator->() const { return &cur_; }
    iterator& operator++();
    bool operator==(const iterator& o) const { return index_ == o.index_; }
    bool operator!=(const iterator& o) const { return index_ != o.index_; }
    std::uint64_t index() const { return index_; }

   private:
    friend class GroupEnumeration;
    iterator(const CubeParams& c, std::uint64_t index, std::uint64_t size);
    void load(std::uint64_t index);
    void rebuild_value();
    void rebuild_flips();

    std::uint64_t index_ = 0;
    std::uint64_t size_ = 0;
    int k_ = 0;
    std::uint64_t fbits_ = 0;
    std::uint64_t vbits_ = 0;
    std::vector<int> rho_;  // pair permutation of the value part
    Automorphism cur_;
  };

  GroupEnumeration(const CubeParams& c, std::uint64_t cap = kDefaultGroupCap);
  std::uint64_t size() const { return size_; }
  Automorphism element_at(std::uint64_t index) const;
  iterator begin() const { return iterator(cube_, 0, size_); }
  iterator end() const { return iterator(cube_, size_, size_); }
  iterator iter_at(std::uint64_t index) const {
    return iterator(cube_, index, size_);
  }
  const CubeParams& cube() const { return cube_; }

 private:
  CubeParams cube_;
  std::uint64_t size_;
};

GroupEnumeration enumerate_group(const CubeParams& c,
                                 std::uint64_t cap = kDefaultGroupCap);

// The 2^(d-1) d! signed coordinate permutations whose position permutation
// parity matches the flip-count parity (the orientation-preserving cube
// rotations), as canonical triples.
std::vector<Automorphism> enumerate_rotations(const CubeParams& c);

// The 2^k k! pure value permutations, as canonical triples.
std::vector<Automorphism> enumerate_value_perms(const CubeParams& c);

// ---- recognition and factorization ----

// True iff m is a point bijection mapping every line onto a line.
// Throws std::invalid_argument if entries are outside the cube.
bool is_automorphism(const CubeParams& c, const std::vector<PointIndex>& m);

// Reconstructs the canonical triple whose point map is m, by the
// corner-chasing procedure: move the image of the zero corner back via a
// value permutation and a rotation, realign the corner's neighbors with a
// position permutation (all corners are then pinned), then fix the points of
// the edge {[i,0,...,0]} with pair-swap value permutations; the residue must
// be the identity, and the inverse of the accumulated word is the answer.
// Requires n >= 3, d >= 2 (UnsupportedError otherwise); NotABijectionError /
// NotAnAutomorphismError on bad maps.
Automorphism factor_automorphism(const CubeParams& c,
                                 const std::vector<PointIndex>& m);

// ---- serialization ----
// Text form: "perm=[1,0] flips=[0,1] value=[2,1,0]".
std::string format_automorphism(const Automorphism& a);
Automorphism parse_automorphism(const CubeParams& c, const std::string& text);

}  // namespace cubesym

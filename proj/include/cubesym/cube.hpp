#pragma once
// Points, lines and blocks of the combinatorial cube n^d.
//
// Points are d-tuples over {0,...,n-1}.  A line is a set of n points that can
// be ordered so that every coordinate is strictly increasing, strictly
// decreasing, or constant, with at least one non-constant coordinate.  Every
// line admits exactly two such orderings (each other's reverse), so a line is
// described up to reversal by a type: one symbol per coordinate, '+' / '-'
// for the two monotone directions or the constant value.  The normalized
// type is the one whose first non-constant symbol is '+'.
//
// Point indices are little-endian mixed radix: index = sum coords[i] * n^i,
// coordinate 0 is the fastest-running digit.

#include <cstdint>
#include <string>
#include <vector>

#include "cubesym/errors.hpp"

namespace cubesym {

using PointIndex = std::int64_t;
using Coords = std::vector<int>;

struct CubeParams {
  int n;  // points per line (side length), >= 2
  int d;  // dimension, >= 1

  CubeParams(int n_, int d_);
  PointIndex point_count() const { return points_; }
  bool operator==(const CubeParams& o) const { return n == o.n && d == o.d; }
  bool operator!=(const CubeParams& o) const { return !(*this == o); }

 private:
  PointIndex points_;
};

// Line type entries: kPlus/kMinus for the monotone symbols, values >= 0 for
// constants.  kPlus < kMinus < 0, so lexicographic order on entry vectors
// sorts '+' before '-' before constants.
inline constexpr int kPlus = -2;
inline constexpr int kMinus = -1;

struct LineType {
  std::vector<int> entries;

  bool operator==(const LineType& o) const { return entries == o.entries; }
  bool operator<(const LineType& o) const { return entries < o.entries; }
};

struct Line {
  LineType type;                   // normalized
  std::vector<PointIndex> points;  // ascending

  bool operator==(const Line& o) const {
    return type == o.type && points == o.points;
  }
};

enum class PointClass { corner, outer, inner };

// The positions whose coordinate value is j or n-1-j, labelled min(j, n-1-j).
// The blocks of a point partition its coordinate positions.
struct Block {
  int label = 0;
  std::vector<int> members;  // ascending

  bool operator==(const Block& o) const {
    return label == o.label && members == o.members;
  }
};

// ---- point indexing ----
PointIndex point_index(const CubeParams& c, const Coords& p);
Coords point_coords(const CubeParams& c, PointIndex index);

// ---- lines ----

// True iff seq lists the n points of a line in linear order: every
// coordinate strictly increasing, strictly decreasing, or constant, at least
// one non-constant.  Throws std::invalid_argument for points outside n^d.
bool is_linear_sequence(const CubeParams& c, const std::vector<Coords>& seq);

// Normalized type of the line formed by the given point set; NotALineError
// if the set is not a line.  Order of the input points does not matter.
LineType type_of_line(const CubeParams& c, std::vector<Coords> points);

// The unique line with the given type (the type's mirror image denotes the
// same line).  Throws std::invalid_argument for malformed types.
Line line_from_type(const CubeParams& c, const LineType& t);

// All lines, ordered lexicographically by normalized type entries.
std::vector<Line> enumerate_lines(const CubeParams& c);

// ((n+2)^d - n^d) / 2, without enumerating.
std::int64_t line_count(const CubeParams& c);

// Number of non-constant entries.
int dim_of_line(const LineType& t);

// The 2^(d-1) lines of dimension d (all entries monotone).
std::vector<Line> main_diagonals(const CubeParams& c);

// The d * 2^(d-1) lines of dimension 1 joining adjacent corners.
std::vector<Line> edges(const CubeParams& c);

// ---- points, blocks, degrees ----

// corner: every coordinate in {0, n-1}; inner: none; outer: the rest.
PointClass classify_point(const CubeParams& c, const Coords& p);

// The blocks of p, ascending by label.
std::vector<Block> point_blocks(const CubeParams& c, const Coords& p);

// Number of lines through the block's owner that move exactly inside this
// block: 2^k - 1 for a non-central block of size k, (3^k - 1)/2 for the
// central block (n odd, label (n-1)/2).
std::int64_t active_line_count(const CubeParams& c, const Block& b);

// Number of lines through p: the sum of active_line_count over its blocks.
std::int64_t degree(const CubeParams& c, const Coords& p);

// ---- helpers ----
std::vector<PointIndex> corner_indices(const CubeParams& c);  // ascending
std::string format_line_type(const LineType& t);              // e.g. "(+,0,-)"

}  // namespace cubesym

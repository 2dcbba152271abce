#include "cubesym/cube.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cubesym {

namespace {

constexpr std::int64_t kSizeLimit = std::int64_t{1} << 62;
constexpr std::int64_t kMaxEnumeratedLines = 10'000'000;

std::int64_t checked_pow(std::int64_t base, int exp, const char* what) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > kSizeLimit / base)
      throw TooLargeError(std::string(what) + ": size overflows");
    r *= base;
  }
  return r;
}

void check_point(const CubeParams& c, const Coords& p, const char* what) {
  if (static_cast<int>(p.size()) != c.d)
    throw std::invalid_argument(std::string(what) + ": point has " +
                                std::to_string(p.size()) +
                                " coordinates, cube has dimension " +
                                std::to_string(c.d));
  for (int x : p)
    if (x < 0 || x >= c.n)
      throw std::invalid_argument(std::string(what) + ": coordinate " +
                                  std::to_string(x) + " outside [0, " +
                                  std::to_string(c.n) + ")");
}

bool is_constant_entry(int e) { return e >= 0; }

// Mirror the monotone symbols; constants stay put.  Maps a type to the type
// of the reversed ordering of the same line.
void mirror_type(std::vector<int>& entries) {
  for (int& e : entries) {
    if (e == kPlus)
      e = kMinus;
    else if (e == kMinus)
      e = kPlus;
  }
}

void check_type(const CubeParams& c, const LineType& t, const char* what) {
  if (static_cast<int>(t.entries.size()) != c.d)
    throw std::invalid_argument(std::string(what) +
                                ": type size does not match dimension");
  bool moving = false;
  for (int e : t.entries) {
    if (e == kPlus || e == kMinus)
      moving = true;
    else if (e < 0 || e >= c.n)
      throw std::invalid_argument(std::string(what) + ": constant " +
                                  std::to_string(e) + " outside [0, " +
                                  std::to_string(c.n) + ")");
  }
  if (!moving)
    throw std::invalid_argument(std::string(what) +
                                ": a line type needs a non-constant entry");
}

}  // namespace

CubeParams::CubeParams(int n_, int d_) : n(n_), d(d_) {
  if (n < 2) throw std::invalid_argument("cube needs n >= 2");
  if (d < 1) throw std::invalid_argument("cube needs d >= 1");
  points_ = checked_pow(n, d, "cube");
}

PointIndex point_index(const CubeParams& c, const Coords& p) {
  check_point(c, p, "point_index");
  PointIndex idx = 0;
  for (int i = c.d - 1; i >= 0; --i) idx = idx * c.n + p[i];
  return idx;
}

Coords point_coords(const CubeParams& c, PointIndex index) {
  if (index < 0 || index >= c.point_count())
    throw std::invalid_argument("point_coords: index " +
                                std::to_string(index) + " outside cube");
  Coords p(c.d);
  for (int i = 0; i < c.d; ++i) {
    p[i] = static_cast<int>(index % c.n);
    index /= c.n;
  }
  return p;
}

bool is_linear_sequence(const CubeParams& c, const std::vector<Coords>& seq) {
  for (const Coords& p : seq) check_point(c, p, "is_linear_sequence");
  if (static_cast<int>(seq.size()) != c.n) return false;
  bool moving = false;
  for (int j = 0; j < c.d; ++j) {
    int dir = 0;  // +1 increasing, -1 decreasing, 0 constant
    for (int t = 0; t + 1 < c.n; ++t) {
      int step = seq[t + 1][j] - seq[t][j];
      int s = (step > 0) - (step < 0);
      if (t == 0)
        dir = s;
      else if (s != dir)
        return false;
      if (s == 0 && dir != 0) return false;
    }
    if (dir != 0) moving = true;
  }
  return moving;
}

LineType type_of_line(const CubeParams& c, std::vector<Coords> points) {
  for (const Coords& p : points) check_point(c, p, "type_of_line");
  if (static_cast<int>(points.size()) != c.n)
    throw NotALineError("type_of_line: a line has exactly n points");
  // A line is strictly monotone in each non-constant coordinate, so sorting
  // by any coordinate whose values are all distinct recovers a linear order.
  for (int j = 0; j < c.d; ++j) {
    std::vector<bool> seen(c.n, false);
    bool distinct = true;
    for (const Coords& p : points) {
      if (seen[p[j]]) {
        distinct = false;
        break;
      }
      seen[p[j]] = true;
    }
    if (!distinct) continue;
    std::vector<Coords> ordered = points;
    std::sort(ordered.begin(), ordered.end(),
              [j](const Coords& a, const Coords& b) { return a[j] < b[j]; });
    if (!is_linear_sequence(c, ordered)) continue;
    LineType t;
    t.entries.resize(c.d);
    for (int i = 0; i < c.d; ++i) {
      if (ordered[0][i] == ordered[1][i])
        t.entries[i] = ordered[0][i];
      else
        t.entries[i] = ordered[1][i] > ordered[0][i] ? kPlus : kMinus;
    }
    for (int e : t.entries) {
      if (is_constant_entry(e)) continue;
      if (e == kMinus) mirror_type(t.entries);
      break;
    }
    return t;
  }
  throw NotALineError(
      "type_of_line: points cannot be ordered into a linear sequence");
}

Line line_from_type(const CubeParams& c, const LineType& t) {
  check_type(c, t, "line_from_type");
  Line line;
  line.type = t;
  for (int e : line.type.entries) {
    if (is_constant_entry(e)) continue;
    if (e == kMinus) mirror_type(line.type.entries);
    break;
  }
  line.points.reserve(c.n);
  for (int k = 0; k < c.n; ++k) {
    Coords p(c.d);
    for (int i = 0; i < c.d; ++i) {
      int e = line.type.entries[i];
      p[i] = e == kPlus ? k : (e == kMinus ? c.n - 1 - k : e);
    }
    line.points.push_back(point_index(c, p));
  }
  std::sort(line.points.begin(), line.points.end());
  return line;
}

std::int64_t line_count(const CubeParams& c) {
  std::int64_t outer = checked_pow(c.n + 2, c.d, "line_count");
  return (outer - c.point_count()) / 2;
}

std::vector<Line> enumerate_lines(const CubeParams& c) {
  std::int64_t count = line_count(c);
  if (count > kMaxEnumeratedLines)
    throw TooLargeError("enumerate_lines: " + std::to_string(count) +
                        " lines exceed the enumeration guard");
  std::vector<Line> lines;
  lines.reserve(static_cast<std::size_t>(count));
  // Odometer over entry vectors in lexicographic order; each position runs
  // through kPlus, kMinus, 0, ..., n-1.  Keep the normalized types (first
  // non-constant entry is '+').
  std::vector<int> entries(c.d, kPlus);
  for (;;) {
    int first_moving = -1;
    for (int i = 0; i < c.d; ++i) {
      if (!is_constant_entry(entries[i])) {
        first_moving = i;
        break;
      }
    }
    if (first_moving >= 0 && entries[first_moving] == kPlus)
      lines.push_back(line_from_type(c, LineType{entries}));
    int i = c.d - 1;
    while (i >= 0 && entries[i] == c.n - 1) entries[i--] = kPlus;
    if (i < 0) break;
    ++entries[i];
  }
  return lines;
}

int dim_of_line(const LineType& t) {
  int k = 0;
  for (int e : t.entries)
    if (!is_constant_entry(e)) ++k;
  return k;
}

std::vector<Line> main_diagonals(const CubeParams& c) {
  std::vector<Line> out;
  out.reserve(std::size_t{1} << (c.d - 1));
  for (std::int64_t mask = 0; mask < (std::int64_t{1} << (c.d - 1)); ++mask) {
    std::vector<int> entries(c.d, kPlus);
    for (int i = 1; i < c.d; ++i)
      if ((mask >> (c.d - 1 - i)) & 1) entries[i] = kMinus;
    out.push_back(line_from_type(c, LineType{entries}));
  }
  return out;
}

std::vector<Line> edges(const CubeParams& c) {
  std::vector<Line> out;
  for (int a = 0; a < c.d; ++a) {
    for (std::int64_t mask = 0; mask < (std::int64_t{1} << (c.d - 1));
         ++mask) {
      std::vector<int> entries(c.d);
      int bit = c.d - 2;
      for (int i = 0; i < c.d; ++i) {
        if (i == a)
          entries[i] = kPlus;
        else
          entries[i] = ((mask >> bit--) & 1) ? c.n - 1 : 0;
      }
      out.push_back(line_from_type(c, LineType{entries}));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Line& a, const Line& b) { return a.type < b.type; });
  return out;
}

PointClass classify_point(const CubeParams& c, const Coords& p) {
  check_point(c, p, "classify_point");
  int boundary = 0;
  for (int x : p)
    if (x == 0 || x == c.n - 1) ++boundary;
  if (boundary == c.d) return PointClass::corner;
  if (boundary == 0) return PointClass::inner;
  return PointClass::outer;
}

std::vector<Block> point_blocks(const CubeParams& c, const Coords& p) {
  check_point(c, p, "point_blocks");
  std::map<int, std::vector<int>> by_label;
  for (int i = 0; i < c.d; ++i)
    by_label[std::min(p[i], c.n - 1 - p[i])].push_back(i);
  std::vector<Block> blocks;
  blocks.reserve(by_label.size());
  for (auto& [label, members] : by_label)
    blocks.push_back(Block{label, std::move(members)});
  return blocks;
}

std::int64_t active_line_count(const CubeParams& c, const Block& b) {
  int k = static_cast<int>(b.members.size());
  if (k < 1 || k > c.d)
    throw std::invalid_argument("active_line_count: block size outside cube");
  if (b.label < 0 || b.label > (c.n - 1) / 2)
    throw std::invalid_argument("active_line_count: label outside [0, (n-1)/2]");
  bool central = (c.n % 2 == 1) && b.label == (c.n - 1) / 2;
  if (central) return (checked_pow(3, k, "active_line_count") - 1) / 2;
  return checked_pow(2, k, "active_line_count") - 1;
}

std::int64_t degree(const CubeParams& c, const Coords& p) {
  std::int64_t sum = 0;
  for (const Block& b : point_blocks(c, p)) sum += active_line_count(c, b);
  return sum;
}

std::vector<PointIndex> corner_indices(const CubeParams& c) {
  std::vector<PointIndex> out;
  out.reserve(std::size_t{1} << c.d);
  for (std::int64_t mask = 0; mask < (std::int64_t{1} << c.d); ++mask) {
    Coords p(c.d, 0);
    for (int i = 0; i < c.d; ++i)
      if ((mask >> i) & 1) p[i] = c.n - 1;
    out.push_back(point_index(c, p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_line_type(const LineType& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    if (i) os << ',';
    if (t.entries[i] == kPlus)
      os << '+';
    else if (t.entries[i] == kMinus)
      os << '-';
    else
      os << t.entries[i];
  }
  os << ')';
  return os.str();
}

}  // namespace cubesym

// Command-line surface for the cube line-symmetry library.
//
// Exit codes: 0 = success / decision "yes"; 1 = decision "no" (not
// isomorphic, verification failure); 2 = usage or validation error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cubesym/autgroup.hpp"
#include "cubesym/coloring.hpp"
#include "cubesym/cube.hpp"
#include "cubesym/graph.hpp"
#include "cubesym/oracle.hpp"
#include "cubesym/reduction.hpp"

namespace {

constexpr int kSchemaVersion = 1;

using nlohmann::json;
using namespace cubesym;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << text;
  if (!out) throw std::invalid_argument("write failed: " + path);
}

template <typename T>
std::string join(const std::vector<T>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

std::vector<int> parse_int_csv(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
      if (used != tok.size())
        throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("expected comma-separated integers, got '" +
                                  text + "'");
    }
  }
  if (out.empty())
    throw std::invalid_argument("expected comma-separated integers");
  return out;
}

// Point map file: whitespace-separated image indices, '#' to end of line is
// a comment.
std::vector<PointIndex> parse_map_file(const std::string& text) {
  std::string stripped;
  stripped.reserve(text.size());
  bool comment = false;
  for (char ch : text) {
    if (ch == '#') comment = true;
    if (ch == '\n') comment = false;
    stripped.push_back(comment ? ' ' : ch);
  }
  std::istringstream in(stripped);
  std::vector<PointIndex> map;
  PointIndex v = 0;
  while (in >> v) map.push_back(v);
  if (!in.eof()) {
    std::string bad;
    in.clear();
    in >> bad;
    throw ParseError("point map file: bad token '" + bad + "'");
  }
  if (map.empty()) throw ParseError("point map file: no entries");
  return map;
}

const std::string& class_name(PointClass pc) {
  static const std::string names[] = {"corner", "outer", "inner"};
  return names[static_cast<int>(pc)];
}

// ---- verify suites ----

bool verify_lines(const CubeParams& c) {
  std::vector<std::vector<PointIndex>> mine;
  for (const Line& l : enumerate_lines(c)) mine.push_back(l.points);
  std::sort(mine.begin(), mine.end());
  return mine == oracle::brute_force_lines(c) &&
         static_cast<std::int64_t>(mine.size()) == line_count(c);
}

bool verify_group(const CubeParams& c) {
  if (c.n == 2) {
    if (c.d > 3)
      throw TooLargeError(
          "verify group: n = 2 cubes with d > 3 have (2^d)! automorphisms; "
          "the oracle comparison is infeasible");
    return oracle::brute_force_automorphisms(c).size() == group_order(c);
  }
  std::vector<std::vector<PointIndex>> maps;
  for (const Automorphism& a : enumerate_group(c)) maps.push_back(point_map(a));
  std::sort(maps.begin(), maps.end());
  return maps == oracle::brute_force_automorphisms(c) &&
         maps.size() == group_order(c);
}

bool verify_degrees(const CubeParams& c) {
  const std::vector<std::vector<PointIndex>> lines = oracle::brute_force_lines(c);
  for (PointIndex p = 0; p < c.point_count(); ++p) {
    std::int64_t incident = 0;
    for (const auto& l : lines)
      incident += std::binary_search(l.begin(), l.end(), p);
    if (incident != degree(c, point_coords(c, p))) return false;
  }
  return true;
}

bool verify_reduction() {
  // all pairs of minimum-degree-1 graphs on 2 or 3 vertices, plus one
  // four-vertex pair, against the exhaustive graph oracle
  std::vector<Graph> graphs{
      make_graph(2, {{0, 1}}),
      make_graph(3, {{0, 1}, {1, 2}}),
      make_graph(3, {{0, 1}, {0, 2}}),
      make_graph(3, {{0, 2}, {1, 2}}),
      make_graph(3, {{0, 1}, {0, 2}, {1, 2}}),
  };
  for (const Graph& a : graphs) {
    for (const Graph& b : graphs) {
      if (a.n != b.n) continue;
      if (graph_iso_via_cube(a, b) != oracle::brute_force_graph_iso(a, b))
        return false;
    }
  }
  Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  return graph_iso_via_cube(p4, p4).has_value() &&
         !graph_iso_via_cube(p4, star).has_value();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cubesym: lines, symmetries, canonical forms and the graph-isomorphism "
      "gadget for the combinatorial cube n^d"};
  app.require_subcommand(1);
  int rc = 0;

  // ---- lines ----
  auto* lines_cmd = app.add_subcommand("lines", "enumerate the lines of n^d");
  int ln = 0, ld = 0;
  bool lines_count_only = false, lines_json = false;
  lines_cmd->add_option("--n", ln, "side length")->required();
  lines_cmd->add_option("--d", ld, "dimension")->required();
  lines_cmd->add_flag("--count-only", lines_count_only, "print only the count");
  lines_cmd->add_flag("--json", lines_json, "machine-readable output");
  lines_cmd->callback([&]() {
    CubeParams c(ln, ld);
    if (lines_json) {
      json j{{"schema_version", kSchemaVersion},
             {"n", c.n},
             {"d", c.d},
             {"count", line_count(c)}};
      if (!lines_count_only) {
        json arr = json::array();
        for (const Line& l : enumerate_lines(c))
          arr.push_back(json{{"type", format_line_type(l.type)},
                             {"points", l.points}});
        j["lines"] = std::move(arr);
      }
      std::cout << j.dump() << "\n";
      return;
    }
    if (lines_count_only) {
      std::cout << line_count(c) << "\n";
      return;
    }
    for (const Line& l : enumerate_lines(c))
      std::cout << format_line_type(l.type) << " " << join(l.points, " ")
                << "\n";
  });

  // ---- group ----
  auto* group_cmd = app.add_subcommand("group", "automorphism group facts");
  group_cmd->require_subcommand(1);
  auto* order_cmd =
      group_cmd->add_subcommand("order", "print the group order");
  int gn = 0, gd = 0;
  bool order_json = false;
  order_cmd->add_option("--n", gn, "side length")->required();
  order_cmd->add_option("--d", gd, "dimension")->required();
  order_cmd->add_flag("--json", order_json, "machine-readable output");
  order_cmd->callback([&]() {
    CubeParams c(gn, gd);
    const std::uint64_t order = group_order(c);
    if (order_json)
      std::cout << json{{"schema_version", kSchemaVersion},
                        {"n", c.n},
                        {"d", c.d},
                        {"order", order}}
                       .dump()
                << "\n";
    else
      std::cout << order << "\n";
  });

  auto* enum_cmd = group_cmd->add_subcommand(
      "enumerate", "list every canonical triple, one per line");
  int en = 0, ed = 0;
  std::uint64_t ecap = kDefaultGroupCap;
  std::string eout;
  enum_cmd->add_option("--n", en, "side length")->required();
  enum_cmd->add_option("--d", ed, "dimension")->required();
  enum_cmd->add_option("--cap", ecap, "largest group order to enumerate");
  enum_cmd->add_option("--out", eout, "write to a file instead of stdout");
  enum_cmd->callback([&]() {
    CubeParams c(en, ed);
    std::ostringstream body;
    for (const Automorphism& a : enumerate_group(c, ecap))
      body << format_automorphism(a) << "\n";
    if (eout.empty())
      std::cout << body.str();
    else
      write_file(eout, body.str());
  });

  // ---- degree ----
  auto* degree_cmd =
      app.add_subcommand("degree", "lines through a point, by block");
  int dn = 0, dd = 0;
  std::string dpoint;
  bool degree_json = false;
  degree_cmd->add_option("--n", dn, "side length")->required();
  degree_cmd->add_option("--d", dd, "dimension")->required();
  degree_cmd->add_option("--point", dpoint, "coordinates x1,...,xd")
      ->required();
  degree_cmd->add_flag("--json", degree_json, "machine-readable output");
  degree_cmd->callback([&]() {
    CubeParams c(dn, dd);
    Coords p = parse_int_csv(dpoint);
    const std::int64_t deg = degree(c, p);  // validates the point
    const std::vector<Block> blocks = point_blocks(c, p);
    if (degree_json) {
      json arr = json::array();
      for (const Block& b : blocks)
        arr.push_back(json{{"label", b.label},
                           {"positions", b.members},
                           {"active", active_line_count(c, b)}});
      std::cout << json{{"schema_version", kSchemaVersion},
                        {"n", c.n},
                        {"d", c.d},
                        {"point", p},
                        {"class", class_name(classify_point(c, p))},
                        {"degree", deg},
                        {"blocks", std::move(arr)}}
                       .dump()
                << "\n";
      return;
    }
    std::cout << "point " << join(p, ",") << "\n"
              << "class " << class_name(classify_point(c, p)) << "\n"
              << "degree " << deg << "\n";
    for (const Block& b : blocks)
      std::cout << "block label=" << b.label << " positions="
                << join(b.members, ",") << " active="
                << active_line_count(c, b) << "\n";
  });

  // ---- canon ----
  auto* canon_cmd =
      app.add_subcommand("canon", "canonical form of a coloring");
  std::string canon_in, canon_ttt;
  int cn = 0, cd = 0, canon_threads = 1;
  bool canon_json = false;
  canon_cmd->add_option("--in", canon_in, "coloring JSON file");
  canon_cmd->add_option("--ttt", canon_ttt,
                        "board string over . x o (needs --n and --d)");
  canon_cmd->add_option("--n", cn, "side length for --ttt");
  canon_cmd->add_option("--d", cd, "dimension for --ttt");
  canon_cmd->add_option("--threads", canon_threads, "worker threads");
  canon_cmd->add_flag("--json", canon_json, "machine-readable output");
  canon_cmd->callback([&]() {
    if (canon_in.empty() == canon_ttt.empty())
      throw std::invalid_argument("canon: give exactly one of --in / --ttt");
    const bool from_board = !canon_ttt.empty();
    if (from_board && (cn == 0 || cd == 0))
      throw std::invalid_argument("canon: --ttt needs --n and --d");
    Coloring s = from_board
                     ? coloring_from_board_string(CubeParams(cn, cd), canon_ttt)
                     : coloring_from_json(read_file(canon_in));
    CanonicalForm cf = canonical_form(s, kDefaultGroupCap, canon_threads);
    if (canon_json) {
      json j{{"schema_version", kSchemaVersion},
             {"canonical", json::parse(coloring_to_json(cf.coloring))},
             {"witness", format_automorphism(cf.witness)}};
      if (from_board) j["board"] = board_string_from_coloring(cf.coloring);
      std::cout << j.dump() << "\n";
      return;
    }
    std::cout << coloring_to_json(cf.coloring) << "\n"
              << "witness " << format_automorphism(cf.witness) << "\n";
    if (from_board)
      std::cout << "board " << board_string_from_coloring(cf.coloring) << "\n";
  });

  // ---- iso ----
  auto* iso_cmd = app.add_subcommand(
      "iso", "decide colored-cube isomorphism of two colorings");
  std::string iso_a, iso_b;
  bool iso_json = false;
  iso_cmd->add_option("--a", iso_a, "first coloring JSON file")->required();
  iso_cmd->add_option("--b", iso_b, "second coloring JSON file")->required();
  iso_cmd->add_flag("--json", iso_json, "machine-readable output");
  iso_cmd->callback([&]() {
    Coloring a = coloring_from_json(read_file(iso_a));
    Coloring b = coloring_from_json(read_file(iso_b));
    std::optional<Automorphism> w = are_isomorphic(a, b);
    if (iso_json) {
      json j{{"schema_version", kSchemaVersion},
             {"isomorphic", w.has_value()}};
      if (w) j["witness"] = format_automorphism(*w);
      std::cout << j.dump() << "\n";
    } else if (w) {
      std::cout << format_automorphism(*w) << "\n";
    } else {
      std::cout << "not isomorphic\n";
    }
    if (!w) rc = 1;
  });

  // ---- reduce ----
  auto* reduce_cmd = app.add_subcommand(
      "reduce", "encode a graph as a colored [2n+4]^2 cube");
  std::string reduce_graph_path, reduce_out;
  reduce_cmd->add_option("--graph", reduce_graph_path, "edge list file")
      ->required();
  reduce_cmd->add_option("--out", reduce_out,
                         "write the coloring JSON here (default stdout)");
  reduce_cmd->callback([&]() {
    Graph g = parse_graph_file(read_file(reduce_graph_path));
    const std::string text = coloring_to_json(reduce_graph(g)) + "\n";
    if (reduce_out.empty())
      std::cout << text;
    else
      write_file(reduce_out, text);
  });

  // ---- graph-iso ----
  auto* giso_cmd = app.add_subcommand(
      "graph-iso", "decide graph isomorphism through the cube gadget");
  std::string giso_a, giso_b, giso_mode = "fast";
  bool giso_json = false;
  giso_cmd->add_option("--a", giso_a, "first edge list file")->required();
  giso_cmd->add_option("--b", giso_b, "second edge list file")->required();
  giso_cmd->add_option("--mode", giso_mode, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));
  giso_cmd->add_flag("--json", giso_json, "machine-readable output");
  giso_cmd->callback([&]() {
    Graph a = parse_graph_file(read_file(giso_a));
    Graph b = parse_graph_file(read_file(giso_b));
    const GraphIsoMode mode =
        giso_mode == "full" ? GraphIsoMode::full : GraphIsoMode::fast;
    std::optional<std::vector<int>> f = graph_iso_via_cube(a, b, mode);
    if (giso_json) {
      json j{{"schema_version", kSchemaVersion},
             {"isomorphic", f.has_value()}};
      if (f) j["bijection"] = *f;
      std::cout << j.dump() << "\n";
    } else if (f) {
      std::cout << join(*f, " ") << "\n";
    } else {
      std::cout << "not isomorphic\n";
    }
    if (!f) rc = 1;
  });

  // ---- factor ----
  auto* factor_cmd = app.add_subcommand(
      "factor", "factor a point map into a canonical triple");
  std::string factor_map;
  int fn = 0, fd = 0;
  bool factor_json = false;
  factor_cmd->add_option("--map", factor_map,
                         "file of image indices (whitespace separated)")
      ->required();
  factor_cmd->add_option("--n", fn, "side length")->required();
  factor_cmd->add_option("--d", fd, "dimension")->required();
  factor_cmd->add_flag("--json", factor_json, "machine-readable output");
  factor_cmd->callback([&]() {
    CubeParams c(fn, fd);
    Automorphism a =
        factor_automorphism(c, parse_map_file(read_file(factor_map)));
    if (factor_json)
      std::cout << json{{"schema_version", kSchemaVersion},
                        {"n", c.n},
                        {"d", c.d},
                        {"automorphism", format_automorphism(a)}}
                       .dump()
                << "\n";
    else
      std::cout << format_automorphism(a) << "\n";
  });

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand(
      "verify", "compare the fast paths against brute-force oracles");
  int vn = 0, vd = 0;
  std::string vsuite = "all";
  bool verify_json = false;
  verify_cmd->add_option("--n", vn, "side length")->required();
  verify_cmd->add_option("--d", vd, "dimension")->required();
  verify_cmd
      ->add_option("--suite", vsuite,
                   "lines, group, degrees, reduction, or all (reduction "
                   "ignores --n/--d)")
      ->check(CLI::IsMember({"lines", "group", "degrees", "reduction", "all"}));
  verify_cmd->add_flag("--json", verify_json, "machine-readable output");
  verify_cmd->callback([&]() {
    CubeParams c(vn, vd);
    std::vector<std::pair<std::string, bool>> results;
    auto want = [&](const char* name) {
      return vsuite == "all" || vsuite == name;
    };
    if (want("lines")) results.emplace_back("lines", verify_lines(c));
    if (want("group")) results.emplace_back("group", verify_group(c));
    if (want("degrees")) results.emplace_back("degrees", verify_degrees(c));
    if (want("reduction")) results.emplace_back("reduction", verify_reduction());
    bool all_ok = true;
    json jsuites = json::object();
    for (const auto& [name, ok] : results) {
      all_ok = all_ok && ok;
      jsuites[name] = ok ? "PASS" : "FAIL";
      if (!verify_json)
        std::cout << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
    }
    if (verify_json)
      std::cout << json{{"schema_version", kSchemaVersion},
                        {"n", c.n},
                        {"d", c.d},
                        {"suites", std::move(jsuites)},
                        {"ok", all_ok}}
                       .dump()
                << "\n";
    if (!all_ok) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cgroupoid/connection.hpp"
#include "cgroupoid/corpus.hpp"
#include "cgroupoid/error.hpp"
#include "cgroupoid/games.hpp"
#include "cgroupoid/hom_complex.hpp"
#include "cgroupoid/invariants.hpp"
#include "cgroupoid/io.hpp"

#ifndef CGROUPOID_DEFAULT_CORPUS
#define CGROUPOID_DEFAULT_CORPUS "data/corpus"
#endif

namespace fs = std::filesystem;
using namespace cgroupoid;

namespace {

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  bool timing = false;
};

// Exit codes: 0 computed, 1 a checked property failed, 2 bad input.
constexpr int kOk = 0, kViolated = 1, kInputError = 2;

fs::path corpus_dir() {
  if (const char* env = std::getenv("GROUPOID_CORPUS_DIR"); env && *env) return env;
  return CGROUPOID_DEFAULT_CORPUS;
}

// A path, or the name of a bundled corpus file ("c3", "grid-3x3.json").
fs::path resolve(const std::string& input) {
  if (fs::exists(input)) return input;
  for (const fs::path candidate : {corpus_dir() / input, corpus_dir() / (input + ".json")})
    if (fs::exists(candidate)) return candidate;
  throw Error(Errc::ParseError, "no such file or corpus entry: " + input);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw Error(Errc::ParseError, "cannot open " + p.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// FNV-1a, enough to tell inputs apart in a report.
std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a:" << std::hex << h;
  return out.str();
}

json load_input(const std::string& input, std::string& raw) {
  const fs::path p = resolve(input);
  raw = read_file(p);
  return parse_json(raw, p.string());
}

class Report {
 public:
  Report(std::string command, const Options& opt) : command_(std::move(command)), opt_(opt) {}

  void input(const std::string& raw) { digest_ = digest(raw); }
  json& results() { return results_; }

  int emit(int code) const {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    if (opt_.format == "json") {
      json out{{"command", command_}, {"results", results_}};
      if (!digest_.empty()) out["input_digest"] = digest_;
      if (opt_.timing) out["timing_ms"] = ms;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "command: " << command_ << "\n";
      if (!digest_.empty()) std::cout << "input_digest: " << digest_ << "\n";
      for (const auto& [key, value] : results_.items())
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      if (opt_.timing) std::cout << "timing_ms: " << ms << "\n";
    }
    return code;
  }

 private:
  std::string command_;
  Options opt_;
  std::string digest_;
  json results_ = json::object();
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_holonomy(const Options& opt, const std::string& input, const std::string& builtin, std::size_t base) {
  Report report("holonomy", opt);
  HolonomyResult h = [&] {
    if (builtin == "tribar") return holonomy_group(tribar_groupoid(), base);
    if (!builtin.empty()) throw Error(Errc::ParseError, "unknown builtin \"" + builtin + "\"");
    std::string raw;
    const json j = load_input(input, raw);
    report.input(raw);
    if (j.is_object() && j.value("kind", "") == "groupoid") return holonomy_group(groupoid_from_json(j), base);
    const AnyComplex k = complex_from_json(j);
    auto result = std::visit([&](const auto& c) { return holonomy_group(build_groupoid(c), base); }, k);
    if (const auto* cube = std::get_if<CubicalComplex>(&k)) {
      json signed_gens = json::array();
      for (const auto& s : signed_generators(result, cube->dimension())) signed_gens.push_back(signed_to_json(s));
      report.results()["signed_generators"] = std::move(signed_gens);
    }
    return result;
  }();
  report.results().update(holonomy_to_json(h));
  return report.emit(kOk);
}

int cmd_invariants(const Options& opt, const std::string& input) {
  Report report("invariants", opt);
  std::string raw;
  const AnyComplex k = complex_from_json(load_input(input, raw));
  report.input(raw);
  const auto* cube = std::get_if<CubicalComplex>(&k);
  if (!cube) throw Error(Errc::ParseError, "invariants needs a cubical complex");
  const InvariantComparison r = compare_invariants(*cube);
  json& out = report.results();
  out["i"] = r.i;
  out["nacl"] = r.nacl;
  out["equal"] = r.equal;
  out["witness_odd_cycle"] = r.witness_odd_cycle;
  out["strongly_connected"] = r.strongly_connected;
  out["locally_strongly_connected"] = r.locally_strongly_connected;
  const bool bound_ok = r.i <= r.nacl;
  const bool equality_ok = !(r.strongly_connected && r.locally_strongly_connected) || r.equal;
  return report.emit(bound_ok && equality_ok ? kOk : kViolated);
}

int cmd_coloring(const Options& opt, const std::string& input) {
  Report report("coloring", opt);
  std::string raw;
  const AnyComplex k = complex_from_json(load_input(input, raw));
  report.input(raw);
  const RainbowColoring c = std::visit([](const auto& x) { return transport_coloring(x); }, k);
  const bool ok = std::visit([&](const auto& x) { return is_rainbow(x, c); }, k);
  report.results()["colors"] = c.colors;
  report.results()["coloring"] = c.color;
  report.results()["rainbow"] = ok;
  return report.emit(ok ? kOk : kViolated);
}

Puzzle parse_board(const std::string& board) {
  const auto x = board.find('x');
  if (x == std::string::npos) throw Error(Errc::ParseError, "board must look like 4x4");
  try {
    return grid_puzzle(std::stoul(board.substr(0, x)), std::stoul(board.substr(x + 1)));
  } catch (const std::logic_error&) {
    throw Error(Errc::ParseError, "board must look like 4x4");
  }
}

int cmd_puzzle_reach(const Options& opt, const std::string& board, const std::string& from, const std::string& to) {
  Report report("puzzle reach", opt);
  const Puzzle p = parse_board(board);
  std::string raw_a, raw_b;
  const LabelledState a = state_from_json(load_input(from, raw_a));
  const LabelledState b = state_from_json(load_input(to, raw_b));
  report.input(raw_a + raw_b);
  const bool ok = reachable(p, a, b);
  report.results()["board"] = board;
  report.results()["reachable"] = ok;
  report.results()["verdict"] = ok ? "reachable" : "unreachable";
  return report.emit(kOk);
}

int cmd_puzzle_holonomy(const Options& opt, const std::string& board, std::optional<Vertex> base) {
  Report report("puzzle holonomy", opt);
  const Puzzle p = parse_board(board);
  const HolonomyResult h = puzzle_holonomy(p, base.value_or(static_cast<Vertex>(p.cell_count() - 1)));
  report.results()["board"] = board;
  report.results().update(holonomy_to_json(h));
  return report.emit(kOk);
}

Graph graph_arg(const std::string& arg, std::string& raw) {
  if (fs::exists(arg)) return graph_from_json(load_input(arg, raw));
  return named_graph(arg);
}

int cmd_hom(const Options& opt, const std::string& g_arg, const std::string& h_arg, const std::string& what) {
  Report report("hom", opt);
  std::string raw_g, raw_h;
  const Graph g = graph_arg(g_arg, raw_g);
  const Graph h = graph_arg(h_arg, raw_h);
  if (!raw_g.empty() || !raw_h.empty()) report.input(raw_g + raw_h);
  const auto cells = hom_complex(g, h);
  json& out = report.results();
  out["g"] = g_arg;
  out["h"] = h_arg;
  out["cells"] = cells.size();
  int code = kOk;
  std::stringstream items(what);
  for (std::string item; std::getline(items, item, ',');) {
    if (item == "fvector") {
      out["fvector"] = f_vector(cells);
    } else if (item == "euler") {
      out["euler"] = euler_characteristic(cells);
    } else if (item == "free-action") {
      if (g.vertex_count() != 2 || g.edges().size() != 1)
        throw Error(Errc::InvalidGraph, "free-action needs --g k2");
      const SwapAction s = induced_swap_action(cells);
      out["free_action"] = s.fixed_point_free;
      out["involutive"] = s.involutive;
      if (!s.involutive || !s.dimension_preserving || !s.face_preserving) code = kViolated;
    } else if (item == "colorable") {
      const auto w = graph_hom_exists(g, h.vertex_count());
      out["colorable"] = w.has_value();
      if (w) out["coloring"] = *w;
    } else if (!item.empty()) {
      throw Error(Errc::ParseError, "unknown report item \"" + item + "\"");
    }
  }
  return report.emit(code);
}

int cmd_connection(const Options& opt, const std::string& input, const std::string& builtin,
                   const std::string& graph, Vertex base) {
  Report report("connection", opt);
  GraphConnection c;
  if (!builtin.empty()) {
    std::string raw;
    const Graph g = graph_arg(graph, raw);
    if (builtin == "canonical") c = canonical_connection(g);
    else if (builtin == "rotation") c = rotation_connection(g);
    else throw Error(Errc::ParseError, "unknown builtin connection \"" + builtin + "\"");
  } else {
    std::string raw;
    c = connection_from_json(load_input(input, raw));
    report.input(raw);
  }
  const ConnectionCheck check = validate_connection(c);
  json& out = report.results();
  out["valid"] = check.ok;
  if (!check.ok) {
    out["violation"] = {{"edge", {check.violation->x, check.violation->y}}, {"reason", check.violation->reason}};
    return report.emit(kViolated);
  }
  const HolonomyResult h = connection_holonomy(c, base);
  out.update(holonomy_to_json(h));
  return report.emit(kOk);
}

int cmd_corpus(const Options& opt, std::size_t count, const std::string& write_dir, bool list) {
  Report report("corpus", opt);
  json& out = report.results();
  if (list || !write_dir.empty()) {
    json names = json::array();
    for (const auto& nc : builtin_corpus()) {
      names.push_back(nc.name);
      if (!write_dir.empty()) {
        fs::create_directories(write_dir);
        std::ofstream(fs::path(write_dir) / (nc.name + ".json")) << complex_to_json(nc.complex).dump(1) << "\n";
      }
    }
    if (!write_dir.empty())
      std::ofstream(fs::path(write_dir) / "tribar.json") << groupoid_to_json(tribar_groupoid()).dump(1) << "\n";
    out["complexes"] = std::move(names);
    if (!write_dir.empty()) out["written_to"] = write_dir;
    return report.emit(kOk);
  }

  std::size_t bound_held = 0, hyp = 0, equal_held = 0;
  json failures = json::array();
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = opt.seed * 1'000'003ull + i;
    const InvariantComparison r = compare_invariants(random_cubical(s));
    if (r.i <= r.nacl) ++bound_held;
    else failures.push_back({{"seed", s}, {"property", "I<=NaCl"}});
    if (r.strongly_connected && r.locally_strongly_connected) {
      ++hyp;
      if (r.equal) ++equal_held;
      else failures.push_back({{"seed", s}, {"property", "I=NaCl"}});
    }
  }
  out["seed"] = opt.seed;
  out["count"] = count;
  out["bound"] = "I<=NaCl held " + std::to_string(bound_held) + "/" + std::to_string(count);
  out["equality"] = "I=NaCl held " + std::to_string(equal_held) + "/" + std::to_string(hyp) +
                    " under both connectivity hypotheses";
  out["failures"] = std::move(failures);
  return report.emit(bound_held == count && equal_held == hyp ? kOk : kViolated);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flip groupoids: holonomy, coloring invariants, puzzles and Hom complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opt.seed, "Seed for randomized commands");
  app.add_flag("--timing", opt.timing, "Include wall-clock time in the report");

  std::string input, builtin, graph = "k4", board = "4x4", from, to, g_arg, h_arg, what = "fvector,euler";
  std::string write_dir;
  std::size_t base = 0, count = 100;
  std::optional<Vertex> hole;
  bool list = false;

  auto* hol = app.add_subcommand("holonomy", "Holonomy group of a complex file");
  hol->add_option("input", input, "Complex JSON file or corpus name");
  hol->add_option("--builtin", builtin, "Built-in groupoid (tribar)");
  hol->add_option("--base", base, "Base facet");

  auto* inv = app.add_subcommand("invariants", "I(K), NaCl(K) and connectivity flags");
  inv->add_option("input", input, "Cubical complex JSON file or corpus name")->required();

  auto* col = app.add_subcommand("coloring", "Rainbow coloring by transport");
  col->add_option("input", input, "Complex JSON file or corpus name")->required();

  auto* puz = app.add_subcommand("puzzle", "Sliding puzzles");
  puz->require_subcommand(1);
  auto* reach = puz->add_subcommand("reach", "Decide reachability between two labelled states");
  reach->add_option("--board", board, "Board as MxN");
  reach->add_option("--from", from, "Start state JSON")->required();
  reach->add_option("--to", to, "Target state JSON")->required();
  auto* phol = puz->add_subcommand("holonomy", "Holonomy group of a board");
  phol->add_option("--board", board, "Board as MxN");
  phol->add_option("--base", hole, "Base hole cell (default: last cell)");

  auto* hom = app.add_subcommand("hom", "Hom(G,H) cell complex");
  hom->set_help_flag("--help", "Print this help message and exit");
  hom->add_option("--g", g_arg, "Graph name (kN, cN) or JSON file")->required();
  hom->add_option("--h", h_arg, "Graph name (kN, cN) or JSON file")->required();
  hom->add_option("--report", what, "Comma list of fvector, euler, free-action, colorable");

  auto* con = app.add_subcommand("connection", "Validate a graph connection and compute its holonomy");
  con->add_option("input", input, "Connection JSON file");
  con->add_option("--builtin", builtin, "canonical or rotation");
  con->add_option("--graph", graph, "Graph for --builtin");
  con->add_option("--base", base, "Base vertex");

  auto* cor = app.add_subcommand("corpus", "Property sweep over seeded random cubical complexes");
  cor->add_option("--count", count, "Number of random complexes");
  cor->add_flag("--list", list, "List the built-in named complexes");
  cor->add_option("--write", write_dir, "Write the named complexes as JSON into a directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*hol) {
      if (input.empty() && builtin.empty()) throw Error(Errc::ParseError, "holonomy needs an input or --builtin");
      return cmd_holonomy(opt, input, builtin, base);
    }
    if (*inv) return cmd_invariants(opt, input);
    if (*col) return cmd_coloring(opt, input);
    if (*reach) return cmd_puzzle_reach(opt, board, from, to);
    if (*phol) return cmd_puzzle_holonomy(opt, board, hole);
    if (*hom) return cmd_hom(opt, g_arg, h_arg, what);
    if (*con) {
      if (input.empty() && builtin.empty()) throw Error(Errc::ParseError, "connection needs an input or --builtin");
      return cmd_connection(opt, input, builtin, graph, static_cast<Vertex>(base));
    }
    if (*cor) return cmd_corpus(opt, count, write_dir, list);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::NontrivialHolonomy:
      case Errc::NotLocallyConnected:
      case Errc::InconsistentExtension:
        return kViolated;
      default:
        return kInputError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

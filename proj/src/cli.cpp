#include "uvd/cli.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "uvd/constructions.hpp"
#include "uvd/exact_solver.hpp"
#include "uvd/generators.hpp"
#include "uvd/io.hpp"
#include "uvd/star_decomposition.hpp"

namespace uvd::cli {
namespace {

struct CliError : std::runtime_error {
  CliError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kIoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

JsonDocument load_graph(const std::string& path) {
  const std::string text = slurp(path);
  std::istringstream in(text);
  if (looks_like_json(text)) return read_json(in);
  return JsonDocument{read_graph_text(in), std::nullopt};
}

Coloring load_coloring(const std::string& path, const Graph& g) {
  const std::string text = slurp(path);
  std::istringstream in(text);
  if (!looks_like_json(text)) return read_coloring_text(in, g);
  JsonDocument doc = read_json(in);
  if (!(doc.graph == g)) throw ParseError(path + ": graph does not match the graph file");
  if (!doc.coloring) throw ParseError(path + ": no \"colors\" field");
  return *doc.coloring;
}

// Graph plus coloring from one JSON file or a graph file and a coloring file.
ColoredGraph load_colored(const std::string& graph_path, const std::string& coloring_path) {
  JsonDocument doc = load_graph(graph_path);
  if (!coloring_path.empty()) {
    Coloring c = load_coloring(coloring_path, doc.graph);
    return {std::move(doc.graph), std::move(c)};
  }
  if (!doc.coloring) throw ParseError("no coloring given and " + graph_path + " has none");
  return {doc.graph, *doc.coloring};
}

// Writes data to `path`, or to `out` when no path is given.
void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw CliError(kIoError, "cannot write " + path);
  write(file);
  if (!file) throw CliError(kIoError, "error writing " + path);
}

std::uint64_t parse_uint(const std::string& s, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-')
    throw CliError(kIoError, std::string("bad ") + what + ": " + s);
  return v;
}

Vertex parse_vertex_count(const std::string& s, const char* what) {
  const std::uint64_t v = parse_uint(s, what);
  if (v > 1'000'000) throw CliError(kIoError, std::string(what) + " too large: " + s);
  return static_cast<Vertex>(v);
}

void need_params(const std::vector<std::string>& params, std::size_t count,
                 const std::string& family) {
  if (params.size() != count)
    throw CliError(kIoError, family + " takes " + std::to_string(count) + " parameter(s)");
}

Graph generate_family(const std::string& family, const std::vector<std::string>& params,
                      std::uint64_t seed) {
  try {
    if (family == "path") {
      need_params(params, 1, family);
      return path_graph(parse_vertex_count(params[0], "n"));
    }
    if (family == "cycle") {
      need_params(params, 1, family);
      return cycle_graph(parse_vertex_count(params[0], "n"));
    }
    if (family == "cbt") {
      need_params(params, 1, family);
      return complete_binary_tree(static_cast<int>(parse_uint(params[0], "height")));
    }
    if (family == "complete") {
      need_params(params, 1, family);
      const Vertex n = parse_vertex_count(params[0], "n");
      if (n > 2000) throw CliError(kIoError, "complete graphs are limited to 2000 vertices");
      return complete_graph(n);
    }
    if (family == "star") {
      std::vector<int> lengths;
      for (const std::string& p : params) {
        std::stringstream ss(p);
        for (std::string item; std::getline(ss, item, ',');)
          if (!item.empty()) lengths.push_back(static_cast<int>(parse_uint(item, "branch length")));
      }
      return one_star_graph(lengths);
    }
    if (family == "random") {
      need_params(params, 2, family);
      const Vertex n = parse_vertex_count(params[0], "n");
      double p = 0;
      try {
        std::size_t used = 0;
        p = std::stod(params[1], &used);
        if (used != params[1].size()) throw std::invalid_argument("p");
      } catch (const std::exception&) {
        throw CliError(kIoError, "bad edge probability: " + params[1]);
      }
      return random_admissible_graph(n, p, seed);
    }
  } catch (const CliError&) {
    throw;
  } catch (const std::exception& e) {
    throw CliError(kIoError, e.what());
  }
  throw CliError(kIoError, "unknown family '" + family +
                               "' (path, cycle, cbt, star, complete, random)");
}

// Family recognition. Each detector returns placement[i] = vertex of g in
// the role of canonical vertex i, or nullopt.

std::optional<std::vector<Vertex>> walk_from(const Graph& g, Vertex start, Vertex second) {
  std::vector<Vertex> order{start};
  std::vector<bool> seen(g.vertex_count(), false);
  seen[start] = true;
  Vertex prev = start, cur = second;
  while (!seen[cur]) {
    seen[cur] = true;
    order.push_back(cur);
    Vertex next = cur;
    for (EdgeId e : g.incident(cur))
      if (g.opposite(e, cur) != prev) next = g.opposite(e, cur);
    if (next == cur) break;
    prev = cur;
    cur = next;
  }
  if (order.size() != g.vertex_count()) return std::nullopt;
  return order;
}

std::optional<std::vector<Vertex>> detect_path(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n < 3 || g.edge_count() != n - 1) return std::nullopt;
  std::optional<Vertex> end;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1 && !end) end = v;
    if (g.degree(v) == 0 || g.degree(v) > 2) return std::nullopt;
  }
  if (!end) return std::nullopt;
  return walk_from(g, *end, g.opposite(g.incident(*end)[0], *end));
}

std::optional<std::vector<Vertex>> detect_cycle(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != 2) return std::nullopt;
  const Vertex a = g.opposite(g.incident(0)[0], 0), b = g.opposite(g.incident(0)[1], 0);
  return walk_from(g, 0, std::min(a, b));
}

std::optional<std::pair<int, std::vector<Vertex>>> detect_cbt(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n < 3 || !std::has_single_bit(std::uint64_t{n} + 1) || g.edge_count() != n - 1)
    return std::nullopt;
  const int h = std::bit_width(n) - 1;
  std::optional<Vertex> root;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) continue;
    if (root) return std::nullopt;
    root = v;
  }
  if (!root) return std::nullopt;
  std::vector<Vertex> placement{*root};
  std::vector<bool> seen(n, false);
  seen[*root] = true;
  for (std::size_t i = 0; i < placement.size(); ++i) {
    const Vertex v = placement[i];
    const bool leaf_level = std::bit_width(i + 1) - 1 == static_cast<unsigned>(h);
    std::vector<Vertex> children;
    for (EdgeId e : g.incident(v)) {
      const Vertex w = g.opposite(e, v);
      if (!seen[w]) children.push_back(w);
    }
    if (children.size() != (leaf_level ? 0u : 2u)) return std::nullopt;
    std::sort(children.begin(), children.end());
    for (Vertex w : children) {
      seen[w] = true;
      placement.push_back(w);
    }
  }
  if (placement.size() != n) return std::nullopt;
  return std::make_pair(h, placement);
}

std::optional<CycleSeedColoring> seed_from_env() {
  const char* dir = std::getenv("UVD_SEED_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  const std::filesystem::path file = std::filesystem::path(dir) / "c15_seed.txt";
  if (!std::filesystem::exists(file)) return std::nullopt;
  const std::string text = slurp(file.string());
  std::istringstream in(text);
  try {
    CycleSeedColoring seed = to_cycle_seed(read_coloring_text(in, cycle_graph(15)), 15);
    seed.k = 4;
    check_cycle_seed(seed);
    return seed;
  } catch (const std::invalid_argument& e) {
    throw CliError(kIoError, file.string() + ": " + e.what());
  }
}

struct Colored {
  std::string strategy;
  Coloring coloring;
  std::string note;
};

Colored color_with(const Graph& g, const std::string& strategy) {
  if (!is_admissible(g))
    throw CliError(kInadmissible, "graph has a component with fewer than 3 vertices");
  auto mismatch = [&] { return CliError(kInadmissible, "graph is not a " + strategy); };

  if (strategy == "path" || strategy == "auto") {
    if (auto placement = detect_path(g)) {
      const Vertex n = g.vertex_count();
      return {"path", transport(path_graph(n), color_path(n).coloring, g, *placement), ""};
    }
    if (strategy == "path") throw mismatch();
  }
  if (strategy == "cycle" || strategy == "auto") {
    if (auto placement = detect_cycle(g)) {
      const Vertex n = g.vertex_count();
      std::optional<CycleSeedColoring> base = seed_from_env();
      Coloring c = color_cycle(n, base ? &*base : nullptr);
      std::string note;
      if (n == 3) note = "chi_union(C_3) = 3, so this coloring is optimal";
      if (n == 7) note = "chi_union(C_7) = 4, so this coloring is optimal";
      return {"cycle", transport(cycle_graph(n), c, g, *placement), note};
    }
    if (strategy == "cycle") throw mismatch();
  }
  if (strategy == "cbt" || strategy == "auto") {
    if (auto found = detect_cbt(g)) {
      const auto& [h, placement] = *found;
      return {"cbt", transport(complete_binary_tree(h), color_cbt(h).coloring, g, placement), ""};
    }
    if (strategy == "cbt") throw mismatch();
  }
  return {"general", color_general(g).coloring, ""};
}

void write_colored(std::ostream& os, const Graph& g, const Coloring& c, const std::string& format) {
  if (format == "json")
    write_json(os, g, c);
  else
    write_coloring_text(os, g, c);
}

int cmd_generate(const std::string& family, const std::vector<std::string>& params,
                 std::uint64_t seed, const std::string& format, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  const Graph g = generate_family(family, params, seed);
  emit(out_path, out, [&](std::ostream& os) {
    if (format == "json")
      write_json(os, g, std::nullopt);
    else
      write_graph_text(os, g);
  });
  std::ostream& log = out_path.empty() ? err : out;
  log << "n=" << g.vertex_count() << " m=" << g.edge_count()
      << " lower_bound=" << palette_lower_bound(g.vertex_count())
      << " admissible=" << (is_admissible(g) ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_color(const std::string& graph_path, const std::string& strategy,
              const std::string& format, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  const Graph g = load_graph(graph_path).graph;
  Colored result = color_with(g, strategy);
  const VerifyReport report = verify(g, result.coloring);
  if (!report.valid) {
    err << "internal error: " << result.strategy
        << " coloring failed verification, nothing written\n";
    return kInvalid;
  }
  emit(out_path, out, [&](std::ostream& os) { write_colored(os, g, result.coloring, format); });

  std::ostream& log = out_path.empty() ? err : out;
  const int k = result.coloring.k;
  const int lb = lower_bound(g);
  log << "strategy: " << result.strategy << '\n';
  if (k == lb)
    log << "optimal (" << k << " colors)\n";
  else
    log << "+" << (k - lb) << " over lower bound (" << k << " colors, lower bound " << lb << ")\n";
  if (!result.note.empty()) log << "note: " << result.note << '\n';
  return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, bool show_codes,
               std::ostream& out) {
  const ColoredGraph cg = load_colored(graph_path, coloring_path);
  VerifyReport report;
  try {
    report = verify(cg.graph, cg.coloring);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (show_codes)
    for (Vertex v = 0; v < cg.graph.vertex_count(); ++v)
      out << v << ' ' << report.codes[v].to_string() << '\n';
  if (report.valid) {
    ColorSet used;
    for (ColorSet s : cg.coloring.sets) used |= s;
    out << "VALID, " << used.size() << " colors used\n";
    return kOk;
  }
  out << "INVALID\n";
  if (report.empty_edge) {
    const Edge& e = cg.graph.edge(*report.empty_edge);
    out << "empty edge: " << e.u << ' ' << e.v << '\n';
  }
  if (report.clash) {
    const auto [u, v] = *report.clash;
    out << "clash: vertices " << u << " and " << v << ", code " << report.codes[u].to_string()
        << '\n';
  }
  return kInvalid;
}

int cmd_chi(const std::string& graph_path, std::optional<std::uint64_t> budget, int jobs,
            const std::string& out_path, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(graph_path).graph;
  if (!is_admissible(g))
    throw CliError(kInadmissible, "graph has a component with fewer than 3 vertices");
  const ChiResult r = chi_union(g, budget, jobs);
  if (!out_path.empty())
    emit(out_path, out, [&](std::ostream& os) { write_coloring_text(os, g, r.witness); });
  if (r.proved()) {
    out << "chi_union = " << r.upper << " (proved)\n";
    return kOk;
  }
  out << "chi_union in [" << r.lower << ',' << r.upper << "] (budget exceeded)\n";
  if (r.lower > kMaxSolverColors)
    err << "note: the exact solver handles at most " << kMaxSolverColors << " colors\n";
  return kBudget;
}

int cmd_bound(const std::string& graph_path, std::ostream& out) {
  const Graph g = load_graph(graph_path).graph;
  if (!is_admissible(g))
    throw CliError(kInadmissible, "graph has a component with fewer than 3 vertices");
  const int lb = lower_bound(g);
  const GeneralColoring general = color_general(g);
  out << "n=" << g.vertex_count() << " m=" << g.edge_count() << '\n'
      << "lower_bound = " << lb << '\n'
      << "general_palette = " << general.coloring.k << '\n'
      << "upper_bound = " << lb + 2 << '\n';
  return kOk;
}

int cmd_export(const std::string& graph_path, const std::string& coloring_path,
               const std::string& format, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  const ColoredGraph cg = load_colored(graph_path, coloring_path);
  try {
    verify(cg.graph, cg.coloring);  // rejects colorings that do not fit the graph
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  emit(out_path, out, [&](std::ostream& os) {
    if (format == "dot")
      write_dot(os, cg.graph, cg.coloring);
    else
      write_json(os, cg.graph, cg.coloring);
  });
  if (!out_path.empty()) err << "wrote " << out_path << '\n';
  return kOk;
}

int cmd_witness(const std::string& graph_path, int k, bool seed, std::optional<std::uint64_t> budget,
                int jobs, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(graph_path).graph;
  if (!is_admissible(g))
    throw CliError(kInadmissible, "graph has a component with fewer than 3 vertices");
  if (k < 1 || k > kMaxSolverColors)
    throw CliError(kIoError, "k must be in 1.." + std::to_string(kMaxSolverColors));
  std::ostream& log = out_path.empty() ? err : out;

  std::optional<Coloring> witness;
  if (seed) {
    if (!(g == cycle_graph(g.vertex_count())))
      throw CliError(kInadmissible, "--seed needs the canonical cycle 0-1-...-(n-1)-0");
    if (auto s = find_seed_coloring(g.vertex_count(), k)) witness = to_coloring(*s);
  } else {
    const SearchResult res = exists_coloring(g, SearchConfig{k, budget, true, jobs});
    log << "nodes: " << res.nodes << '\n';
    if (res.status == SearchStatus::kBudgetExceeded) {
      log << "undecided: budget exceeded\n";
      return kBudget;
    }
    witness = res.witness;
  }
  if (!witness) {
    log << "no distinguishing " << k << "-coloring exists\n";
    return kInvalid;
  }
  emit(out_path, out, [&](std::ostream& os) { write_coloring_text(os, g, *witness); });
  log << "found a " << k << "-coloring\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Union vertex-distinguishing edge colorings", "uvd"};
  app.require_subcommand(1);

  std::string family, graph_path, coloring_path, out_path, strategy = "auto", format;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  int jobs = 1, k = 0;
  bool show_codes = false, want_seed = false;

  auto* gen = app.add_subcommand("generate", "Write a graph from a family");
  gen->add_option("family", family, "path, cycle, cbt, star, complete or random")->required();
  gen->add_option("params", params, "n | h | branch lengths | n p");
  gen->add_option("--seed", seed, "Seed for random graphs");
  gen->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  gen->add_option("-o,--out", out_path, "Output file");

  auto* color = app.add_subcommand("color", "Color a graph");
  color->add_option("graph", graph_path)->required();
  color->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"auto", "path", "cycle", "cbt", "general"}));
  color->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  color->add_option("-o,--out", out_path, "Output file");

  auto* ver = app.add_subcommand("verify", "Check a coloring");
  ver->add_option("graph", graph_path)->required();
  ver->add_option("coloring", coloring_path, "Omit when the graph file is JSON with colors");
  ver->add_flag("--codes", show_codes, "Print every vertex code");

  auto* chi = app.add_subcommand("chi", "Compute chi_union exactly");
  chi->add_option("graph", graph_path)->required();
  chi->add_option("--budget", budget, "Node limit per palette size");
  chi->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  chi->add_option("-o,--out", out_path, "Write the witness coloring");

  auto* bound = app.add_subcommand("bound", "Print palette bounds");
  bound->add_option("graph", graph_path)->required();

  auto* exp = app.add_subcommand("export", "Render a colored graph");
  exp->add_option("graph", graph_path)->required();
  exp->add_option("coloring", coloring_path);
  exp->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("-o,--out", out_path, "Output file");

  auto* wit = app.add_subcommand("witness", "Search for a k-coloring");
  wit->add_option("graph", graph_path)->required();
  wit->add_option("-k", k, "Palette size")->required();
  wit->add_flag("--seed", want_seed, "Cycle seed: code(u1) = {1} and 1 on (u2, u3)");
  wit->add_option("--budget", budget, "Node limit");
  wit->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  wit->add_option("-o,--out", out_path, "Output file");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kIoError;
  }

  try {
    if (*gen) return cmd_generate(family, params, seed, format, out_path, out, err);
    if (*color) return cmd_color(graph_path, strategy, format, out_path, out, err);
    if (*ver) return cmd_verify(graph_path, coloring_path, show_codes, out);
    if (*chi) return cmd_chi(graph_path, budget, jobs, out_path, out, err);
    if (*bound) return cmd_bound(graph_path, out);
    if (*exp)
      return cmd_export(graph_path, coloring_path, format.empty() ? "dot" : format, out_path, out,
                        err);
    if (*wit) return cmd_witness(graph_path, k, want_seed, budget, jobs, out_path, out, err);
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const InadmissibleGraph& e) {
    err << "error: " << e.what() << '\n';
    return kInadmissible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kIoError;
}

}  // namespace uvd::cli

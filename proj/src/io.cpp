#include "uvd/io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace uvd {
namespace {

std::uint64_t read_count(std::istream& in, const char* what) {
  long long value = -1;
  if (!(in >> value) || value < 0)
    throw ParseError(std::string("expected a non-negative integer for ") + what);
  return static_cast<std::uint64_t>(value);
}

Vertex to_vertex(std::uint64_t value) {
  if (value > std::numeric_limits<Vertex>::max()) throw ParseError("vertex index too large");
  return static_cast<Vertex>(value);
}

Graph make_graph(std::uint64_t n, std::vector<Edge> edges) {
  const std::size_t given = edges.size();
  try {
    Graph g(to_vertex(n), std::move(edges));
    if (g.edge_count() != given) throw ParseError("duplicate edge in graph input");
    return g;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

ColorSet to_color_set(const std::vector<long long>& colors, std::size_t line) {
  ColorSet s;
  for (long long c : colors) {
    if (c < 1 || c > kMaxColors)
      throw ParseError("color " + std::to_string(c) + " out of range 1..64 (entry " +
                       std::to_string(line) + ")");
    s = s.with(static_cast<int>(c));
  }
  return s;
}

}  // namespace

Graph read_graph_text(std::istream& in) {
  const std::uint64_t n = read_count(in, "vertex count");
  const std::uint64_t m = read_count(in, "edge count");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    Vertex u = to_vertex(read_count(in, "edge endpoint"));
    Vertex v = to_vertex(read_count(in, "edge endpoint"));
    edges.push_back({u, v});
  }
  std::string rest;
  if (in >> rest) throw ParseError("unexpected trailing data in graph input: " + rest);
  return make_graph(n, std::move(edges));
}

void write_graph_text(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Coloring read_coloring_text(std::istream& in, const Graph& g) {
  Coloring c{0, std::vector<ColorSet>(g.edge_count())};
  std::vector<bool> seen(g.edge_count(), false);
  std::size_t count = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v : colors'");
    std::istringstream head(line.substr(0, colon));
    std::istringstream tail(line.substr(colon + 1));
    long long u = -1, v = -1;
    std::string extra;
    if (!(head >> u >> v) || u < 0 || v < 0 || (head >> extra))
      throw ParseError("line " + std::to_string(lineno) + ": bad edge endpoints");
    std::vector<long long> colors;
    long long col = 0;
    while (tail >> col) colors.push_back(col);
    if (!tail.eof()) throw ParseError("line " + std::to_string(lineno) + ": bad color list");
    auto e = g.find_edge(to_vertex(static_cast<std::uint64_t>(u)),
                         to_vertex(static_cast<std::uint64_t>(v)));
    if (!e)
      throw ParseError("line " + std::to_string(lineno) + ": (" + std::to_string(u) + "," +
                       std::to_string(v) + ") is not an edge of the graph");
    if (seen[*e]) throw ParseError("line " + std::to_string(lineno) + ": edge colored twice");
    seen[*e] = true;
    c.sets[*e] = to_color_set(colors, lineno);
    ++count;
  }
  if (count != g.edge_count())
    throw ParseError("coloring lists " + std::to_string(count) + " edges, graph has " +
                     std::to_string(g.edge_count()));
  c.k = c.max_color();
  return c;
}

void write_coloring_text(std::ostream& out, const Graph& g, const Coloring& c) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << g.edge(e).u << ' ' << g.edge(e).v << " :";
    for (int col : c.sets[e].colors()) out << ' ' << col;
    out << '\n';
  }
}

JsonDocument read_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("n").get<std::uint64_t>();
    const auto& pairs = doc.at("edges");
    std::vector<Edge> edges;
    for (const auto& p : pairs) {
      if (!p.is_array() || p.size() != 2) throw ParseError("each edge must be a pair");
      edges.push_back({to_vertex(p[0].get<std::uint64_t>()), to_vertex(p[1].get<std::uint64_t>())});
    }
    const std::vector<Edge> listed = edges;
    JsonDocument out{make_graph(n, std::move(edges)), std::nullopt};
    if (!doc.contains("colors")) return out;

    const auto& colors = doc.at("colors");
    if (!colors.is_array() || colors.size() != listed.size())
      throw ParseError("\"colors\" must have one entry per edge");
    Coloring c{doc.at("k").get<int>(), std::vector<ColorSet>(listed.size())};
    for (std::size_t i = 0; i < listed.size(); ++i) {
      EdgeId e = *out.graph.find_edge(listed[i].u, listed[i].v);
      c.sets[e] = to_color_set(colors[i].get<std::vector<long long>>(), i);
    }
    if (c.k < 0 || c.k > kMaxColors || c.max_color() > c.k)
      throw ParseError("\"k\" must cover every color used and lie in 0..64");
    out.coloring = std::move(c);
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
}

void write_json(std::ostream& out, const Graph& g, const std::optional<Coloring>& c) {
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  if (c) {
    doc["k"] = c->k;
    auto colors = nlohmann::json::array();
    for (ColorSet s : c->sets) colors.push_back(s.colors());
    doc["colors"] = std::move(colors);
  }
  out << doc.dump() << '\n';
}

void write_dot(std::ostream& out, const Graph& g, const Coloring& c) {
  const auto ids = codes(g, c);
  out << "graph G {\n";
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    out << "  " << u << " [label=\"id=" << ids[u].to_string() << "\"];\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v << " [label=\"" << c.sets[e].to_string()
        << "\"];\n";
  out << "}\n";
}

}  // namespace uvd

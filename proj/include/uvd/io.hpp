#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "uvd/coloring.hpp"
#include "uvd/graph.hpp"

namespace uvd {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph text format: a header line "n m", then m lines "u v" (0-based).
Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);

// Coloring text format: one line "u v : c1 c2 ..." per edge, colors 1-based.
// Lines are matched to graph edges by endpoints; every edge must appear
// exactly once. The palette of the result is the largest color read.
Coloring read_coloring_text(std::istream& in, const Graph& g);
void write_coloring_text(std::ostream& out, const Graph& g, const Coloring& c);

/// JSON document {"n", "edges", "k", "colors"}; "k" and "colors" are absent
/// when the document describes a bare graph.
struct JsonDocument {
  Graph graph;
  std::optional<Coloring> coloring;
};

JsonDocument read_json(std::istream& in);
void write_json(std::ostream& out, const Graph& g, const std::optional<Coloring>& c);

/// Graphviz rendering: edges labelled with their color set, vertices with
/// their code ("id={...}").
void write_dot(std::ostream& out, const Graph& g, const Coloring& c);

}  // namespace uvd

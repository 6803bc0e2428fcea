#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "uvd/color_set.hpp"
#include "uvd/graph.hpp"

namespace uvd {

/// Edge coloring with palette {1, ..., k}. sets[e] labels graph edge e.
struct Coloring {
  int k = 0;
  std::vector<ColorSet> sets;

  /// Largest color appearing on any edge.
  int max_color() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Graph together with a coloring of its edges.
struct ColoredGraph {
  Graph graph;
  Coloring coloring;
};

struct VerifyReport {
  bool valid = false;
  /// Lexicographically smallest pair (u, v), u < v, with equal codes.
  std::optional<std::pair<Vertex, Vertex>> clash;
  /// Smallest edge id carrying the empty set.
  std::optional<EdgeId> empty_edge;
  std::vector<ColorSet> codes;
};

/// Union of the sets on edges incident to u; empty for an isolated vertex.
ColorSet code(const Graph& g, const Coloring& c, Vertex u);

/// code() for every vertex.
std::vector<ColorSet> codes(const Graph& g, const Coloring& c);

/// Checks that every edge set is non-empty and all vertex codes are pairwise
/// distinct. Throws std::invalid_argument when `c` does not match `g` edge
/// for edge or uses a color above c.k.
VerifyReport verify(const Graph& g, const Coloring& c);

/// verify(g, c).valid
bool is_distinguishing(const Graph& g, const Coloring& c);

/// Carries `c`, defined on `canonical`, onto `g` through the vertex map
/// placement[i] = vertex of g playing the role of canonical vertex i.
/// Throws std::invalid_argument if some edge has no image in g or the edge
/// counts differ.
Coloring transport(const Graph& canonical, const Coloring& c, const Graph& g,
                   const std::vector<Vertex>& placement);

}  // namespace uvd

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "uvd/coloring.hpp"

namespace uvd {

// General upper bound pipeline: every admissible graph is colored with at
// most ceil(log2(n+1)) + 2 colors by
//   1. extracting a spanning forest of 1-stars (decompose_1stars),
//   2. coloring each 1-star optimally (color_1star),
//   3. merging the colored stars with at most one extra color
//      (combine_disjoint), and
//   4. giving every remaining edge a fresh singleton (lift_to_supergraph).

/// Branch of a 1-star: center - inner, or center - inner - outer.
struct Branch {
  Vertex inner = 0;
  std::optional<Vertex> outer;

  friend bool operator==(const Branch&, const Branch&) = default;
};

/// A star with at least two branches, each subdivided at most once.
struct OneStar {
  Vertex center = 0;
  std::vector<Branch> branches;

  std::size_t vertex_count() const;

  /// Vertices in local order: center, inner vertices of long branches,
  /// their outer vertices (same order), then inner vertices of short
  /// branches. Matches one_star_graph().
  std::vector<Vertex> local_order() const;

  /// The star on vertices 0..vertex_count()-1 numbered by local_order().
  Graph local_graph() const;

  friend bool operator==(const OneStar&, const OneStar&) = default;
};

/// Stars whose vertex sets partition the host's vertices and whose edges are
/// host edges.
struct StarForest {
  std::vector<OneStar> stars;
};

/// Throws std::invalid_argument naming the first violated property: a star
/// with fewer than two branches, a vertex in two stars or in none, or a
/// star edge missing from `host`.
void check_star_forest(const Graph& host, const StarForest& forest);

/// Edge-subgraph of `host` made of the star edges.
Graph forest_subgraph(const Graph& host, const StarForest& forest);

/// Spanning 1-star forest of an admissible graph, built per component from a
/// depth-first spanning tree by a bottom-up pass. Throws InadmissibleGraph.
StarForest decompose_1stars(const Graph& g);

/// Optimal coloring of s.local_graph(): palette k = ceil(log2(n+1)), the
/// center's code is {1..k} and every edge gets a different proper subset of
/// {1..k}. Throws std::invalid_argument for a malformed star.
Coloring color_1star(const OneStar& s);

/// Number of k with 2^k <= n < 2^(k+1); an optimal coloring of such a graph
/// uses k+1 colors.
int kgraph_tag(Vertex n);

/// Disjoint union of two graphs with equal tags, each optimally colored with
/// c colors, colored optimally with c+1 colors: `b` keeps its labels plus the
/// color c+1. Vertices of `b` follow those of `a`. Throws
/// std::invalid_argument on a tag mismatch or a non-optimal input palette.
ColoredGraph merge_two_kgraphs(const ColoredGraph& a, const ColoredGraph& b);

/// One optimally colored piece of a disjoint union. vertices[i] is the index
/// in the union of local vertex i.
struct ColoredPart {
  std::vector<Vertex> vertices;
  Graph graph;
  Coloring coloring;
};

/// Colors the disjoint union of optimally colored parts with at most
/// ceil(log2(n+1)) + 1 colors. The parts' vertex lists must partition
/// 0..n-1, n being the total size. Throws std::invalid_argument on overlap,
/// a gap, or a part that is not optimally colored.
ColoredGraph combine_disjoint(std::span<const ColoredPart> parts);

/// Extends a distinguishing coloring of the edge-subgraph `h` to `g`; every
/// edge of g outside h gets {c.k + 1}. Codes restricted to {1..c.k} are
/// unchanged. Throws std::invalid_argument when h is not an edge-subgraph of
/// g or c does not distinguish h.
Coloring lift_to_supergraph(const Graph& g, const Graph& h, const Coloring& c);

/// Result of the general pipeline, with its intermediate stages.
struct GeneralColoring {
  Coloring coloring;
  StarForest forest;
  /// Palette of the star-forest coloring before the lift.
  int forest_palette = 0;
};

/// Colors any admissible graph with at most lower_bound(g) + 2 colors.
/// Throws InadmissibleGraph.
GeneralColoring color_general(const Graph& g);

}  // namespace uvd

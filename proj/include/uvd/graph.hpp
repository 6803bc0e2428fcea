#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace uvd {

using Vertex = std::uint32_t;
using EdgeId = std::size_t;

/// Unordered vertex pair. Graph stores every edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown when an operation needs every component to have at least 3 vertices.
class InadmissibleGraph : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Edges are canonical (u < v), sorted and free of duplicates, so two graphs
/// built from the same edge set in any order compare equal and index their
/// edges identically. Incidence lists are stored in CSR form and list edge
/// ids in increasing order.
class Graph {
 public:
  Graph() = default;

  /// Canonicalizes `edges`. Throws std::invalid_argument on a loop or an
  /// endpoint >= n.
  Graph(Vertex n, std::vector<Edge> edges);

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const EdgeId> incident(Vertex u) const {
    return {incidence_.data() + offsets_[u], incidence_.data() + offsets_[u + 1]};
  }
  std::size_t degree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }

  /// Endpoint of `e` that is not `u`.
  Vertex opposite(EdgeId e, Vertex u) const {
    return edges_[e].u == u ? edges_[e].v : edges_[e].u;
  }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeId> incidence_;
};

/// Connected components, each sorted, listed by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// True iff every connected component has at least 3 vertices.
bool is_admissible(const Graph& g);

/// Smallest k with 2^k - 1 >= n, i.e. ceil(log2(n + 1)).
constexpr int palette_lower_bound(std::uint64_t n) {
  int k = 0;
  while (k < 64 && ((std::uint64_t{1} << k) - 1) < n) ++k;
  return k;
}

/// Pigeonhole lower bound on the palette of any distinguishing coloring.
/// Throws InadmissibleGraph when no distinguishing coloring exists.
int lower_bound(const Graph& g);

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace uvd

#include "uvd/graph.hpp"

#include <algorithm>
#include <string>

namespace uvd {

Graph::Graph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_)
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") has an endpoint outside 0.." + std::to_string(n_) + "-1");
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  offsets_.assign(std::size_t{n_} + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (Vertex u = 0; u < n_; ++u) offsets_[u + 1] += offsets_[u];
  incidence_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    incidence_[fill[edges_[e].u]++] = e;
    incidence_[fill[edges_[e].v]++] = e;
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (EdgeId e : g.incident(u)) {
        Vertex w = g.opposite(e, u);
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_admissible(const Graph& g) {
  for (const auto& comp : components(g))
    if (comp.size() < 3) return false;
  return true;
}

int lower_bound(const Graph& g) {
  if (!is_admissible(g))
    throw InadmissibleGraph("graph has a component with fewer than 3 vertices; no distinguishing coloring exists");
  return palette_lower_bound(g.vertex_count());
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const Vertex shift = a.vertex_count();
  std::vector<Edge> edges = a.edges();
  edges.reserve(a.edge_count() + b.edge_count());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(shift + b.vertex_count(), std::move(edges));
}

}  // namespace uvd

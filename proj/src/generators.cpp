#include "uvd/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace uvd {

Graph path_graph(Vertex n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph complete_graph(Vertex n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph complete_binary_tree(int h) {
  if (h < 0 || h > 25) throw std::invalid_argument("tree height must be in 0..25");
  const Vertex n = (Vertex{1} << (h + 1)) - 1;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v = 1; v < n; ++v) edges.push_back({(v - 1) / 2, v});
  return Graph(n, std::move(edges));
}

Graph one_star_graph(std::span<const int> branch_lengths) {
  if (branch_lengths.size() < 2) throw std::invalid_argument("a 1-star needs at least two branches");
  Vertex mids = 0;
  for (int len : branch_lengths) {
    if (len != 1 && len != 2) throw std::invalid_argument("1-star branch lengths must be 1 or 2");
    if (len == 2) ++mids;
  }
  const Vertex leaves = static_cast<Vertex>(branch_lengths.size()) - mids;
  const Vertex n = 1 + 2 * mids + leaves;
  std::vector<Edge> edges;
  Vertex x = 1, z = 1 + 2 * mids;
  for (int len : branch_lengths) {
    if (len == 2) {
      edges.push_back({0, x});
      edges.push_back({x, x + mids});
      ++x;
    } else {
      edges.push_back({0, z++});
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_admissible_graph(Vertex n, double p, std::uint64_t seed, int max_attempts) {
  if (n < 3) throw std::invalid_argument("random admissible graph needs n >= 3");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in (0, 1]");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.push_back({u, v});
    Graph g(n, std::move(edges));
    if (is_admissible(g)) return g;
  }
  throw std::runtime_error("no admissible G(" + std::to_string(n) + ", " + std::to_string(p) +
                           ") sample after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace uvd

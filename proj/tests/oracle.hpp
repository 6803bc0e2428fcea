#pragma once

// Reference implementations used only by the tests. They work on raw edge
// lists and plain bit masks so they do not share code paths with the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "uvd/graph.hpp"

namespace oracle {

using Mask = std::uint64_t;

struct RawEdge {
  unsigned u, v;
};

inline std::vector<RawEdge> raw_edges(const uvd::Graph& g) {
  std::vector<RawEdge> out;
  for (const uvd::Edge& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

/// Code of every vertex by scanning all edges for each vertex.
inline std::vector<Mask> codes(unsigned n, const std::vector<RawEdge>& edges,
                               const std::vector<Mask>& labels) {
  std::vector<Mask> id(n, 0);
  for (unsigned v = 0; v < n; ++v)
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].u == v || edges[i].v == v) id[v] |= labels[i];
  return id;
}

/// Pairwise comparison of all codes, O(n^2).
inline bool distinguishing(unsigned n, const std::vector<RawEdge>& edges,
                           const std::vector<Mask>& labels) {
  for (Mask s : labels)
    if (s == 0) return false;
  const std::vector<Mask> id = codes(n, edges, labels);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      if (id[a] == id[b]) return false;
  return true;
}

/// Enumerates every labelling with non-empty subsets of {1..k}: (2^k-1)^m
/// candidates, so only for tiny instances.
inline bool exists_brute(unsigned n, const std::vector<RawEdge>& edges, int k) {
  const Mask top = (Mask{1} << k) - 1;
  std::vector<Mask> labels(edges.size(), 1);
  if (edges.empty()) return distinguishing(n, edges, labels);
  while (true) {
    if (distinguishing(n, edges, labels)) return true;
    std::size_t i = 0;
    while (i < labels.size() && labels[i] == top) labels[i++] = 1;
    if (i == labels.size()) return false;
    ++labels[i];
  }
}

inline int chi_brute(unsigned n, const std::vector<RawEdge>& edges) {
  for (int k = 1;; ++k)
    if (exists_brute(n, edges, k)) return k;
}

/// ceil(log2(n + 1)) by repeated doubling.
inline int log_bound(std::uint64_t n) {
  int k = 0;
  while ((std::uint64_t{1} << k) < n + 1) ++k;
  return k;
}

/// Sparse admissible graph: random trees of 3..max_part vertices on a
/// shuffled vertex set, plus `extra` random chords.
inline uvd::Graph sparse_admissible(unsigned n, unsigned extra, unsigned max_part,
                                    std::mt19937_64& rng) {
  std::vector<unsigned> perm(n);
  for (unsigned i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<uvd::Edge> edges;
  unsigned start = 0;
  while (start < n) {
    unsigned size = std::uniform_int_distribution<unsigned>(3, std::max(3u, max_part))(rng);
    const unsigned rest = n - start;
    if (size >= rest || rest - size < 3) size = rest;
    for (unsigned i = 1; i < size; ++i) {
      const unsigned parent = std::uniform_int_distribution<unsigned>(0, i - 1)(rng);
      edges.push_back({perm[start + parent], perm[start + i]});
    }
    start += size;
  }
  std::uniform_int_distribution<unsigned> pick(0, n - 1);
  for (unsigned i = 0; i < extra; ++i) {
    const unsigned a = pick(rng), b = pick(rng);
    if (a != b) edges.push_back({a, b});
  }
  return uvd::Graph(n, edges);  // drops repeated chords
}

}  // namespace oracle

#include <algorithm>
#include <numeric>
#include <string>

#include "uvd/coloring.hpp"

namespace uvd {

int Coloring::max_color() const {
  int m = 0;
  for (ColorSet s : sets) m = std::max(m, s.max_color());
  return m;
}

ColorSet code(const Graph& g, const Coloring& c, Vertex u) {
  ColorSet id;
  for (EdgeId e : g.incident(u)) id |= c.sets[e];
  return id;
}

std::vector<ColorSet> codes(const Graph& g, const Coloring& c) {
  std::vector<ColorSet> out(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) out[u] = code(g, c, u);
  return out;
}

VerifyReport verify(const Graph& g, const Coloring& c) {
  if (c.sets.size() != g.edge_count())
    throw std::invalid_argument("coloring has " + std::to_string(c.sets.size()) +
                                " edge sets but the graph has " + std::to_string(g.edge_count()) +
                                " edges");
  if (c.k < 0 || c.k > kMaxColors)
    throw std::invalid_argument("palette size out of range: " + std::to_string(c.k));
  VerifyReport report;
  for (EdgeId e = 0; e < c.sets.size(); ++e) {
    if (c.sets[e].max_color() > c.k)
      throw std::invalid_argument("edge " + std::to_string(e) + " uses color " +
                                  std::to_string(c.sets[e].max_color()) + " above palette " +
                                  std::to_string(c.k));
    if (c.sets[e].empty() && !report.empty_edge) report.empty_edge = e;
  }
  report.codes = codes(g, c);

  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return report.codes[a] != report.codes[b] ? report.codes[a] < report.codes[b] : a < b;
  });
  // Within a run of equal codes the first two entries form the smallest pair
  // of that run; the overall first clash is the smallest such pair.
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (report.codes[order[i]] != report.codes[order[i + 1]]) continue;
    std::pair<Vertex, Vertex> pair{order[i], order[i + 1]};
    if (!report.clash || pair < *report.clash) report.clash = pair;
    while (i + 1 < order.size() && report.codes[order[i]] == report.codes[order[i + 1]]) ++i;
  }
  report.valid = !report.clash && !report.empty_edge;
  return report;
}

bool is_distinguishing(const Graph& g, const Coloring& c) { return verify(g, c).valid; }

Coloring transport(const Graph& canonical, const Coloring& c, const Graph& g,
                   const std::vector<Vertex>& placement) {
  if (canonical.edge_count() != g.edge_count() || placement.size() != canonical.vertex_count())
    throw std::invalid_argument("vertex map does not match the graphs");
  Coloring out{c.k, std::vector<ColorSet>(g.edge_count())};
  std::vector<bool> hit(g.edge_count(), false);
  for (EdgeId e = 0; e < canonical.edge_count(); ++e) {
    const Edge& ce = canonical.edge(e);
    auto image = g.find_edge(placement[ce.u], placement[ce.v]);
    if (!image || hit[*image])
      throw std::invalid_argument("vertex map is not an isomorphism onto the target graph");
    hit[*image] = true;
    out.sets[*image] = c.sets[e];
  }
  return out;
}

}  // namespace uvd

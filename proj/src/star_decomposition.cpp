#include "uvd/star_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "uvd/constructions.hpp"

namespace uvd {

std::size_t OneStar::vertex_count() const {
  std::size_t n = 1;
  for (const Branch& b : branches) n += b.outer ? 2 : 1;
  return n;
}

std::vector<Vertex> OneStar::local_order() const {
  std::vector<Vertex> order{center};
  for (const Branch& b : branches)
    if (b.outer) order.push_back(b.inner);
  for (const Branch& b : branches)
    if (b.outer) order.push_back(*b.outer);
  for (const Branch& b : branches)
    if (!b.outer) order.push_back(b.inner);
  return order;
}

Graph OneStar::local_graph() const {
  Vertex longs = 0;
  for (const Branch& b : branches)
    if (b.outer) ++longs;
  const auto n = static_cast<Vertex>(vertex_count());
  std::vector<Edge> edges;
  for (Vertex i = 0; i < longs; ++i) {
    edges.push_back({0, 1 + i});
    edges.push_back({1 + i, 1 + longs + i});
  }
  for (Vertex z = 1 + 2 * longs; z < n; ++z) edges.push_back({0, z});
  return Graph(n, std::move(edges));
}

void check_star_forest(const Graph& host, const StarForest& forest) {
  const Vertex n = host.vertex_count();
  std::vector<bool> seen(n, false);
  auto claim = [&](Vertex v) {
    if (v >= n) throw std::invalid_argument("star vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " lies in two stars");
    seen[v] = true;
  };
  auto need_edge = [&](Vertex u, Vertex v) {
    if (!host.find_edge(u, v))
      throw std::invalid_argument("star edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") is not a host edge");
  };
  for (const OneStar& s : forest.stars) {
    if (s.branches.size() < 2)
      throw std::invalid_argument("star centered at " + std::to_string(s.center) +
                                  " has fewer than two branches");
    claim(s.center);
    for (const Branch& b : s.branches) {
      claim(b.inner);
      need_edge(s.center, b.inner);
      if (b.outer) {
        claim(*b.outer);
        need_edge(b.inner, *b.outer);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " is in no star");
}

Graph forest_subgraph(const Graph& host, const StarForest& forest) {
  std::vector<Edge> edges;
  for (const OneStar& s : forest.stars)
    for (const Branch& b : s.branches) {
      edges.push_back({s.center, b.inner});
      if (b.outer) edges.push_back({b.inner, *b.outer});
    }
  return Graph(host.vertex_count(), std::move(edges));
}

namespace {

constexpr Vertex kNone = static_cast<Vertex>(-1);

// Bottom-up pass over a DFS tree. Each finished vertex is
//   kFree    - uncovered, offered to its parent as a one-edge branch,
//   kPair    - uncovered with one uncovered child, offered as a two-edge
//              branch,
//   kCovered - inside a star.
// The root may be left kFree or kPair; it is then grafted onto a star of a
// neighboring subtree.
enum class Role { kFree, kPair, kCovered };

class TreeDecomposer {
 public:
  TreeDecomposer(const Graph& g, StarForest& forest)
      : g_(g),
        forest_(forest),
        parent_(g.vertex_count(), kNone),
        role_(g.vertex_count(), Role::kFree),
        pair_child_(g.vertex_count(), kNone),
        star_of_(g.vertex_count(), kNone),
        children_(g.vertex_count()),
        visited_(g.vertex_count(), false) {}

  void run(Vertex root) {
    std::vector<Vertex> preorder = dfs_tree(root);
    for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) settle(*it);
    if (role_[root] != Role::kCovered) graft_root(root);
  }

 private:
  std::vector<Vertex> dfs_tree(Vertex root) {
    std::vector<Vertex> preorder;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    visited_[root] = true;
    preorder.push_back(root);
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      auto inc = g_.incident(u);
      if (next == inc.size()) {
        stack.pop_back();
        continue;
      }
      const Vertex w = g_.opposite(inc[next++], u);
      if (visited_[w]) continue;
      visited_[w] = true;
      parent_[w] = u;
      children_[u].push_back(w);
      preorder.push_back(w);
      stack.push_back({w, 0});
    }
    return preorder;
  }

  std::size_t open_star(OneStar s) {
    const std::size_t id = forest_.stars.size();
    star_of_[s.center] = static_cast<Vertex>(id);
    for (const Branch& b : s.branches) {
      star_of_[b.inner] = static_cast<Vertex>(id);
      if (b.outer) star_of_[*b.outer] = static_cast<Vertex>(id);
    }
    forest_.stars.push_back(std::move(s));
    return id;
  }

  void settle(Vertex v) {
    std::vector<Branch> offers;
    for (Vertex c : children_[v]) {
      if (role_[c] == Role::kFree) offers.push_back({c, std::nullopt});
      if (role_[c] == Role::kPair) offers.push_back({c, pair_child_[c]});
    }
    for (const Branch& b : offers) {
      role_[b.inner] = Role::kCovered;
      if (b.outer) role_[*b.outer] = Role::kCovered;
    }
    if (offers.size() >= 2) {
      open_star({v, std::move(offers)});
      role_[v] = Role::kCovered;
    } else if (offers.size() == 1 && !offers[0].outer) {
      role_[offers[0].inner] = Role::kFree;
      role_[v] = Role::kPair;
      pair_child_[v] = offers[0].inner;
    } else if (offers.size() == 1) {
      // v - x - y becomes a path on three vertices centered at x.
      const Vertex x = offers[0].inner, y = *offers[0].outer;
      open_star({x, {{y, std::nullopt}, {v, std::nullopt}}});
      role_[v] = Role::kCovered;
    } else {
      role_[v] = Role::kFree;
    }
  }

  // Covered neighbor of the root's leftover piece, preferring a star center.
  Vertex pick_anchor(const std::vector<Vertex>& candidates) const {
    Vertex best = kNone;
    for (Vertex c : candidates) {
      if (role_[c] != Role::kCovered) continue;
      if (forest_.stars[star_of_[c]].center == c) return c;
      if (best == kNone) best = c;
    }
    if (best == kNone) throw std::logic_error("root has no covered neighbor to attach to");
    return best;
  }

  // `anchor` is covered but not a center, so it is a leaf of a three-vertex
  // star x - anchor plus x - y. Re-center that star at `anchor` with branches
  // anchor - x - y and anchor - first - second.
  void recenter(Vertex anchor, Vertex first, Vertex second) {
    OneStar& s = forest_.stars[star_of_[anchor]];
    if (s.branches.size() != 2) throw std::logic_error("unexpected star shape while grafting the root");
    const Vertex x = s.center;
    const Branch other = s.branches[0].inner == anchor ? s.branches[1] : s.branches[0];
    if (other.outer) throw std::logic_error("unexpected star shape while grafting the root");
    s.center = anchor;
    s.branches = {{x, other.inner}, {first, second}};
    star_of_[first] = star_of_[second] = star_of_[anchor];
  }

  void graft_root(Vertex r) {
    if (role_[r] == Role::kFree) {
      const Vertex c = pick_anchor(children_[r]);
      OneStar& s = forest_.stars[star_of_[c]];
      if (s.center == c) {
        s.branches.push_back({r, std::nullopt});
      } else {
        // c is a one-edge branch of its star; extend it through r.
        for (Branch& b : s.branches)
          if (b.inner == c) b.outer = r;
      }
      star_of_[r] = star_of_[c];
    } else {
      // Leftover path r - c with c free.
      const Vertex c = pair_child_[r];
      std::vector<Vertex> others;
      for (Vertex d : children_[r])
        if (d != c) others.push_back(d);
      const bool via_root = !others.empty();
      const Vertex near = via_root ? r : c, far = via_root ? c : r;
      const Vertex anchor = pick_anchor(via_root ? others : children_[c]);
      OneStar& s = forest_.stars[star_of_[anchor]];
      if (s.center == anchor) {
        s.branches.push_back({near, far});
        star_of_[near] = star_of_[far] = star_of_[anchor];
      } else {
        recenter(anchor, near, far);
      }
    }
    role_[r] = Role::kCovered;
  }

  const Graph& g_;
  StarForest& forest_;
  std::vector<Vertex> parent_;
  std::vector<Role> role_;
  std::vector<Vertex> pair_child_;
  std::vector<Vertex> star_of_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<bool> visited_;
};

using Mask = std::uint64_t;

Mask bit_of(int color) { return Mask{1} << (color - 1); }

}  // namespace

StarForest decompose_1stars(const Graph& g) {
  if (!is_admissible(g))
    throw InadmissibleGraph("1-star decomposition needs every component to have >= 3 vertices");
  StarForest forest;
  TreeDecomposer dec(g, forest);
  for (const auto& comp : components(g)) dec.run(comp.front());
  check_star_forest(g, forest);
  return forest;
}

Coloring color_1star(const OneStar& s) {
  if (s.branches.size() < 2) throw std::invalid_argument("a 1-star needs at least two branches");
  {
    auto order = s.local_order();
    std::sort(order.begin(), order.end());
    if (std::adjacent_find(order.begin(), order.end()) != order.end())
      throw std::invalid_argument("1-star vertices must be distinct");
  }
  const Graph local = s.local_graph();
  const auto n = local.vertex_count();
  const int k = palette_lower_bound(n);
  Coloring c{k, std::vector<ColorSet>(local.edge_count())};
  auto put = [&](Vertex a, Vertex b, Mask m) { c.sets[*local.find_edge(a, b)] = ColorSet::from_bits(m); };

  if (n == 3) {
    const auto p3 = path_edge_sets(3);
    c.sets[*local.find_edge(0, 1)] = p3[0];
    c.sets[*local.find_edge(0, 2)] = p3[1];
    return c;
  }
  if (k > 63) throw std::invalid_argument("1-star too large for a 64-color palette");

  Vertex longs = 0;
  for (const Branch& b : s.branches)
    if (b.outer) ++longs;
  const Vertex shorts = static_cast<Vertex>(s.branches.size()) - longs;
  auto x_of = [&](Vertex i) { return 1 + i; };
  auto y_of = [&](Vertex i) { return 1 + longs + i; };
  auto z_of = [&](Vertex j) { return 1 + 2 * longs + j; };

  const Mask full = (Mask{1} << k) - 1;
  const Mask top = bit_of(k);
  std::unordered_set<Mask> used;
  auto take = [&](Mask m) {
    if (!used.insert(m).second) throw std::logic_error("1-star label assigned twice");
    return m;
  };
  // Labels for center - x edges: proper subsets containing k, size >= 2,
  // visited in increasing numeric order.
  Mask next_low = 1;
  auto next_mid = [&]() {
    while (next_low < top - 1 && used.count(top | next_low)) ++next_low;
    if (next_low >= top - 1) throw std::logic_error("ran out of labels containing k");
    return take(top | next_low++);
  };
  Mask next_any = 1;
  auto next_label = [&]() {
    while (next_any < full && used.count(next_any)) ++next_any;
    if (next_any >= full) throw std::logic_error("ran out of proper subsets");
    return take(next_any++);
  };

  std::vector<Mask> mid(longs);
  if (longs == (Vertex{1} << (k - 1)) - 1) {
    // Every x-label containing k is needed; x1, x2 get hand-picked labels.
    const Mask low = (Mask{1} << (k - 2)) - 1;  // {1..k-2}
    mid[0] = take(low | top);
    put(x_of(0), y_of(0), take(top));
    mid[1] = take(top - 1);
    put(x_of(1), y_of(1), take(low));
    for (Vertex i = 2; i < longs; ++i) {
      mid[i] = next_mid();
      put(x_of(i), y_of(i), take(mid[i] & ~top));
    }
  } else {
    Mask cover = 0;
    for (Vertex i = 0; i + 1 < longs; ++i) cover |= mid[i] = next_mid();
    if (longs >= 2) {
      // Last x-label completes the union to {1..k}.
      Mask pick = 0;
      for (Mask low = 1; low < top - 1 && !pick; ++low)
        if (!used.count(top | low) && ((top | low | cover) == full)) pick = top | low;
      if (!pick) throw std::logic_error("no x-label completes the center code");
      mid[longs - 1] = take(pick);
    } else if (longs == 1) {
      mid[0] = next_mid();
    }
    for (Vertex i = 0; i < longs; ++i) put(x_of(i), y_of(i), take(mid[i] & ~top));
    for (Vertex j = 0; j < shorts; ++j) {
      Mask m;
      if (j == 0)
        m = take(top - 1);  // {1..k-1}
      else if (j == 1 && longs == 0)
        m = take(top);  // some label must carry k
      else
        m = next_label();
      put(0, z_of(j), m);
    }
  }
  for (Vertex i = 0; i < longs; ++i) put(0, x_of(i), mid[i]);

  if (code(local, c, 0) != ColorSet::full(k)) throw std::logic_error("1-star center code is not {1..k}");
  return c;
}

int kgraph_tag(Vertex n) {
  if (n == 0) throw std::invalid_argument("empty graph has no k-graph tag");
  return std::bit_width(n) - 1;
}

namespace {

void require_optimal(const Graph& g, const Coloring& c, const char* what) {
  if (c.k != palette_lower_bound(g.vertex_count()))
    throw std::invalid_argument(std::string(what) + " is not optimally colored");
  if (!is_distinguishing(g, c)) throw std::invalid_argument(std::string(what) + " coloring is not distinguishing");
}

// Disjoint union of a and b; every label of b gains `extra`.
ColoredGraph join(const ColoredGraph& a, const ColoredGraph& b, int extra, int palette) {
  ColoredGraph out{disjoint_union(a.graph, b.graph), {palette, a.coloring.sets}};
  out.coloring.sets.reserve(out.graph.edge_count());
  for (ColorSet s : b.coloring.sets) out.coloring.sets.push_back(s.with(extra));
  return out;
}

}  // namespace

ColoredGraph merge_two_kgraphs(const ColoredGraph& a, const ColoredGraph& b) {
  if (kgraph_tag(a.graph.vertex_count()) != kgraph_tag(b.graph.vertex_count()))
    throw std::invalid_argument("merge needs two graphs with the same k-graph tag");
  require_optimal(a.graph, a.coloring, "first graph");
  require_optimal(b.graph, b.coloring, "second graph");
  const int c = a.coloring.k;
  return join(a, b, c + 1, c + 1);
}

ColoredGraph combine_disjoint(std::span<const ColoredPart> parts) {
  if (parts.empty()) throw std::invalid_argument("nothing to combine");
  std::size_t total = 0;
  for (const ColoredPart& p : parts) {
    if (p.vertices.size() != p.graph.vertex_count())
      throw std::invalid_argument("part vertex list does not match its graph");
    total += p.vertices.size();
  }
  std::vector<bool> seen(total, false);
  for (const ColoredPart& p : parts) {
    for (Vertex v : p.vertices) {
      if (v >= total) throw std::invalid_argument("parts leave a gap in the vertex numbering");
      if (seen[v]) throw std::invalid_argument("parts overlap at vertex " + std::to_string(v));
      seen[v] = true;
    }
    require_optimal(p.graph, p.coloring, "part");
  }

  struct Group {
    std::vector<Vertex> vertices;
    ColoredGraph colored;
    Vertex min_vertex;
  };
  std::vector<Group> groups;
  for (const ColoredPart& p : parts)
    groups.push_back({p.vertices, {p.graph, p.coloring},
                      *std::min_element(p.vertices.begin(), p.vertices.end())});
  auto by_size = [](const Group& a, const Group& b) {
    const auto na = a.vertices.size(), nb = b.vertices.size();
    return na != nb ? na < nb : a.min_vertex < b.min_vertex;
  };
  auto tag = [](const Group& g) { return kgraph_tag(static_cast<Vertex>(g.vertices.size())); };

  // Merge equal tags pairwise (each merge stays optimal) until tags differ.
  std::sort(groups.begin(), groups.end(), by_size);
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < groups.size() && tag(groups[i]) != tag(groups[i + 1])) ++i;
    if (i + 1 >= groups.size()) break;
    Group merged{groups[i].vertices, merge_two_kgraphs(groups[i].colored, groups[i + 1].colored),
                 std::min(groups[i].min_vertex, groups[i + 1].min_vertex)};
    merged.vertices.insert(merged.vertices.end(), groups[i + 1].vertices.begin(),
                           groups[i + 1].vertices.end());
    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(i),
                 groups.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    groups.insert(std::upper_bound(groups.begin(), groups.end(), merged, by_size), std::move(merged));
  }

  // Fold in increasing size: the larger piece gets a color above everything
  // used so far.
  Group acc = std::move(groups.front());
  for (std::size_t i = 1; i < groups.size(); ++i) {
    const int p = groups[i].colored.coloring.k;
    if (acc.colored.coloring.k > p) throw std::logic_error("fold order violates palette growth");
    acc.colored = join(acc.colored, groups[i].colored, p + 1, p + 1);
    acc.vertices.insert(acc.vertices.end(), groups[i].vertices.begin(), groups[i].vertices.end());
  }

  // Renumber into the caller's vertex ids.
  std::vector<Edge> edges;
  edges.reserve(acc.colored.graph.edge_count());
  for (const Edge& e : acc.colored.graph.edges()) edges.push_back({acc.vertices[e.u], acc.vertices[e.v]});
  ColoredGraph out{Graph(static_cast<Vertex>(total), edges), {acc.colored.coloring.k, {}}};
  out.coloring.sets.resize(out.graph.edge_count());
  for (EdgeId e = 0; e < edges.size(); ++e)
    out.coloring.sets[*out.graph.find_edge(edges[e].u, edges[e].v)] = acc.colored.coloring.sets[e];
  return out;
}

Coloring lift_to_supergraph(const Graph& g, const Graph& h, const Coloring& c) {
  if (g.vertex_count() != h.vertex_count())
    throw std::invalid_argument("edge-subgraph must have the same vertex set");
  if (!is_distinguishing(h, c)) throw std::invalid_argument("subgraph coloring is not distinguishing");
  Coloring out{c.k, std::vector<ColorSet>(g.edge_count())};
  std::vector<bool> from_h(g.edge_count(), false);
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto image = g.find_edge(h.edge(e).u, h.edge(e).v);
    if (!image)
      throw std::invalid_argument("edge (" + std::to_string(h.edge(e).u) + "," +
                                  std::to_string(h.edge(e).v) + ") is not in the supergraph");
    from_h[*image] = true;
    out.sets[*image] = c.sets[e];
  }
  if (h.edge_count() == g.edge_count()) return out;
  out.k = c.k + 1;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!from_h[e]) out.sets[e] = {out.k};
  return out;
}

GeneralColoring color_general(const Graph& g) {
  const int lb = lower_bound(g);
  GeneralColoring out;
  out.forest = decompose_1stars(g);

  std::vector<ColoredPart> parts;
  parts.reserve(out.forest.stars.size());
  for (const OneStar& s : out.forest.stars) parts.push_back({s.local_order(), s.local_graph(), color_1star(s)});
  ColoredGraph forest = combine_disjoint(parts);
  out.forest_palette = forest.coloring.k;
  out.coloring = lift_to_supergraph(g, forest.graph, forest.coloring);
  if (out.coloring.k > lb + 2) throw std::logic_error("general coloring exceeded the lower bound + 2");
  return out;
}

}  // namespace uvd

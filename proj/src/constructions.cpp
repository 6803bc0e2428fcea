#include "uvd/constructions.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>
#include <string>

#include "uvd/generators.hpp"

namespace uvd {
namespace {

Coloring walk_to_coloring(const std::vector<ColorSet>& walk, int k) {
  const auto n = static_cast<Vertex>(walk.size());
  Graph g = cycle_graph(n);
  Coloring c{k, std::vector<ColorSet>(g.edge_count())};
  for (Vertex i = 0; i < n; ++i) c.sets[*g.find_edge(i, (i + 1) % n)] = walk[i];
  return c;
}

std::optional<std::string> seed_problem(const CycleSeedColoring& seed) {
  const std::size_t n = seed.walk.size();
  if (seed.k < 1 || seed.k > 30 || n != (std::size_t{1} << seed.k) - 1 || n < 3)
    return "seed must color C_{2^k-1} with k colors";
  for (ColorSet s : seed.walk)
    if (s.empty() || s.max_color() > seed.k) return "seed has an empty or out-of-palette edge";
  if ((seed.walk[0] | seed.walk[n - 1]) != ColorSet{1}) return "seed needs code(u1) = {1}";
  if (!seed.walk[1].contains(1)) return "seed needs color 1 on edge (u2, u3)";
  std::vector<ColorSet> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = seed.walk[(i + n - 1) % n] | seed.walk[i];
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return "seed is not distinguishing";
  return std::nullopt;
}

// Frozen output of find_seed_coloring(15, 4), in walk order.
const CycleSeedColoring kC15Seed{
    {{1}, {1, 2}, {3}, {1}, {4}, {2}, {2}, {3}, {3}, {4}, {4}, {1, 2}, {2, 3, 4}, {3, 4}, {1}},
    4};

}  // namespace

std::vector<ColorSet> path_edge_sets(Vertex n) {
  if (n < 3) throw std::invalid_argument("path coloring needs n >= 3");
  if (n == 3) return {{1}, {2}};

  // n = 2^k + l with 0 <= l < 2^k; extend an optimal k-coloring of P_{2^k-1}.
  const int k = std::bit_width(n) - 1;
  const Vertex l = n - (Vertex{1} << k);
  std::vector<ColorSet> out = path_edge_sets((Vertex{1} << k) - 1);
  out.reserve(n - 1);
  switch (l) {
    case 0:
      out.push_back({k + 1});
      break;
    case 1:
      out.push_back({k});
      out.push_back({k + 1});
      break;
    case 2:
      out.push_back({k});
      out.push_back({1, k + 1});
      out.push_back({k + 1});
      break;
    default: {
      // P_l reversed, every label gaining k+1, then a pendant {k+1} edge.
      const std::vector<ColorSet> tail = path_edge_sets(l);
      if (tail.front() != ColorSet{1})
        throw std::logic_error("sub-path coloring must start with {1}");
      out.push_back({k});
      for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.push_back(it->with(k + 1));
      if (out.back() != ColorSet({1, k + 1}))
        throw std::logic_error("edge (u_{n-2}, u_{n-1}) must be {1, k+1}");
      out.push_back({k + 1});
      break;
    }
  }
  return out;
}

PathColoring color_path(Vertex n) {
  PathColoring out;
  out.palette = palette_lower_bound(n);
  // path_graph(n) stores edge (i, i+1) at index i.
  out.coloring = Coloring{out.palette, path_edge_sets(n)};
  return out;
}

void check_cycle_seed(const CycleSeedColoring& seed) {
  if (auto problem = seed_problem(seed)) throw std::invalid_argument(*problem);
}

Coloring to_coloring(const CycleSeedColoring& seed) { return walk_to_coloring(seed.walk, seed.k); }

CycleSeedColoring to_cycle_seed(const Coloring& c, Vertex n) {
  Graph g = cycle_graph(n);
  if (c.sets.size() != g.edge_count()) throw std::invalid_argument("coloring does not fit C_n");
  CycleSeedColoring seed{std::vector<ColorSet>(n), c.k};
  for (Vertex i = 0; i < n; ++i) seed.walk[i] = c.sets[*g.find_edge(i, (i + 1) % n)];
  return seed;
}

const CycleSeedColoring& c15_seed() { return kC15Seed; }

CycleSeedColoring double_cycle_seed(const CycleSeedColoring& seed) {
  check_cycle_seed(seed);
  if (seed.k < 4) throw std::invalid_argument("cycle doubling starts at k = 4");
  const std::vector<ColorSet>& w = seed.walk;
  const std::size_t n = w.size();
  const int fresh = seed.k + 1;

  // New walk: u1 .. un, u'n .. u'1, v, back to u1.
  CycleSeedColoring out{{}, fresh};
  out.walk.reserve(2 * n + 1);
  out.walk.insert(out.walk.end(), w.begin(), w.end() - 1);
  out.walk.push_back(w[n - 2].with(1));
  for (std::size_t i = n - 2; i >= 1; --i) out.walk.push_back(w[i].with(fresh));
  out.walk.push_back({fresh});  // (u'2, u'1): color 1 dropped
  out.walk.push_back({fresh});  // (u'1, v)
  out.walk.push_back({1});      // (v, u1)

  if (auto problem = seed_problem(out))
    throw std::logic_error("doubling broke the seed invariants: " + *problem);
  return out;
}

Coloring color_cycle(Vertex n, const CycleSeedColoring* base) {
  if (n < 3) throw std::invalid_argument("cycle coloring needs n >= 3");
  if (n == 3) return walk_to_coloring({{1}, {2}, {3}}, 3);
  if (n == 7) {
    // No 3-coloring of C_7 exists; lift the optimal P_7 coloring instead.
    std::vector<ColorSet> walk = path_edge_sets(7);
    walk.push_back({4});
    return walk_to_coloring(walk, 4);
  }
  const int k = palette_lower_bound(n);
  if (n == (Vertex{1} << k) - 1) {
    CycleSeedColoring seed = (base != nullptr && base->walk.size() <= n) ? *base : c15_seed();
    check_cycle_seed(seed);
    while (seed.walk.size() < n) seed = double_cycle_seed(seed);
    if (seed.walk.size() != n) throw std::invalid_argument("base seed does not lead to C_n");
    return to_coloring(seed);
  }

  // Close an optimal coloring of P_{n+1} over its first n vertices.
  std::vector<ColorSet> walk = path_edge_sets(n + 1);
  const ColorSet id_vn = walk[n - 2] | walk[n - 1];
  walk.pop_back();
  walk.push_back(id_vn.contains(1) ? ColorSet{1} : ColorSet{k});
  return walk_to_coloring(walk, k);
}

CbtColoring color_cbt(int h) {
  if (h < 1 || h > 25) throw std::invalid_argument("tree height must be in 1..25");
  CbtColoring out;
  out.height = h;

  // label[v] colors the edge from v to its parent (level-order numbering).
  std::vector<ColorSet> label{{}, {1}, {2}};
  for (int cur = 1; cur < h; ++cur) {
    const std::size_t size = label.size();  // 2^(cur+1) - 1
    const std::size_t next_size = 2 * size + 1;
    std::vector<ColorSet> next(next_size);
    for (std::size_t x = 1; x < size; ++x) {
      const int depth = std::bit_width(x + 1) - 1;
      const std::size_t offset = x + 1 - (std::size_t{1} << depth);
      const std::size_t left = (std::size_t{1} << (depth + 1)) - 1 + offset;
      next[left] = label[x];
      next[left + (std::size_t{1} << depth)] = label[x].with(cur + 2);
    }
    next[1] = {cur + 1};
    next[2] = {cur + 1, cur + 2};

    const std::size_t first_leaf = size;  // leaves are size .. next_size-1
    auto in_subtree = [](std::size_t v, std::size_t root) {
      while (v > root) v = (v - 1) / 2;
      return v == root;
    };
    auto code_of = [&](std::size_t v) {
      ColorSet id = next[v];
      if (2 * v + 1 < next_size) id |= next[2 * v + 1] | next[2 * v + 2];
      return id;
    };

    const ColorSet clash{cur + 1, cur + 2};
    std::optional<std::size_t> fix;
    for (std::size_t v = 2; v < next_size; ++v) {
      if (!in_subtree(v, 2) || code_of(v) != clash) continue;
      if (fix) throw std::logic_error("fix-up vertex is not unique");
      fix = v;
    }
    if (!fix) throw std::logic_error("no fix-up vertex in the right copy");
    const std::size_t u = *fix;
    if (!in_subtree(u, 6)) throw std::logic_error("fix-up vertex outside the primed subtree");
    if (2 * u + 1 < next_size && 2 * u + 1 >= first_leaf)
      throw std::logic_error("fix-up vertex is adjacent to a leaf");

    next[u] = next[u].without(cur + 1);
    if (2 * u + 1 < next_size) {
      next[2 * u + 1] = next[2 * u + 1].without(cur + 1);
      next[2 * u + 2] = next[2 * u + 2].without(cur + 1);
    }
    out.fixups.push_back(static_cast<Vertex>(u));
    label = std::move(next);
  }

  // complete_binary_tree stores the edge (parent(v), v) at index v-1.
  out.coloring = Coloring{h + 1, std::vector<ColorSet>(label.begin() + 1, label.end())};
  return out;
}

}  // namespace uvd

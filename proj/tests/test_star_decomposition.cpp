#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "uvd/constructions.hpp"
#include "uvd/generators.hpp"
#include "uvd/star_decomposition.hpp"

using namespace uvd;

namespace {

bool oracle_valid(const Graph& g, const Coloring& c) {
  std::vector<oracle::Mask> labels;
  for (ColorSet s : c.sets) labels.push_back(s.bits());
  return oracle::distinguishing(g.vertex_count(), oracle::raw_edges(g), labels);
}

OneStar make_star(int long_branches, int short_branches) {
  OneStar s{0, {}};
  Vertex next = 1;
  for (int i = 0; i < long_branches; ++i) {
    s.branches.push_back({next, next + 1});
    next += 2;
  }
  for (int i = 0; i < short_branches; ++i) s.branches.push_back({next++, std::nullopt});
  return s;
}

std::vector<Graph> sample_graphs() {
  std::vector<Graph> out{path_graph(3), path_graph(4), path_graph(10), cycle_graph(3),
                         cycle_graph(8), complete_graph(5), complete_binary_tree(4)};
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const unsigned n = 3 + rng() % 60;
    out.push_back(oracle::sparse_admissible(n, rng() % (n + 1), 3 + rng() % 12, rng));
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    out.push_back(random_admissible_graph(10 + seed % 30, 0.2, seed));
  return out;
}

}  // namespace

TEST(OneStar, LocalGraphMatchesGenerator) {
  OneStar s{7, {{3, std::nullopt}, {2, 9}, {5, 4}}};
  EXPECT_EQ(s.vertex_count(), 6u);
  EXPECT_EQ(s.local_order(), (std::vector<Vertex>{7, 2, 5, 9, 4, 3}));
  const std::vector<int> lengths{2, 2, 1};
  EXPECT_EQ(s.local_graph(), one_star_graph(lengths));
}

TEST(OneStar, ColoringIsOptimalForEveryShape) {
  for (int a = 0; a <= 20; ++a) {
    for (int b = 0; b <= 30; ++b) {
      if (a + b < 2) continue;
      const OneStar s = make_star(a, b);
      const Graph g = s.local_graph();
      const Coloring c = color_1star(s);
      const int k = oracle::log_bound(g.vertex_count());
      ASSERT_EQ(c.k, k) << a << ' ' << b;
      ASSERT_TRUE(oracle_valid(g, c)) << a << ' ' << b;
      EXPECT_EQ(code(g, c, 0), ColorSet::full(k));
      std::set<std::uint64_t> labels;
      for (ColorSet e : c.sets) {
        EXPECT_NE(e, ColorSet::full(k));
        labels.insert(e.bits());
      }
      EXPECT_EQ(labels.size(), c.sets.size()) << "labels repeat for " << a << ' ' << b;
    }
  }
}

TEST(OneStar, SmallestIsAPath) {
  const Graph g = make_star(0, 2).local_graph();
  EXPECT_TRUE(is_distinguishing(g, color_1star(make_star(0, 2))));
  EXPECT_THROW(color_1star(make_star(1, 0)), std::invalid_argument);
  EXPECT_THROW(color_1star(OneStar{0, {{1, std::nullopt}, {1, std::nullopt}}}),
               std::invalid_argument);
}

TEST(Decomposition, SpansEveryAdmissibleGraph) {
  for (const Graph& g : sample_graphs()) {
    const StarForest f = decompose_1stars(g);
    ASSERT_NO_THROW(check_star_forest(g, f));
    const Graph sub = forest_subgraph(g, f);
    EXPECT_EQ(sub.vertex_count(), g.vertex_count());
    for (const Edge& e : sub.edges()) EXPECT_TRUE(g.find_edge(e.u, e.v));
  }
  EXPECT_THROW(decompose_1stars(Graph(4, {{0, 1}, {2, 3}})), InadmissibleGraph);
}

TEST(Decomposition, CheckerRejects) {
  const Graph g = path_graph(5);
  EXPECT_THROW(check_star_forest(g, {{make_star(0, 2)}}), std::invalid_argument);  // 3, 4 uncovered
  StarForest twice{{OneStar{1, {{0, std::nullopt}, {2, std::nullopt}}},
                    OneStar{3, {{2, std::nullopt}, {4, std::nullopt}}}}};
  EXPECT_THROW(check_star_forest(g, twice), std::invalid_argument);
  StarForest off_graph{{OneStar{0, {{1, std::nullopt}, {2, {3}}}}, }};
  EXPECT_THROW(check_star_forest(g, off_graph), std::invalid_argument);
  StarForest partial{{OneStar{1, {{0, std::nullopt}, {2, {3}}}}}};
  EXPECT_THROW(check_star_forest(g, partial), std::invalid_argument);  // 4 missing
  partial.stars[0].branches[1].outer = std::nullopt;
  partial.stars.push_back(OneStar{3, {{2, std::nullopt}, {4, std::nullopt}}});
  EXPECT_THROW(check_star_forest(g, partial), std::invalid_argument);  // 2 twice
}

TEST(Merge, EqualTagsStayOptimal) {
  EXPECT_EQ(kgraph_tag(1), 0);
  EXPECT_EQ(kgraph_tag(7), 2);
  EXPECT_EQ(kgraph_tag(8), 3);
  EXPECT_THROW(kgraph_tag(0), std::invalid_argument);
  for (Vertex a = 3; a <= 40; ++a) {
    for (Vertex b = 3; b <= 40; ++b) {
      if (kgraph_tag(a) != kgraph_tag(b)) continue;
      const ColoredGraph x{path_graph(a), color_path(a).coloring};
      const ColoredGraph y{cycle_graph(b), color_cycle(b)};
      if (y.coloring.k != palette_lower_bound(b)) {
        EXPECT_THROW(merge_two_kgraphs(x, y), std::invalid_argument);
        continue;
      }
      const ColoredGraph m = merge_two_kgraphs(x, y);
      ASSERT_EQ(m.coloring.k, oracle::log_bound(a + b)) << a << ' ' << b;
      ASSERT_TRUE(oracle_valid(m.graph, m.coloring)) << a << ' ' << b;
    }
  }
  const ColoredGraph p3{path_graph(3), color_path(3).coloring};
  const ColoredGraph p4{path_graph(4), color_path(4).coloring};
  EXPECT_THROW(merge_two_kgraphs(p3, p4), std::invalid_argument);
}

TEST(Combine, AtMostOneExtraColor) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Vertex> sizes;
    Vertex total = 0;
    const int count = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < count; ++i) {
      sizes.push_back(3 + static_cast<Vertex>(rng() % 40));
      total += sizes.back();
    }
    std::vector<Vertex> perm(total);
    for (Vertex v = 0; v < total; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<ColoredPart> parts;
    Vertex at = 0;
    for (Vertex n : sizes) {
      parts.push_back({{perm.begin() + at, perm.begin() + at + n}, path_graph(n), color_path(n).coloring});
      at += n;
    }
    const ColoredGraph c = combine_disjoint(parts);
    ASSERT_EQ(c.graph.vertex_count(), total);
    ASSERT_LE(c.coloring.k, oracle::log_bound(total) + 1);
    ASSERT_TRUE(oracle_valid(c.graph, c.coloring));
    for (const ColoredPart& p : parts)
      for (const Edge& e : p.graph.edges()) EXPECT_TRUE(c.graph.find_edge(p.vertices[e.u], p.vertices[e.v]));
  }
}

TEST(Combine, RejectsBadPartitions) {
  const ColoredPart a{{0, 1, 2}, path_graph(3), color_path(3).coloring};
  const ColoredPart overlap{{2, 3, 4}, path_graph(3), color_path(3).coloring};
  const ColoredPart gap{{4, 5, 6}, path_graph(3), color_path(3).coloring};
  const ColoredPart loose{{3, 4, 5}, path_graph(3), Coloring{3, {{1}, {3}}}};
  EXPECT_THROW(combine_disjoint(std::vector<ColoredPart>{a, overlap}), std::invalid_argument);
  EXPECT_THROW(combine_disjoint(std::vector<ColoredPart>{a, gap}), std::invalid_argument);
  EXPECT_THROW(combine_disjoint(std::vector<ColoredPart>{a, loose}), std::invalid_argument);
  EXPECT_THROW(combine_disjoint(std::vector<ColoredPart>{}), std::invalid_argument);
}

TEST(Lift, NewEdgesGetAFreshColor) {
  const Graph h = path_graph(4);
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  const Coloring c = lift_to_supergraph(g, h, color_path(4).coloring);
  EXPECT_EQ(c.k, 4);
  EXPECT_EQ(c.sets[*g.find_edge(0, 3)], ColorSet{4});
  EXPECT_EQ(c.sets[*g.find_edge(1, 2)], ColorSet{2});
  EXPECT_TRUE(is_distinguishing(g, c));
  EXPECT_EQ(lift_to_supergraph(h, h, color_path(4).coloring), color_path(4).coloring);
  EXPECT_THROW(lift_to_supergraph(path_graph(3), h, color_path(4).coloring), std::invalid_argument);
  const Graph off(4, {{0, 1}, {1, 3}, {2, 3}});  // (1, 3) is not an edge of g
  EXPECT_THROW(lift_to_supergraph(g, off, Coloring{3, {{1}, {2}, {3}}}), std::invalid_argument);
  EXPECT_THROW(lift_to_supergraph(g, h, Coloring{1, {{1}, {1}, {1}}}), std::invalid_argument);
}

TEST(General, WithinTwoOfTheBound) {
  for (const Graph& g : sample_graphs()) {
    const GeneralColoring r = color_general(g);
    const int lb = oracle::log_bound(g.vertex_count());
    ASSERT_TRUE(oracle_valid(g, r.coloring));
    EXPECT_LE(r.coloring.k, lb + 2);
    EXPECT_LE(r.forest_palette, lb + 1);
    EXPECT_NO_THROW(check_star_forest(g, r.forest));
  }
  EXPECT_THROW(color_general(path_graph(2)), InadmissibleGraph);
}

TEST(General, Deterministic) {
  const Graph g = random_admissible_graph(50, 0.08, 3);
  EXPECT_EQ(color_general(g).coloring, color_general(g).coloring);
}

#pragma once

#include <vector>

#include "uvd/coloring.hpp"

namespace uvd {

// Closed-form optimal colorings for paths, cycles and complete binary trees.
// Each coloring is indexed against the matching generator in generators.hpp.

/// Optimal coloring of path_graph(n) with palette m = ceil(log2(n+1)).
/// Besides being distinguishing it satisfies
///   code(u1) = {1}, code(un) = {m}, and only u_{n-1} may have code {1, m},
/// which the cycle construction relies on.
struct PathColoring {
  Coloring coloring;
  int palette = 0;
};

/// Throws std::invalid_argument for n < 3.
PathColoring color_path(Vertex n);

/// The same coloring as a sequence: entry i labels the edge (u_{i+1}, u_{i+2}).
std::vector<ColorSet> path_edge_sets(Vertex n);

/// Coloring of C_n, n = 2^k - 1, held in walk order: walk[i] labels
/// (u_{i+1}, u_{i+2}) and walk[n-1] labels the closing edge (u_n, u_1).
/// A seed has code(u1) = {1} and 1 in the label of (u2, u3); those two facts
/// are what the doubling step needs.
struct CycleSeedColoring {
  std::vector<ColorSet> walk;
  int k = 0;

  friend bool operator==(const CycleSeedColoring&, const CycleSeedColoring&) = default;
};

/// Throws std::invalid_argument unless `seed` is a distinguishing k-coloring
/// of C_{2^k-1} satisfying both seed conditions.
void check_cycle_seed(const CycleSeedColoring& seed);

/// Coloring of cycle_graph(seed.walk.size()) with palette seed.k.
Coloring to_coloring(const CycleSeedColoring& seed);

/// Reads a seed back from a coloring of cycle_graph(n).
CycleSeedColoring to_cycle_seed(const Coloring& c, Vertex n);

/// The frozen 4-coloring of C_15 used as the base of the doubling chain.
/// It was produced by find_seed_coloring(15, 4) (see exact_solver.hpp).
const CycleSeedColoring& c15_seed();

/// Builds a seed for C_{2n+1} with k+1 colors from a seed for C_n: a second
/// copy of the cycle with color k+1 added everywhere, spliced to the first
/// through a new vertex. Requires k >= 4 and a valid seed.
CycleSeedColoring double_cycle_seed(const CycleSeedColoring& seed);

/// Distinguishing coloring of cycle_graph(n), n >= 3. The palette (c.k) is
/// ceil(log2(n+1)) except for n = 3 (3 colors) and n = 7 (4 colors), the two
/// cycles that cannot reach the bound. `base` replaces c15_seed() as the
/// start of the doubling chain for n = 2^k - 1, k >= 4.
Coloring color_cycle(Vertex n, const CycleSeedColoring* base = nullptr);

/// Optimal coloring of complete_binary_tree(h) with palette h+1.
///
/// The coloring keeps two facts that drive the induction: the root has code
/// {h, h+1}, and every edge inside the subtree under the root's right child
/// (`primed_root`) contains color h+1.
struct CbtColoring {
  Coloring coloring;
  int height = 0;
  Vertex primed_root = 2;
  /// fixups[j] is the vertex whose incident edges lost color j+2 while
  /// building T_{j+2} from two copies of T_{j+1}, numbered within T_{j+2}.
  std::vector<Vertex> fixups;
};

/// Throws std::invalid_argument for h < 1 or h > 25.
CbtColoring color_cbt(int h);

}  // namespace uvd

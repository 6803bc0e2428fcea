#pragma once

#include <cstdint>
#include <span>

#include "uvd/graph.hpp"

namespace uvd {

// Graph families. Vertex numbering is fixed so the closed-form colorers can
// address vertices by position.

/// u1 - u2 - ... - un numbered 0..n-1 along the walk. Requires n >= 1.
Graph path_graph(Vertex n);

/// Path 0..n-1 closed by the edge (0, n-1). Requires n >= 3.
Graph cycle_graph(Vertex n);

/// K_n. Requires n >= 1.
Graph complete_graph(Vertex n);

/// Complete binary tree of height h: 2^(h+1)-1 vertices in level order, the
/// children of i being 2i+1 and 2i+2. Requires 0 <= h <= 25.
Graph complete_binary_tree(int h);

/// 1-subdivided star. Each entry of `branch_lengths` is 1 or 2. The center is
/// vertex 0, followed by the middle vertices of the length-2 branches (in
/// branch order), then their far ends (same order), then the length-1 leaves.
/// Requires at least two branches.
Graph one_star_graph(std::span<const int> branch_lengths);

/// G(n, p) resampled until admissible, driven by mt19937_64(seed). Each edge
/// is kept when a 53-bit uniform draw is below p, so the result is identical
/// across standard libraries. Requires n >= 3 and 0 < p <= 1; throws
/// std::runtime_error after `max_attempts` rejected samples.
Graph random_admissible_graph(Vertex n, double p, std::uint64_t seed,
                              int max_attempts = 100000);

}  // namespace uvd

#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "uvd/coloring.hpp"
#include "uvd/constructions.hpp"

namespace uvd {

// Exhaustive backtracking over per-edge color sets. The search does not use
// the constructions, and every witness it returns has passed verify().

/// Largest palette the solver accepts (codes are tracked in a 128-bit mask).
inline constexpr int kMaxSolverColors = 7;

struct SearchConfig {
  int k = 1;
  /// Budget on search nodes (edge-label assignments tried).
  std::optional<std::uint64_t> node_limit;
  /// Colors first appear in increasing order along the edge order: a
  /// color c+1 may be used only once c has been used on the same or an
  /// earlier edge.
  bool symmetry_breaking = true;
  /// Worker threads splitting the first edge's choices. The witness and the
  /// verdict do not depend on this, as long as the budget is not hit.
  int jobs = 1;
};

enum class SearchStatus {
  kFound,
  kExhausted,       // proof that no k-coloring exists
  kBudgetExceeded,  // undecided
};

struct SearchResult {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
};

/// Extra condition on one edge's label.
struct EdgeRestriction {
  ColorSet must_contain;
  std::optional<ColorSet> fixed;
};

/// Decides whether `g` has a distinguishing cfg.k-coloring. The witness, if
/// any, is the first one in the search order. Throws InadmissibleGraph, and
/// std::invalid_argument for k outside 1..kMaxSolverColors.
SearchResult exists_coloring(const Graph& g, const SearchConfig& cfg);

/// Same, with per-edge restrictions (indexed by edge id). Restrictions name
/// specific colors, so they require symmetry_breaking = false.
SearchResult exists_coloring(const Graph& g, const SearchConfig& cfg,
                             std::span<const EdgeRestriction> restrictions);

/// chi_union bracket. `lower` is proved (every smaller palette was refuted
/// or excluded by the pigeonhole bound) and `witness` uses `upper` colors.
struct ChiResult {
  int lower = 0;
  int upper = 0;
  Coloring witness;
  std::uint64_t nodes = 0;

  bool proved() const { return lower == upper; }
};

/// Smallest palette of a distinguishing coloring. Searches palettes from
/// lower_bound(g) up to one below the palette of color_general(g), which is
/// at most lower_bound(g) + 2 and serves as the fallback witness.
/// `node_limit` applies to each palette tried separately.
ChiResult chi_union(const Graph& g, std::optional<std::uint64_t> node_limit = std::nullopt,
                    int jobs = 1);

/// Searches C_n for a k-coloring with code(u1) = {1} and color 1 on
/// (u2, u3), i.e. a base for cycle doubling. nullopt when none exists.
std::optional<CycleSeedColoring> find_seed_coloring(Vertex n, int k);

}  // namespace uvd

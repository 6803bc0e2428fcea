#include "uvd/exact_solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>

#include "uvd/generators.hpp"
#include "uvd/star_decomposition.hpp"

namespace uvd {
namespace {

__extension__ typedef unsigned __int128 CodeMask;  // bit c set <=> code c is allowed

CodeMask code_bit(std::uint64_t code) { return CodeMask{1} << code; }

class Searcher {
 public:
  Searcher(const Graph& g, const SearchConfig& cfg, std::span<const EdgeRestriction> restrictions)
      : g_(g), cfg_(cfg), restrictions_(restrictions), full_((std::uint64_t{1} << cfg.k) - 1) {
    order_edges();
    supersets_.resize(full_ + 1);
    for (std::uint64_t p = 0; p <= full_; ++p)
      for (std::uint64_t c = 1; c <= full_; ++c)
        if ((c & p) == p) supersets_[p] |= code_bit(c);
    for (std::uint64_t s = 1; s <= full_; ++s) choices_.push_back(s);
  }

  SearchResult run() {
    SearchResult result;
    if (order_.empty()) {
      Coloring empty{cfg_.k, {}};
      if (is_distinguishing(g_, empty)) {
        result.status = SearchStatus::kFound;
        result.witness = std::move(empty);
      }
      return result;
    }

    const std::size_t tasks = choices_.size();
    std::vector<TaskOutcome> outcome(tasks, TaskOutcome::kExhausted);
    std::vector<std::vector<std::uint64_t>> labels(tasks);
    std::atomic<std::size_t> next_task{0};
    best_found_.store(tasks);

    auto worker = [&] {
      State st = initial_state();
      for (std::size_t t; (t = next_task.fetch_add(1)) < tasks;) {
        if (t > best_found_.load()) break;
        outcome[t] = run_task(st, t);
        if (outcome[t] == TaskOutcome::kFound) {
          labels[t] = st.label;
          std::size_t cur = best_found_.load();
          while (t < cur && !best_found_.compare_exchange_weak(cur, t)) {
          }
        }
      }
    };
    const int jobs = std::max(1, cfg_.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    result.nodes = nodes_.load();

    for (std::size_t t = 0; t < tasks; ++t) {
      if (outcome[t] == TaskOutcome::kExhausted) continue;
      if (outcome[t] == TaskOutcome::kCut) {
        result.status = SearchStatus::kBudgetExceeded;
        return result;
      }
      Coloring c{cfg_.k, std::vector<ColorSet>(g_.edge_count())};
      for (EdgeId e = 0; e < g_.edge_count(); ++e) c.sets[e] = ColorSet::from_bits(labels[t][e]);
      if (!is_distinguishing(g_, c)) throw std::logic_error("solver produced an invalid witness");
      result.status = SearchStatus::kFound;
      result.witness = std::move(c);
      return result;
    }
    result.status = SearchStatus::kExhausted;
    return result;
  }

 private:
  enum class TaskOutcome { kFound, kExhausted, kCut, kCancelled };

  struct State {
    std::vector<std::uint64_t> partial;    // union of labels assigned so far
    std::vector<std::uint32_t> remaining;  // unassigned incident edges
    std::vector<std::uint64_t> label;      // by edge id
    CodeMask final_codes = 0;              // codes of completed vertices
    int max_color = 0;
    bool cut = false;
    bool cancelled = false;
    // matching scratch
    std::vector<int> match_of_code;
    std::vector<std::uint32_t> seen_stamp;
    std::uint32_t stamp = 0;
  };

  // Greedy fill-in: repeatedly take the vertex closest to completion among
  // those already touched, and append its remaining edges.
  void order_edges() {
    const Vertex n = g_.vertex_count();
    std::vector<std::uint32_t> remaining(n);
    std::vector<bool> touched(n, false), placed(g_.edge_count(), false);
    for (Vertex v = 0; v < n; ++v) remaining[v] = static_cast<std::uint32_t>(g_.degree(v));
    while (order_.size() < g_.edge_count()) {
      Vertex best = n;
      for (Vertex v = 0; v < n; ++v) {
        if (remaining[v] == 0) continue;
        if (best == n || touched[v] > touched[best] ||
            (touched[v] == touched[best] && remaining[v] < remaining[best]))
          best = v;
      }
      for (EdgeId e : g_.incident(best)) {
        if (placed[e]) continue;
        placed[e] = true;
        order_.push_back(e);
        for (Vertex w : {g_.edge(e).u, g_.edge(e).v}) {
          --remaining[w];
          touched[w] = true;
        }
      }
    }
  }

  State initial_state() const {
    State st;
    const Vertex n = g_.vertex_count();
    st.partial.assign(n, 0);
    st.remaining.resize(n);
    for (Vertex v = 0; v < n; ++v) st.remaining[v] = static_cast<std::uint32_t>(g_.degree(v));
    st.label.assign(g_.edge_count(), 0);
    st.match_of_code.assign(full_ + 1, -1);
    st.seen_stamp.assign(full_ + 1, 0);
    return st;
  }

  bool allowed(EdgeId e, std::uint64_t s, int max_color) const {
    if (!restrictions_.empty()) {
      const EdgeRestriction& r = restrictions_[e];
      if (r.fixed && r.fixed->bits() != s) return false;
      if ((r.must_contain.bits() & ~s) != 0) return false;
    }
    if (cfg_.symmetry_breaking) {
      // Colors above max_color must be max_color+1, max_color+2, ... with no gap.
      const std::uint64_t fresh = s >> max_color;
      if ((fresh & (fresh + 1)) != 0) return false;
    }
    return true;
  }

  bool augment(State& st, Vertex v) const {
    CodeMask cand = candidates(st, v);
    while (cand != 0) {
      const auto c = static_cast<std::uint64_t>(lowest_bit(cand));
      cand &= cand - 1;
      if (st.seen_stamp[c] == st.stamp) continue;
      st.seen_stamp[c] = st.stamp;
      if (st.match_of_code[c] < 0 || augment(st, static_cast<Vertex>(st.match_of_code[c]))) {
        st.match_of_code[c] = static_cast<int>(v);
        return true;
      }
    }
    return false;
  }

  static int lowest_bit(CodeMask m) {
    const auto lo = static_cast<std::uint64_t>(m);
    if (lo != 0) return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
  }

  CodeMask candidates(const State& st, Vertex v) const {
    return supersets_[st.partial[v]] & ~st.final_codes;
  }

  // Every unfinished vertex can still get its own code, distinct from the
  // codes of finished vertices and from each other (Hall's condition via
  // augmenting paths).
  bool feasible(State& st) const {
    std::fill(st.match_of_code.begin(), st.match_of_code.end(), -1);
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (st.remaining[v] == 0) continue;
      ++st.stamp;
      if (!augment(st, v)) return false;
    }
    return true;
  }

  // Assigns `s` to the edge at `pos`; false if that finishes a vertex with a
  // code already taken.
  bool apply(State& st, std::size_t pos, std::uint64_t s) const {
    const EdgeId e = order_[pos];
    st.label[e] = s;
    bool ok = true;
    for (Vertex w : {g_.edge(e).u, g_.edge(e).v}) {
      st.partial[w] |= s;
      if (--st.remaining[w] == 0) {
        if (st.final_codes & code_bit(st.partial[w])) ok = false;
        st.final_codes |= code_bit(st.partial[w]);
      }
    }
    return ok;
  }

  bool count_node(State& st) {
    const std::uint64_t used = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (cfg_.node_limit && used > *cfg_.node_limit) {
      st.cut = true;
      return false;
    }
    return true;
  }

  bool dfs(State& st, std::size_t pos, std::size_t task) {
    if (pos == order_.size()) return true;
    if ((pos & 3) == 0 && task > best_found_.load(std::memory_order_relaxed)) {
      st.cancelled = true;
      return false;
    }
    const EdgeId e = order_[pos];
    const Vertex a = g_.edge(e).u, b = g_.edge(e).v;
    for (std::uint64_t s : choices_) {
      if (!allowed(e, s, st.max_color)) continue;
      if (!count_node(st)) return false;
      const std::uint64_t pa = st.partial[a], pb = st.partial[b];
      const CodeMask fin = st.final_codes;
      const int mc = st.max_color;
      st.max_color = std::max(mc, static_cast<int>(std::bit_width(s)));
      if (apply(st, pos, s) && feasible(st) && dfs(st, pos + 1, task)) return true;
      st.partial[a] = pa;
      st.partial[b] = pb;
      ++st.remaining[a];
      ++st.remaining[b];
      st.final_codes = fin;
      st.max_color = mc;
      st.label[e] = 0;
      if (st.cut || st.cancelled) return false;
    }
    return false;
  }

  // Subtree in which the first edge takes choices_[task].
  TaskOutcome run_task(State& st, std::size_t task) {
    st = initial_state();
    const std::uint64_t s = choices_[task];
    if (!allowed(order_[0], s, 0)) return TaskOutcome::kExhausted;
    if (!count_node(st)) return TaskOutcome::kCut;
    st.max_color = static_cast<int>(std::bit_width(s));
    if (!apply(st, 0, s) || !feasible(st)) return TaskOutcome::kExhausted;
    if (dfs(st, 1, task)) return TaskOutcome::kFound;
    if (st.cut) return TaskOutcome::kCut;
    if (st.cancelled) return TaskOutcome::kCancelled;
    return TaskOutcome::kExhausted;
  }

  const Graph& g_;
  SearchConfig cfg_;
  std::span<const EdgeRestriction> restrictions_;
  std::uint64_t full_;
  std::vector<EdgeId> order_;
  std::vector<CodeMask> supersets_;
  std::vector<std::uint64_t> choices_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::size_t> best_found_{0};
};

}  // namespace

SearchResult exists_coloring(const Graph& g, const SearchConfig& cfg) {
  return exists_coloring(g, cfg, {});
}

SearchResult exists_coloring(const Graph& g, const SearchConfig& cfg,
                             std::span<const EdgeRestriction> restrictions) {
  if (!is_admissible(g))
    throw InadmissibleGraph("exact search needs every component to have >= 3 vertices");
  if (cfg.k < 1 || cfg.k > kMaxSolverColors)
    throw std::invalid_argument("exact search supports palettes of 1.." +
                                std::to_string(kMaxSolverColors) + " colors");
  if (!restrictions.empty() && restrictions.size() != g.edge_count())
    throw std::invalid_argument("need one restriction per edge");
  if (!restrictions.empty() && cfg.symmetry_breaking)
    throw std::invalid_argument("edge restrictions are incompatible with symmetry breaking");
  Searcher searcher(g, cfg, restrictions);
  return searcher.run();
}

ChiResult chi_union(const Graph& g, std::optional<std::uint64_t> node_limit, int jobs) {
  const int lb = lower_bound(g);
  GeneralColoring general = color_general(g);
  ChiResult r{lb, general.coloring.k, std::move(general.coloring), 0};
  bool refuted_so_far = true;
  for (int k = lb; k < r.upper && k <= kMaxSolverColors; ++k) {
    SearchResult res = exists_coloring(g, SearchConfig{k, node_limit, true, jobs});
    r.nodes += res.nodes;
    if (res.status == SearchStatus::kFound) {
      r.upper = k;
      r.witness = std::move(*res.witness);
      break;
    }
    if (res.status == SearchStatus::kExhausted && refuted_so_far) r.lower = k + 1;
    if (res.status == SearchStatus::kBudgetExceeded) refuted_so_far = false;
  }
  return r;
}

std::optional<CycleSeedColoring> find_seed_coloring(Vertex n, int k) {
  const Graph g = cycle_graph(n);
  std::vector<EdgeRestriction> restrictions(g.edge_count());
  restrictions[*g.find_edge(0, 1)].fixed = ColorSet{1};
  restrictions[*g.find_edge(0, n - 1)].fixed = ColorSet{1};
  restrictions[*g.find_edge(1, 2)].must_contain = ColorSet{1};
  SearchConfig cfg{k, std::nullopt, false, 1};
  SearchResult res = exists_coloring(g, cfg, restrictions);
  if (res.status != SearchStatus::kFound) return std::nullopt;
  return to_cycle_seed(*res.witness, n);
}

}  // namespace uvd

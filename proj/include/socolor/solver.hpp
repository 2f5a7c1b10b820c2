#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "socolor/coloring.hpp"
#include "socolor/graph.hpp"

namespace soc {

/// Search limits. A default-constructed budget is explicitly unbounded.
struct Budget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> max_time;

  static Budget unbounded() { return {}; }
  static Budget nodes(std::uint64_t n) { return {n, std::nullopt}; }
  static Budget time(std::chrono::milliseconds t) { return {std::nullopt, t}; }
  bool is_unbounded() const { return !max_nodes && !max_time; }
};

enum class VertexOrder {
  degree_desc,    // descending degree, ties by index
  index,
  reverse_index,
};

struct SolveOptions {
  Budget budget;
  VertexOrder order = VertexOrder::degree_desc;
  // Reject partial states where an even class at some vertex can no longer
  // be fixed by any of its uncolored neighbors. Completion checks and the
  // counting bounds are always on.
  bool lookahead = true;
  // Worker threads. Values > 1 split the search tree below the root.
  unsigned jobs = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

enum class Decision { yes, no, timeout };

struct DecideResult {
  Decision decision = Decision::timeout;
  std::optional<Coloring> witness;  // set iff decision == yes
  SearchStats stats;
};

/// Is there a strong odd coloring of g with at most k colors?
///
/// Vertices are colored in a fixed order; vertex i may only use colors up
/// to 1 + (largest color used so far). A vertex's parity condition is
/// checked exactly once its whole neighborhood is colored and bounded from
/// below while it is still open. `no` is an exhaustive refutation.
/// Throws InvalidParameter if k == 0.
DecideResult decide_k(const Graph& g, std::size_t k, const SolveOptions& options = {});

enum class SolveStatus {
  exact,
  bounds,   // node budget exhausted
  timeout,  // wall-clock budget exhausted
};

struct SolveResult {
  SolveStatus status = SolveStatus::bounds;
  std::optional<std::size_t> value;  // set iff status == exact
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<Coloring> witness;  // verified coloring with `upper` colors
  SearchStats stats;
};

/// Strong odd chromatic number. Scans k upward from a clique lower bound
/// until decide_k succeeds or k meets the heuristic upper bound. The budget
/// covers the whole scan. Throws InvalidParameter on the empty graph.
SolveResult chromatic_strong_odd(const Graph& g, const SolveOptions& options = {});

struct GreedyResult {
  std::size_t value = 0;
  Coloring witness;
};

/// Verified strong odd coloring from a greedy 2-distance coloring followed
/// by class merging. Never worse than the all-distinct coloring.
GreedyResult greedy_upper(const Graph& g);

/// Size of a greedily grown clique; a lower bound on every proper coloring.
std::size_t greedy_clique_bound(const Graph& g);

}  // namespace soc

#pragma once

#include <cstddef>

#include "socolor/coloring.hpp"
#include "socolor/graph.hpp"

namespace soc {

inline constexpr std::size_t kOracleMaxVertices = 10;

struct OracleResult {
  std::size_t value = 0;
  Coloring witness;
};

/// Exhaustive strong odd chromatic number for tiny graphs.
///
/// For k = 1, 2, ... enumerates every assignment in restricted-growth form
/// (vertex i uses a color <= 1 + max color of vertices before it) with at
/// most k colors and re-checks each one with is_strong_odd. No pruning.
/// Throws InputTooLarge above kOracleMaxVertices vertices.
OracleResult brute_force_so(const Graph& g);

}  // namespace soc

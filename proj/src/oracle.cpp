#include "socolor/oracle.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

#include "socolor/error.hpp"
#include "socolor/verify.hpp"

namespace soc {

OracleResult brute_force_so(const Graph& g) {
  const auto n = g.num_vertices();
  if (n > kOracleMaxVertices) {
    throw InputTooLarge("brute_force_so refuses graphs with more than " +
                        std::to_string(kOracleMaxVertices) + " vertices");
  }
  if (n == 0) return {0, Coloring{}};

  // Round k visits the restricted-growth strings whose largest color is
  // exactly k; smaller palettes were covered by earlier rounds.
  std::vector<Color> a(n, 0);
  std::optional<Coloring> hit;
  std::function<bool(std::size_t, Color, Color)> enumerate =
      [&](std::size_t i, Color max_used, Color k) -> bool {
    if (max_used + (n - i) < k) return false;
    if (i == n) {
      Coloring c(a);
      if (is_strong_odd(g, c)) {
        hit = std::move(c);
        return true;
      }
      return false;
    }
    const Color limit = std::min<Color>(k, max_used + 1);
    for (Color c = 1; c <= limit; ++c) {
      a[i] = c;
      if (enumerate(i + 1, std::max(max_used, c), k)) return true;
    }
    return false;
  };

  for (Color k = 1; k <= n; ++k) {
    if (enumerate(0, 0, k)) return {k, std::move(*hit)};
  }
  // Unreachable: the all-distinct coloring is found at k = n.
  throw std::logic_error("brute_force_so found no coloring");
}

}  // namespace soc

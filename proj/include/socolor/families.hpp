#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "socolor/coloring.hpp"

namespace soc {

// Closed forms for wheels W_n = C_n v K_1, joins C_n v mK_1 and one point
// unions I_y(G_m, G_n) of G_n = C_n v 2K_1, together with colorings that
// attain them. Every coloring is checked with is_strong_odd on the matching
// build() graph before it is returned; a failure throws std::logic_error.

std::size_t wheel_formula(std::size_t n);
/// Which case of the wheel formula applies, e.g. "n = 14" or "n = 3 (mod 6)".
std::string wheel_case(std::size_t n);

/// wheel_formula(n) if m is odd, wheel_formula(n) + 1 if m is even.
std::size_t join_formula(std::size_t n, std::size_t m);
std::string join_case(std::size_t n, std::size_t m);

/// wheel_formula(m) + wheel_formula(n) - 1.
std::size_t union_formula(std::size_t m, std::size_t n);
std::string union_case(std::size_t m, std::size_t n);

/// Colors of the cycle vertices 0..n-1 in the wheel construction; uses
/// exactly wheel_formula(n) - 1 colors, 1..wheel_formula(n) - 1.
std::vector<Color> wheel_cycle_pattern(std::size_t n);

Coloring wheel_coloring(std::size_t n);
Coloring join_coloring(std::size_t n, std::size_t m);
Coloring union_coloring(std::size_t m, std::size_t n);

}  // namespace soc

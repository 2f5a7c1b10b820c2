#include "socolor/families.hpp"

#include <stdexcept>

#include "socolor/error.hpp"
#include "socolor/graph.hpp"
#include "socolor/verify.hpp"

namespace soc {

namespace {

void require_cycle_length(std::size_t n) {
  if (n < 3) throw InvalidParameter("cycle length must be >= 3, got " + std::to_string(n));
}

void repeat(std::vector<Color>& out, std::initializer_list<Color> block, std::size_t times) {
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), block);
}

// Constructions are transcribed, not searched; a verifier failure means the
// transcription is wrong.
Coloring guarded(const Graph& g, std::vector<Color> colors, std::size_t expected,
                 const std::string& what) {
  Coloring c(std::move(colors));
  if (!is_strong_odd(g, c) || c.num_colors() != expected) {
    throw std::logic_error(what + ": construction failed verification");
  }
  return c;
}

}  // namespace

std::size_t wheel_formula(std::size_t n) {
  require_cycle_length(n);
  if (n <= 8) return n + 1;
  if (n == 14) return 7;
  switch (n % 6) {
    case 3:
      return 4;
    case 1:
    case 5:
      return 6;
    default:
      return 5;
  }
}

std::string wheel_case(std::size_t n) {
  require_cycle_length(n);
  if (n <= 8) return "n <= 8";
  if (n == 14) return "n = 14";
  switch (n % 6) {
    case 3:
      return "n = 3 (mod 6)";
    case 1:
    case 5:
      return "n = 1 or 5 (mod 6), n > 8";
    default:
      return "n = 0, 2 or 4 (mod 6), n > 8, n != 14";
  }
}

std::size_t join_formula(std::size_t n, std::size_t m) {
  if (m < 1) throw InvalidParameter("join needs m >= 1");
  return wheel_formula(n) + (m % 2 == 0 ? 1 : 0);
}

std::string join_case(std::size_t n, std::size_t m) {
  if (m < 1) throw InvalidParameter("join needs m >= 1");
  return std::string(m % 2 == 0 ? "m even: chi_so(W_n) + 1" : "m odd: chi_so(W_n)") +
         "; W_n case " + wheel_case(n);
}

std::size_t union_formula(std::size_t m, std::size_t n) {
  return wheel_formula(m) + wheel_formula(n) - 1;
}

std::string union_case(std::size_t m, std::size_t n) {
  return "chi_so(W_m) + chi_so(W_n) - 1 = " + std::to_string(wheel_formula(m)) + " + " +
         std::to_string(wheel_formula(n)) + " - 1";
}

std::vector<Color> wheel_cycle_pattern(std::size_t n) {
  require_cycle_length(n);
  std::vector<Color> p;
  p.reserve(n);
  if (n <= 8) {
    for (Color c = 1; c <= n; ++c) p.push_back(c);
    return p;
  }
  if (n == 14) {
    repeat(p, {1, 2, 3, 4}, 3);
    p.insert(p.end(), {5, 6});
    return p;
  }
  switch (n % 6) {
    case 3:
      repeat(p, {1, 2, 3}, n / 3);
      break;
    case 4:
      repeat(p, {1, 2, 3}, n / 3);
      p.push_back(4);
      break;
    case 5:
      repeat(p, {1, 2, 3}, (n - 2) / 3);
      p.insert(p.end(), {4, 5});
      break;
    case 0:
      repeat(p, {1, 2, 3, 4}, 3);
      repeat(p, {1, 2, 3}, (n - 12) / 3);
      break;
    case 1:
      repeat(p, {1, 2, 3, 4}, 3);
      p.push_back(5);
      repeat(p, {1, 2, 3}, (n - 13) / 3);
      break;
    case 2:
      repeat(p, {1, 2, 3, 4}, 5);
      repeat(p, {1, 2, 3}, (n - 20) / 3);
      break;
  }
  return p;
}

Coloring wheel_coloring(std::size_t n) {
  const auto value = wheel_formula(n);
  auto colors = wheel_cycle_pattern(n);
  colors.push_back(static_cast<Color>(value));
  return guarded(wheel(n), std::move(colors), value, "wheel_coloring(" + std::to_string(n) + ")");
}

Coloring join_coloring(std::size_t n, std::size_t m) {
  const auto value = join_formula(n, m);
  auto colors = wheel_cycle_pattern(n);
  const auto a = static_cast<Color>(wheel_formula(n) - 1);
  for (std::size_t j = 0; j < m; ++j) {
    const bool odd_one_out = m % 2 == 0 && j + 1 == m;
    colors.push_back(odd_one_out ? a + 2 : a + 1);
  }
  return guarded(join_cycle_empty(n, m), std::move(colors), value,
                 "join_coloring(" + std::to_string(n) + ", " + std::to_string(m) + ")");
}

Coloring union_coloring(std::size_t m, std::size_t n) {
  const auto value = union_formula(m, n);
  const Graph g = union_g(m, n);
  const auto a = static_cast<Color>(wheel_formula(m) - 1);
  const auto b = static_cast<Color>(wheel_formula(n) - 1);

  auto at = [&](const std::string& role) {
    auto v = g.find_label(role);
    if (!v) throw std::logic_error("union graph lacks label " + role);
    return *v;
  };

  std::vector<Color> colors(g.num_vertices(), 0);
  const auto pm = wheel_cycle_pattern(m);
  const auto pn = wheel_cycle_pattern(n);
  for (std::size_t i = 0; i < m; ++i) colors[at("g1:cycle:" + std::to_string(i))] = pm[i];
  for (std::size_t i = 0; i < n; ++i) colors[at("g2:cycle:" + std::to_string(i))] = a + pn[i];
  colors[at("g1:x")] = a + 1;
  colors[at("g2:x")] = 1;
  colors[at("y")] = a + b + 1;
  return guarded(g, std::move(colors), value,
                 "union_coloring(" + std::to_string(m) + ", " + std::to_string(n) + ")");
}

}  // namespace soc

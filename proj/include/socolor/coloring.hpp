#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "socolor/graph.hpp"

namespace soc {

using Color = std::uint32_t;

/// Total assignment vertex -> positive color. Index i holds the color of
/// vertex i; whether the assignment covers a given graph is checked by the
/// verifiers.
class Coloring {
 public:
  Coloring() = default;
  /// Throws InvalidColoring if any color is 0.
  explicit Coloring(std::vector<Color> assignment);

  std::size_t size() const { return assignment_.size(); }
  Color operator[](Vertex v) const { return assignment_[v]; }
  std::span<const Color> assignment() const { return assignment_; }

  /// Distinct colors in ascending order.
  std::vector<Color> palette() const;
  std::size_t num_colors() const { return palette().size(); }

  /// Relabels colors to 1..k in order of first appearance.
  Coloring normalized() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> assignment_;
};

/// Every vertex gets its own color (always a strong odd coloring).
Coloring all_distinct(std::size_t n);

}  // namespace soc

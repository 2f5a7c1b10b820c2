#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "socolor/coloring.hpp"
#include "socolor/graph.hpp"

namespace soc {

// All checkers throw InvalidColoring when the coloring does not cover the
// graph (size mismatch). They never assume anything about the structure of
// the graph or the origin of the coloring.

bool is_proper(const Graph& g, const Coloring& c);

/// Proper, and every non-isolated vertex sees some color an odd number of
/// times.
bool is_odd_coloring(const Graph& g, const Coloring& c);

/// Proper, and every color present in N(v) appears an odd number of times
/// there, for every v.
bool is_strong_odd(const Graph& g, const Coloring& c);

struct NeighborhoodCount {
  Vertex vertex;
  Color color;
  std::size_t count;

  bool odd() const { return count % 2 == 1; }
  friend bool operator==(const NeighborhoodCount&, const NeighborhoodCount&) = default;
};

struct ParityReport {
  // One entry per (vertex, color) with a positive count, ordered by vertex
  // then color. Absent colors never appear.
  std::vector<NeighborhoodCount> counts;
  // Entries of `counts` whose count is even.
  std::vector<NeighborhoodCount> violations;
  // Monochromatic edges.
  std::vector<Edge> improper_edges;

  bool strong_odd() const { return violations.empty() && improper_edges.empty(); }
};

ParityReport parity_report(const Graph& g, const Coloring& c);

/// True iff vertices of `subset` at distance <= 2 in the subgraph induced by
/// `subset` have different colors. Throws InvalidParameter on out-of-range
/// or repeated subset entries.
bool is_two_distance_on(const Graph& g, const Coloring& c,
                        std::span<const Vertex> subset);

struct ClassCount {
  Color color;
  std::size_t size;

  bool odd() const { return size % 2 == 1; }
};

/// |class(color) ∩ subset| for every color of c's palette, ascending by color.
std::vector<ClassCount> class_parity_on(const Graph& g, const Coloring& c,
                                        std::span<const Vertex> subset);

/// True iff every color appearing on `subset` appears an odd number of times.
bool all_present_classes_odd(std::span<const ClassCount> classes);

}  // namespace soc

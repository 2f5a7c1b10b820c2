#pragma once

#include "socolor/coloring.hpp"
#include "socolor/graph.hpp"

namespace soc {

struct Augmented {
  Graph graph;
  Coloring coloring;
};

/// Repairs a proper coloring into a strong odd one by attaching pendants.
///
/// For every vertex v and every color i != c(v) whose count in N(v) is even
/// and positive, a new degree-1 vertex adjacent to v and colored i is
/// appended (vertices in index order, colors ascending). The input graph is
/// an induced subgraph of the result and no new color is introduced.
/// Throws InvalidColoring if `c` is not proper.
Augmented pendant_augment(const Graph& g, const Coloring& c);

}  // namespace soc

#include "socolor/pendant.hpp"

#include <map>

#include "socolor/error.hpp"
#include "socolor/verify.hpp"

namespace soc {

Augmented pendant_augment(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) throw InvalidColoring("pendant_augment needs a proper coloring");

  struct Pendant {
    Vertex anchor;
    Color color;
  };
  std::vector<Pendant> pendants;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::map<Color, std::size_t> count;
    for (Vertex w : g.neighbors(v)) ++count[c[w]];
    for (auto [col, k] : count) {
      if (col != c[v] && k % 2 == 0) pendants.push_back({v, col});
    }
  }

  const auto n = g.num_vertices();
  Graph h(n + pendants.size());
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  for (const auto& [v, role] : g.labels()) h.set_label(v, role);

  std::vector<Color> colors(c.assignment().begin(), c.assignment().end());
  for (std::size_t i = 0; i < pendants.size(); ++i) {
    const auto p = static_cast<Vertex>(n + i);
    h.add_edge(pendants[i].anchor, p);
    h.set_label(p, "pendant:" + std::to_string(pendants[i].anchor));
    colors.push_back(pendants[i].color);
  }
  return {std::move(h), Coloring(std::move(colors))};
}

}  // namespace soc

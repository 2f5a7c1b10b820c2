#include "socolor/verify.hpp"

#include <algorithm>
#include <deque>

#include "socolor/error.hpp"

namespace soc {

namespace {

void require_total(const Graph& g, const Coloring& c) {
  if (c.size() != g.num_vertices()) {
    throw InvalidColoring("coloring covers " + std::to_string(c.size()) +
                          " vertices, graph has " + std::to_string(g.num_vertices()));
  }
}

// Colors mapped to 0..k-1 so neighborhood counts fit a flat scratch table.
struct DenseColors {
  std::vector<Color> palette;
  std::vector<std::uint32_t> index;  // per vertex

  explicit DenseColors(const Coloring& c) : palette(c.palette()), index(c.size()) {
    for (std::size_t v = 0; v < c.size(); ++v) {
      index[v] = static_cast<std::uint32_t>(
          std::lower_bound(palette.begin(), palette.end(), c[static_cast<Vertex>(v)]) -
          palette.begin());
    }
  }
};

// Calls visit(v, dense color, count) for every color with positive count in
// N(v). Runs in O(sum of degrees).
template <class Visit>
void for_each_neighborhood_count(const Graph& g, const DenseColors& dc, Visit&& visit) {
  std::vector<std::size_t> count(dc.palette.size(), 0);
  std::vector<std::uint32_t> touched;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    touched.clear();
    for (Vertex w : g.neighbors(v)) {
      const auto ci = dc.index[w];
      if (count[ci]++ == 0) touched.push_back(ci);
    }
    std::sort(touched.begin(), touched.end());
    for (auto ci : touched) {
      visit(v, ci, count[ci]);
      count[ci] = 0;
    }
  }
}

std::vector<bool> membership(const Graph& g, std::span<const Vertex> subset) {
  std::vector<bool> in(g.num_vertices(), false);
  for (Vertex v : subset) {
    if (v >= g.num_vertices()) {
      throw InvalidParameter("subset vertex " + std::to_string(v) + " out of range");
    }
    if (in[v]) throw InvalidParameter("subset vertex " + std::to_string(v) + " repeated");
    in[v] = true;
  }
  return in;
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
  require_total(g, c);
  for (auto [u, v] : g.edges()) {
    if (c[u] == c[v]) return false;
  }
  return true;
}

bool is_odd_coloring(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) return false;
  const DenseColors dc(c);
  std::vector<bool> has_odd(g.num_vertices(), false);
  for_each_neighborhood_count(g, dc, [&](Vertex v, std::uint32_t, std::size_t count) {
    if (count % 2 == 1) has_odd[v] = true;
  });
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0 && !has_odd[v]) return false;
  }
  return true;
}

bool is_strong_odd(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) return false;
  const DenseColors dc(c);
  bool ok = true;
  for_each_neighborhood_count(g, dc, [&](Vertex, std::uint32_t, std::size_t count) {
    if (count % 2 == 0) ok = false;
  });
  return ok;
}

ParityReport parity_report(const Graph& g, const Coloring& c) {
  require_total(g, c);
  ParityReport report;
  for (auto [u, v] : g.edges()) {
    if (c[u] == c[v]) report.improper_edges.emplace_back(u, v);
  }
  const DenseColors dc(c);
  for_each_neighborhood_count(g, dc, [&](Vertex v, std::uint32_t ci, std::size_t count) {
    NeighborhoodCount entry{v, dc.palette[ci], count};
    report.counts.push_back(entry);
    if (!entry.odd()) report.violations.push_back(entry);
  });
  return report;
}

bool is_two_distance_on(const Graph& g, const Coloring& c, std::span<const Vertex> subset) {
  require_total(g, c);
  const auto in = membership(g, subset);
  // Within the induced subgraph: neighbors must differ from v, and any two
  // neighbors of v must differ from each other.
  std::vector<Vertex> near;
  for (Vertex v : subset) {
    near.clear();
    for (Vertex w : g.neighbors(v)) {
      if (!in[w]) continue;
      if (c[w] == c[v]) return false;
      near.push_back(w);
    }
    for (std::size_t i = 0; i < near.size(); ++i) {
      for (std::size_t j = i + 1; j < near.size(); ++j) {
        if (c[near[i]] == c[near[j]]) return false;
      }
    }
  }
  return true;
}

std::vector<ClassCount> class_parity_on(const Graph& g, const Coloring& c,
                                        std::span<const Vertex> subset) {
  require_total(g, c);
  membership(g, subset);
  const DenseColors dc(c);
  std::vector<ClassCount> out;
  out.reserve(dc.palette.size());
  for (Color col : dc.palette) out.push_back({col, 0});
  for (Vertex v : subset) ++out[dc.index[v]].size;
  return out;
}

bool all_present_classes_odd(std::span<const ClassCount> classes) {
  return std::all_of(classes.begin(), classes.end(),
                     [](const ClassCount& cc) { return cc.size == 0 || cc.odd(); });
}

}  // namespace soc

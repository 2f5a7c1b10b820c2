#include "socolor/embedding.hpp"

#include <algorithm>

#include "socolor/error.hpp"

namespace soc {

EmbeddingCheck verify_embedding(const Graph& g, const RotationSystem& rot) {
  const auto n = g.num_vertices();
  if (rot.num_vertices() != n) {
    throw InvalidRotation("rotation has " + std::to_string(rot.num_vertices()) +
                          " vertices, graph has " + std::to_string(n));
  }

  // Darts out of v are numbered offset[v] .. offset[v] + deg(v) - 1 in
  // rotation order. slot[v] maps a neighbor of v to its rotation position.
  std::vector<std::size_t> offset(n + 1, 0);
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> slot(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto around = rot.around(v);
    std::vector<Vertex> sorted(around.begin(), around.end());
    std::sort(sorted.begin(), sorted.end());
    const auto nb = g.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
      throw InvalidRotation("rotation at vertex " + std::to_string(v) +
                            " is not a permutation of its neighbors");
    }
    offset[v + 1] = offset[v] + around.size();
    for (std::size_t i = 0; i < around.size(); ++i) slot[v].emplace_back(around[i], i);
    std::sort(slot[v].begin(), slot[v].end());
  }

  auto position = [&](Vertex v, Vertex w) {
    auto it = std::lower_bound(slot[v].begin(), slot[v].end(), std::pair<Vertex, std::size_t>{w, 0});
    return it->second;
  };

  std::vector<bool> used(offset[n], false);
  std::size_t faces = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto around = rot.around(v);
    for (std::size_t i = 0; i < around.size(); ++i) {
      if (used[offset[v] + i]) continue;
      ++faces;
      Vertex tail = v;
      std::size_t idx = i;
      while (!used[offset[tail] + idx]) {
        used[offset[tail] + idx] = true;
        const Vertex head = rot.around(tail)[idx];
        const auto back = position(head, tail);
        idx = (back + 1) % rot.around(head).size();
        tail = head;
      }
    }
  }

  EmbeddingCheck out;
  out.vertices = n;
  out.edges = g.num_edges();
  out.faces = faces;
  out.euler_ok = static_cast<long long>(n) - static_cast<long long>(out.edges) +
                     static_cast<long long>(faces) == 2;
  return out;
}

namespace {

// Cycle on the unit circle (counterclockwise), x inside, y outside. All
// rotations are counterclockwise.
std::vector<std::vector<Vertex>> g_graph_rotation(std::size_t n) {
  const auto x = static_cast<Vertex>(n);
  const auto y = static_cast<Vertex>(n + 1);
  std::vector<std::vector<Vertex>> rot(n + 2);
  for (Vertex i = 0; i < n; ++i) {
    const auto next = static_cast<Vertex>((i + 1) % n);
    const auto prev = static_cast<Vertex>((i + n - 1) % n);
    rot[i] = {y, next, x, prev};
  }
  for (Vertex i = 0; i < n; ++i) rot[x].push_back(i);
  for (Vertex i = static_cast<Vertex>(n); i-- > 0;) rot[y].push_back(i);
  return rot;
}

}  // namespace

RotationSystem embed_family(const FamilySpec& spec) {
  if (const auto* f = std::get_if<family::Cycle>(&spec)) {
    const auto n = f->n;
    if (n < 3) throw InvalidParameter("cycle needs n >= 3");
    std::vector<std::vector<Vertex>> rot(n);
    for (Vertex i = 0; i < n; ++i) {
      rot[i] = {static_cast<Vertex>((i + 1) % n), static_cast<Vertex>((i + n - 1) % n)};
    }
    return RotationSystem(std::move(rot));
  }
  if (const auto* f = std::get_if<family::Wheel>(&spec)) {
    const auto n = f->n;
    if (n < 3) throw InvalidParameter("wheel needs n >= 3");
    const auto hub = static_cast<Vertex>(n);
    std::vector<std::vector<Vertex>> rot(n + 1);
    for (Vertex i = 0; i < n; ++i) {
      rot[i] = {static_cast<Vertex>((i + 1) % n), hub, static_cast<Vertex>((i + n - 1) % n)};
      rot[hub].push_back(i);
    }
    return RotationSystem(std::move(rot));
  }
  if (const auto* f = std::get_if<family::GGraph>(&spec)) {
    if (f->n < 3) throw InvalidParameter("g-graph needs n >= 3");
    return RotationSystem(g_graph_rotation(f->n));
  }
  if (const auto* f = std::get_if<family::UnionG>(&spec)) {
    if (f->m < 3 || f->n < 3) throw InvalidParameter("union-g needs m, n >= 3");
    // y lies on the outer face of both parts; its rotation is the part-1
    // rotation followed by the part-2 rotation.
    const Graph gm = g_graph(f->m);
    const Graph gn = g_graph(f->n);
    const UnionPart parts[] = {{&gm, static_cast<Vertex>(f->m + 1)},
                               {&gn, static_cast<Vertex>(f->n + 1)}};
    const auto layout = one_point_union_layout(parts, "y");

    std::vector<std::vector<Vertex>> rot(layout.graph.num_vertices());
    const std::vector<std::vector<Vertex>> local[] = {g_graph_rotation(f->m),
                                                      g_graph_rotation(f->n)};
    for (std::size_t p = 0; p < 2; ++p) {
      const auto& map = layout.index_map[p];
      for (Vertex v = 0; v < local[p].size(); ++v) {
        auto& target = rot[map[v]];
        for (Vertex w : local[p][v]) target.push_back(map[w]);
      }
    }
    return RotationSystem(std::move(rot));
  }
  throw UnsupportedFamily("no embedding for family " + describe(spec));
}

}  // namespace soc

#include "socolor/graph.hpp"

#include <algorithm>
#include <charconv>

#include "socolor/error.hpp"
#include "socolor/io.hpp"

namespace soc {

Graph::Graph(std::size_t n) : adj_(n) {}

void Graph::add_edge(Vertex u, Vertex v) {
  const auto n = num_vertices();
  if (u >= n || v >= n) {
    throw InvalidParameter("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                           "} out of range for " + std::to_string(n) + " vertices");
  }
  if (u == v) throw InvalidParameter("self-loop at vertex " + std::to_string(u));

  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) {
    throw InvalidParameter("parallel edge {" + std::to_string(u) + ", " +
                           std::to_string(v) + "}");
  }
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++num_edges_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nb : adj_) d = std::max(d, nb.size());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::set_label(Vertex v, std::string role) {
  if (v >= num_vertices()) {
    throw InvalidParameter("label for vertex " + std::to_string(v) + " out of range");
  }
  labels_[v] = std::move(role);
}

std::optional<Vertex> Graph::find_label(std::string_view role) const {
  for (const auto& [v, r] : labels_) {
    if (r == role) return v;
  }
  return std::nullopt;
}

Graph Graph::induced(std::span<const Vertex> subset) const {
  std::vector<std::int64_t> pos(num_vertices(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= num_vertices()) throw InvalidParameter("subset vertex out of range");
    pos[subset[i]] = static_cast<std::int64_t>(i);
  }
  Graph h(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (Vertex w : adj_[subset[i]]) {
      if (pos[w] > static_cast<std::int64_t>(i)) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(pos[w]));
    }
  }
  return h;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

}  // namespace

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3, got " + std::to_string(n));
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) {
    g.add_edge(i, static_cast<Vertex>((i + 1) % n));
    g.set_label(i, "cycle:" + std::to_string(i));
  }
  return g;
}

Graph empty_graph(std::size_t m) {
  require(m >= 1, "empty graph needs m >= 1");
  return Graph(m);
}

Graph complete(std::size_t k) {
  require(k >= 1, "complete graph needs k >= 1");
  Graph g(k);
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  const auto n1 = static_cast<Vertex>(g1.num_vertices());
  const auto n2 = static_cast<Vertex>(g2.num_vertices());
  Graph g(n1 + n2);
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(u + n1, v + n1);
  for (Vertex u = 0; u < n1; ++u) {
    for (Vertex v = 0; v < n2; ++v) g.add_edge(u, n1 + v);
  }
  for (const auto& [v, role] : g1.labels()) g.set_label(v, role);
  for (const auto& [v, role] : g2.labels()) g.set_label(v + n1, role);
  return g;
}

Graph wheel(std::size_t n) {
  Graph g = join(cycle(n), empty_graph(1));
  g.set_label(static_cast<Vertex>(n), "hub");
  return g;
}

Graph join_cycle_empty(std::size_t n, std::size_t m) {
  Graph g = join(cycle(n), empty_graph(m));
  for (std::size_t j = 0; j < m; ++j) {
    g.set_label(static_cast<Vertex>(n + j), "hub:" + std::to_string(j));
  }
  return g;
}

Graph g_graph(std::size_t n) {
  Graph g = join(cycle(n), empty_graph(2));
  g.set_label(static_cast<Vertex>(n), "x");
  g.set_label(static_cast<Vertex>(n + 1), "y");
  return g;
}

Graph union_g(std::size_t m, std::size_t n) {
  const Graph gm = g_graph(m);
  const Graph gn = g_graph(n);
  const UnionPart parts[] = {{&gm, static_cast<Vertex>(m + 1)},
                             {&gn, static_cast<Vertex>(n + 1)}};
  return one_point_union(parts, "y");
}

UnionLayout one_point_union_layout(std::span<const UnionPart> parts,
                                   const std::string& merged_label) {
  require(!parts.empty(), "one point union needs at least one part");
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require(parts[p].graph != nullptr, "null graph in one point union");
    require(parts[p].designated < parts[p].graph->num_vertices(),
            "designated vertex " + std::to_string(parts[p].designated) + " of part " +
                std::to_string(p) + " out of range");
  }

  UnionLayout out;
  const Vertex merged = parts[0].designated;
  Vertex next = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const Graph& part = *parts[p].graph;
    std::vector<Vertex> map(part.num_vertices());
    for (Vertex v = 0; v < part.num_vertices(); ++v) {
      if (p > 0 && v == parts[p].designated) {
        map[v] = merged;
      } else {
        map[v] = next++;
      }
    }
    out.index_map.push_back(std::move(map));
  }

  out.graph = Graph(next);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const Graph& part = *parts[p].graph;
    const auto& map = out.index_map[p];
    for (auto [u, v] : part.edges()) out.graph.add_edge(map[u], map[v]);
    for (const auto& [v, role] : part.labels()) {
      if (v == parts[p].designated) continue;
      out.graph.set_label(map[v], parts.size() == 1 ? role
                                                    : "g" + std::to_string(p + 1) + ":" + role);
    }
  }
  out.graph.set_label(merged, merged_label);
  return out;
}

Graph one_point_union(std::span<const UnionPart> parts, const std::string& merged_label) {
  return one_point_union_layout(parts, merged_label).graph;
}

std::string describe(const FamilySpec& spec) {
  auto args = [](auto... xs) {
    std::string s = "(";
    bool first = true;
    ((s += (first ? "" : ","), s += std::to_string(xs), first = false), ...);
    return s + ")";
  };
  return std::visit(
      [&](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Cycle>) return "cycle" + args(f.n);
        else if constexpr (std::is_same_v<T, family::Empty>) return "empty" + args(f.m);
        else if constexpr (std::is_same_v<T, family::Complete>) return "complete" + args(f.k);
        else if constexpr (std::is_same_v<T, family::Wheel>) return "wheel" + args(f.n);
        else if constexpr (std::is_same_v<T, family::JoinCycleEmpty>)
          return "join-cycle-empty" + args(f.n, f.m);
        else if constexpr (std::is_same_v<T, family::GGraph>) return "g-graph" + args(f.n);
        else if constexpr (std::is_same_v<T, family::UnionG>) return "union-g" + args(f.m, f.n);
        else return "file(" + f.path.string() + ")";
      },
      spec);
}

FamilySpec parse_family(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw InvalidParameter("malformed family '" + std::string(text) + "'");
  }
  const auto name = text.substr(0, open);
  const auto inner = text.substr(open + 1, text.size() - open - 2);
  if (name == "file") return family::FromFile{std::filesystem::path(std::string(inner))};

  std::vector<std::size_t> a;
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    auto comma = inner.find(',', pos);
    if (comma == std::string_view::npos) comma = inner.size();
    const auto tok = inner.substr(pos, comma - pos);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size() || tok.empty()) {
      throw InvalidParameter("malformed family argument in '" + std::string(text) + "'");
    }
    a.push_back(v);
    pos = comma + 1;
  }

  auto want = [&](std::size_t k) {
    if (a.size() != k) {
      throw InvalidParameter("family '" + std::string(name) + "' takes " +
                             std::to_string(k) + " argument(s)");
    }
  };
  if (name == "cycle") { want(1); return family::Cycle{a[0]}; }
  if (name == "empty") { want(1); return family::Empty{a[0]}; }
  if (name == "complete") { want(1); return family::Complete{a[0]}; }
  if (name == "wheel") { want(1); return family::Wheel{a[0]}; }
  if (name == "join-cycle-empty") { want(2); return family::JoinCycleEmpty{a[0], a[1]}; }
  if (name == "g-graph") { want(1); return family::GGraph{a[0]}; }
  if (name == "union-g") { want(2); return family::UnionG{a[0], a[1]}; }
  throw InvalidParameter("unknown family '" + std::string(name) + "'");
}

Graph build(const FamilySpec& spec) {
  return std::visit(
      [](const auto& f) -> Graph {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Cycle>) return cycle(f.n);
        else if constexpr (std::is_same_v<T, family::Empty>) return empty_graph(f.m);
        else if constexpr (std::is_same_v<T, family::Complete>) return complete(f.k);
        else if constexpr (std::is_same_v<T, family::Wheel>) return wheel(f.n);
        else if constexpr (std::is_same_v<T, family::JoinCycleEmpty>) {
          require(f.m >= 1, "join-cycle-empty needs m >= 1");
          return join_cycle_empty(f.n, f.m);
        } else if constexpr (std::is_same_v<T, family::GGraph>) return g_graph(f.n);
        else if constexpr (std::is_same_v<T, family::UnionG>) return union_g(f.m, f.n);
        else return from_dimacs(read_file(f.path));
      },
      spec);
}

}  // namespace soc

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace soc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists
/// and optional role labels ("x", "y", "cycle:3", ...).
///
/// Graphs are built with add_edge() and treated as immutable afterwards;
/// concurrent readers may share one instance.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  /// Throws InvalidParameter on out-of-range endpoints, self-loops and
  /// parallel edges.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  void set_label(Vertex v, std::string role);
  const std::map<Vertex, std::string>& labels() const { return labels_; }
  std::optional<Vertex> find_label(std::string_view role) const;

  /// Subgraph induced by `subset`; vertex i of the result is subset[i].
  Graph induced(std::span<const Vertex> subset) const;

  /// Compares index sets and adjacency; labels are ignored.
  bool same_adjacency(const Graph& other) const { return adj_ == other.adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
  std::map<Vertex, std::string> labels_;
};

Graph cycle(std::size_t n);
Graph empty_graph(std::size_t m);
Graph complete(std::size_t k);

/// Disjoint union of g1 and g2 (g2 shifted by g1.num_vertices()) plus every
/// edge between the two parts.
Graph join(const Graph& g1, const Graph& g2);

Graph wheel(std::size_t n);                                 // C_n v K_1, hub = n
Graph join_cycle_empty(std::size_t n, std::size_t m);       // C_n v mK_1
Graph g_graph(std::size_t n);                               // C_n v 2K_1, hubs "x", "y"
Graph union_g(std::size_t m, std::size_t n);                // G_m, G_n glued at y

struct UnionPart {
  const Graph* graph;
  Vertex designated;
};

struct UnionLayout {
  Graph graph;
  // index_map[p][v] is the index in `graph` of vertex v of part p.
  std::vector<std::vector<Vertex>> index_map;
};

/// Identifies the designated vertices of all parts into a single vertex.
///
/// Parts occupy contiguous index blocks in input order. The merged vertex
/// keeps the index of the first part's designated vertex, and is labeled
/// `merged_label`. Labels of part p (1-based) are carried over with a
/// "g<p>:" prefix, except for single-part unions where they are kept as is.
UnionLayout one_point_union_layout(std::span<const UnionPart> parts,
                                   const std::string& merged_label = "x");
Graph one_point_union(std::span<const UnionPart> parts,
                      const std::string& merged_label = "x");

namespace family {
struct Cycle { std::size_t n; };
struct Empty { std::size_t m; };
struct Complete { std::size_t k; };
struct Wheel { std::size_t n; };
struct JoinCycleEmpty { std::size_t n; std::size_t m; };
struct GGraph { std::size_t n; };
struct UnionG { std::size_t m; std::size_t n; };
struct FromFile { std::filesystem::path path; };
}  // namespace family

using FamilySpec = std::variant<family::Cycle, family::Empty, family::Complete,
                                family::Wheel, family::JoinCycleEmpty,
                                family::GGraph, family::UnionG, family::FromFile>;

/// Canonical text form, e.g. "union-g(8,11)" or "file(path)".
std::string describe(const FamilySpec& spec);
/// Inverse of describe(); throws InvalidParameter on unknown text.
FamilySpec parse_family(std::string_view text);

Graph build(const FamilySpec& spec);

}  // namespace soc

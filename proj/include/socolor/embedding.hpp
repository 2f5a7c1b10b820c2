#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "socolor/graph.hpp"

namespace soc {

/// Cyclic neighbor order at every vertex. Defines a combinatorial embedding
/// of its companion graph.
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(std::vector<std::vector<Vertex>> rotation)
      : rotation_(std::move(rotation)) {}

  std::size_t num_vertices() const { return rotation_.size(); }
  std::span<const Vertex> around(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<Vertex>>& data() const { return rotation_; }

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;

 private:
  std::vector<std::vector<Vertex>> rotation_;
};

struct EmbeddingCheck {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  bool euler_ok = false;  // V - E + F == 2
};

/// Traces every face: from dart (u -> v) continue with (v -> w), where w
/// follows u in the rotation at v. Throws InvalidRotation if some rotation
/// is not a permutation of the corresponding neighbor set.
EmbeddingCheck verify_embedding(const Graph& g, const RotationSystem& rot);

/// Planar rotation system for Cycle, Wheel, GGraph and UnionG. Vertex
/// indices match build(spec). Throws UnsupportedFamily otherwise.
RotationSystem embed_family(const FamilySpec& spec);

}  // namespace soc

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace treecut {

using Vertex = std::size_t;
using Weight = double;
using Mass = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge-weighted tree on vertices 0..n-1. Only obtainable through
/// validate_tree, so every instance is connected, acyclic and has
/// nonnegative weights.
class WeightedTree {
 public:
  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  struct Neighbor {
    Vertex vertex;
    Weight weight;
  };
  std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_.at(v); }

  Weight total_weight() const noexcept;

  friend bool operator==(const WeightedTree& a, const WeightedTree& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

 private:
  friend WeightedTree validate_tree(std::size_t, std::span<const Edge>);
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Checks the raw edge list and builds the tree.
/// Throws Error with BadVertexId, NegativeWeight, CycleDetected or DisconnectedGraph.
WeightedTree validate_tree(std::size_t vertex_count, std::span<const Edge> edges);

/// Multiset of tree vertices. Stored densely; a vertex with multiplicity
/// zero is simply not in the multiset.
class VertexMultiset {
 public:
  VertexMultiset() = default;

  /// Empty multiset over a tree with `vertex_count` vertices.
  explicit VertexMultiset(std::size_t vertex_count) : counts_(vertex_count, 0) {}

  /// `counts[v]` is the multiplicity of v.
  explicit VertexMultiset(std::vector<Mass> counts);

  /// Adds `count` copies of v. Throws BadVertexId.
  void add(Vertex v, Mass count = 1);

  /// Overwrites the multiplicity of v. Throws BadVertexId.
  void set(Vertex v, Mass count);

  Mass multiplicity(Vertex v) const { return counts_.at(v); }
  Mass total_mass() const noexcept { return total_; }
  std::size_t vertex_count() const noexcept { return counts_.size(); }
  std::span<const Mass> counts() const noexcept { return counts_; }

  /// Vertices with nonzero multiplicity, ascending.
  std::vector<Vertex> support() const;

  /// True when the multiset has at most one copy of every vertex.
  bool is_set() const noexcept;

  friend bool operator==(const VertexMultiset&, const VertexMultiset&) = default;

 private:
  std::vector<Mass> counts_;
  Mass total_ = 0;
};

/// Throws BadVertexId when the multiset refers to vertices the tree lacks.
void check_compatible(const WeightedTree& tree, const VertexMultiset& masses);

}  // namespace treecut

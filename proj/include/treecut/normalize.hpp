#pragma once

#include <array>
#include <limits>
#include <vector>

#include "treecut/tree.hpp"

namespace treecut {

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

enum class NodeKind : unsigned char {
  Original,  ///< vertex of the input tree (same id)
  Dummy,     ///< binarization vertex between a parent and its children
  Pendant,   ///< zero-weight leaf holding an internal vertex's mass
};

/// Rooted binary form of a (tree, multiset) pair.
///
/// Node ids 0..n-1 are the original vertices; dummies and pendant leaves
/// are appended after them. Every node has at most two children, mass
/// sits only on leaves, and every added edge that does not stand for an
/// original edge has weight 0, so distances between original vertices
/// are unchanged.
class NormalizedInstance {
 public:
  std::size_t node_count() const noexcept { return parent_.size(); }
  std::size_t original_vertex_count() const noexcept { return original_count_; }
  Vertex root() const noexcept { return root_; }
  Mass total_mass() const noexcept { return total_mass_; }

  Vertex parent(Vertex v) const { return parent_.at(v); }
  /// Weight of the edge to the parent; 0 at the root.
  Weight parent_weight(Vertex v) const { return parent_weight_.at(v); }
  std::size_t child_count(Vertex v) const { return child_count_.at(v); }
  Vertex child(Vertex v, std::size_t i) const { return children_.at(v).at(i); }
  bool is_leaf(Vertex v) const { return child_count(v) == 0; }

  Mass leaf_mass(Vertex v) const { return leaf_mass_.at(v); }
  Mass subtree_mass(Vertex v) const { return subtree_mass_.at(v); }
  Vertex origin(Vertex v) const { return origin_.at(v); }
  NodeKind kind(Vertex v) const { return kind_.at(v); }

  std::size_t dummy_count() const noexcept { return dummy_count_; }
  std::size_t pendant_count() const noexcept { return pendant_count_; }

  /// Children before parents.
  const std::vector<Vertex>& post_order() const noexcept { return post_order_; }

  /// Path length between two nodes of the normalized tree.
  Weight distance(Vertex u, Vertex v) const;

  /// Nodes of the subtree rooted at v, v first.
  std::vector<Vertex> subtree(Vertex v) const;

 private:
  friend NormalizedInstance normalize(const WeightedTree&, const VertexMultiset&, Vertex);

  Vertex add_node(Vertex parent, Weight w, NodeKind kind, Vertex origin);

  std::size_t original_count_ = 0;
  Vertex root_ = 0;
  Mass total_mass_ = 0;
  std::vector<Vertex> parent_;
  std::vector<Weight> parent_weight_;
  std::vector<std::array<Vertex, 2>> children_;
  std::vector<unsigned char> child_count_;
  std::vector<Mass> leaf_mass_;
  std::vector<Mass> subtree_mass_;
  std::vector<Vertex> origin_;
  std::vector<NodeKind> kind_;
  std::vector<std::size_t> depth_;
  std::vector<Vertex> post_order_;
  std::size_t dummy_count_ = 0;
  std::size_t pendant_count_ = 0;
};

/// Roots the tree at `root`, moves the mass of every vertex that has
/// children onto a zero-weight pendant leaf, then replaces each node with
/// more than two children by a chain of zero-weight dummies.
/// Throws BadVertexId for a bad root or incompatible multiset.
NormalizedInstance normalize(const WeightedTree& tree, const VertexMultiset& masses, Vertex root = 0);

}  // namespace treecut

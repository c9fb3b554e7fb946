#pragma once

#include <vector>

#include "treecut/tree.hpp"

namespace treecut {

/// Split of a multiset into sides A and B, as per-vertex copy counts.
struct Partition {
  std::vector<Mass> side_a;
  std::vector<Mass> side_b;

  Mass size_a() const noexcept;
  Mass size_b() const noexcept;

  /// Every copy on side A.
  static Partition all_a(const VertexMultiset& masses);
  /// Every copy on side B.
  static Partition all_b(const VertexMultiset& masses);

  Partition swapped() const { return {side_b, side_a}; }

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Throws PartitionMassMismatch unless a_v + b_v equals the multiplicity of v everywhere.
void check_partition(const VertexMultiset& masses, const Partition& partition);

/// Length of the unique u-v path. Throws BadVertexId.
Weight tree_distance(const WeightedTree& tree, Vertex u, Vertex v);

/// Row-major n*n matrix of path lengths.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const WeightedTree& tree);
  Weight operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  std::size_t size() const noexcept { return n_; }
  Weight diameter() const noexcept;

 private:
  std::size_t n_;
  std::vector<Weight> d_;
};

/// Sum of d(a, b) over all cross pairs, counting copies.
Weight cut_value_pairwise(const WeightedTree& tree, const VertexMultiset& masses,
                          const Partition& partition);
Weight cut_value_pairwise(const DistanceMatrix& distances, const VertexMultiset& masses,
                          const Partition& partition);

/// Same quantity in one traversal: each edge e is crossed by
/// x_e*(kB - y_e) + y_e*(kA - x_e) cross pairs, where (x_e, y_e) are the
/// side masses on the far side of e.
Weight cut_value_edge_decomposition(const WeightedTree& tree, const VertexMultiset& masses,
                                    const Partition& partition);

}  // namespace treecut

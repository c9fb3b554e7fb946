#include "treecut/metric.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "treecut/error.hpp"

namespace treecut {
namespace {

/// Parent links and a children-first order of the tree rooted at `root`.
struct RootedView {
  std::vector<Vertex> parent;
  std::vector<Weight> parent_weight;
  std::vector<Vertex> order;  // parents before children
};

RootedView root_at(const WeightedTree& tree, Vertex root) {
  const std::size_t n = tree.vertex_count();
  RootedView view{std::vector<Vertex>(n, n), std::vector<Weight>(n, 0.0), {}};
  view.order.reserve(n);
  view.order.push_back(root);
  view.parent[root] = root;
  for (std::size_t i = 0; i < view.order.size(); ++i) {
    const Vertex v = view.order[i];
    for (const auto& nb : tree.neighbors(v)) {
      if (nb.vertex == view.parent[v]) continue;
      view.parent[nb.vertex] = v;
      view.parent_weight[nb.vertex] = nb.weight;
      view.order.push_back(nb.vertex);
    }
  }
  return view;
}

/// Distances from `source` to every vertex.
std::vector<Weight> distances_from(const WeightedTree& tree, Vertex source) {
  const RootedView view = root_at(tree, source);
  std::vector<Weight> dist(tree.vertex_count(), 0.0);
  for (std::size_t i = 1; i < view.order.size(); ++i) {
    const Vertex v = view.order[i];
    dist[v] = dist[view.parent[v]] + view.parent_weight[v];
  }
  return dist;
}

void check_vertex(const WeightedTree& tree, Vertex v) {
  if (v >= tree.vertex_count()) throw Error(ErrorCode::BadVertexId, "no vertex " + std::to_string(v));
}

}  // namespace

Mass Partition::size_a() const noexcept { return std::accumulate(side_a.begin(), side_a.end(), Mass{0}); }
Mass Partition::size_b() const noexcept { return std::accumulate(side_b.begin(), side_b.end(), Mass{0}); }

Partition Partition::all_a(const VertexMultiset& masses) {
  return {std::vector<Mass>(masses.counts().begin(), masses.counts().end()),
          std::vector<Mass>(masses.vertex_count(), 0)};
}

Partition Partition::all_b(const VertexMultiset& masses) { return all_a(masses).swapped(); }

void check_partition(const VertexMultiset& masses, const Partition& partition) {
  const std::size_t n = masses.vertex_count();
  if (partition.side_a.size() != n || partition.side_b.size() != n)
    throw Error(ErrorCode::PartitionMassMismatch, "partition does not cover " + std::to_string(n) + " vertices");
  for (Vertex v = 0; v < n; ++v) {
    if (partition.side_a[v] + partition.side_b[v] != masses.multiplicity(v))
      throw Error(ErrorCode::PartitionMassMismatch,
                  "vertex " + std::to_string(v) + " splits " + std::to_string(partition.side_a[v]) + "+" +
                      std::to_string(partition.side_b[v]) + " but has multiplicity " +
                      std::to_string(masses.multiplicity(v)));
  }
}

Weight tree_distance(const WeightedTree& tree, Vertex u, Vertex v) {
  check_vertex(tree, u);
  check_vertex(tree, v);
  return distances_from(tree, u)[v];
}

DistanceMatrix::DistanceMatrix(const WeightedTree& tree) : n_(tree.vertex_count()), d_(n_ * n_) {
  for (Vertex u = 0; u < n_; ++u) {
    const auto row = distances_from(tree, u);
    std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(u * n_));
  }
}

Weight DistanceMatrix::diameter() const noexcept {
  return d_.empty() ? 0.0 : *std::max_element(d_.begin(), d_.end());
}

Weight cut_value_pairwise(const DistanceMatrix& distances, const VertexMultiset& masses,
                          const Partition& partition) {
  check_partition(masses, partition);
  Weight total = 0.0;
  const std::size_t n = distances.size();
  for (Vertex u = 0; u < n; ++u) {
    if (partition.side_a[u] == 0) continue;
    for (Vertex v = 0; v < n; ++v) {
      if (partition.side_b[v] == 0) continue;
      total += static_cast<double>(partition.side_a[u] * partition.side_b[v]) * distances(u, v);
    }
  }
  return total;
}

Weight cut_value_pairwise(const WeightedTree& tree, const VertexMultiset& masses, const Partition& partition) {
  check_compatible(tree, masses);
  return cut_value_pairwise(DistanceMatrix(tree), masses, partition);
}

Weight cut_value_edge_decomposition(const WeightedTree& tree, const VertexMultiset& masses,
                                    const Partition& partition) {
  check_compatible(tree, masses);
  check_partition(masses, partition);
  const RootedView view = root_at(tree, 0);
  const auto size_a = static_cast<double>(partition.size_a());
  const auto size_b = static_cast<double>(partition.size_b());
  std::vector<Mass> below_a(partition.side_a);
  std::vector<Mass> below_b(partition.side_b);
  Weight total = 0.0;
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    const Vertex v = *it;
    if (v == view.order.front()) break;
    const auto x = static_cast<double>(below_a[v]);
    const auto y = static_cast<double>(below_b[v]);
    total += view.parent_weight[v] * (x * (size_b - y) + y * (size_a - x));
    below_a[view.parent[v]] += below_a[v];
    below_b[view.parent[v]] += below_b[v];
  }
  return total;
}

}  // namespace treecut

#include "treecut/tree.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "treecut/error.hpp"

namespace treecut {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Weight WeightedTree::total_weight() const noexcept {
  Weight total = 0.0;
  for (const Edge& e : edges_) total += e.w;
  return total;
}

WeightedTree validate_tree(std::size_t vertex_count, std::span<const Edge> edges) {
  if (vertex_count == 0) throw Error(ErrorCode::EmptyInput, "tree needs at least one vertex");
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count)
      throw Error(ErrorCode::BadVertexId, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                              ") outside 0.." + std::to_string(vertex_count - 1));
    if (!(e.w >= 0.0) || !std::isfinite(e.w))
      throw Error(ErrorCode::NegativeWeight, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                                 ") has weight " + std::to_string(e.w));
  }
  DisjointSets components(vertex_count);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw Error(ErrorCode::CycleDetected, "self-loop at " + std::to_string(e.u));
    if (!components.merge(e.u, e.v))
      throw Error(ErrorCode::CycleDetected,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") closes a cycle");
  }
  if (edges.size() != vertex_count - 1)
    throw Error(ErrorCode::DisconnectedGraph, std::to_string(edges.size()) + " edges for " +
                                                  std::to_string(vertex_count) + " vertices");

  WeightedTree tree;
  tree.edges_.assign(edges.begin(), edges.end());
  tree.adjacency_.resize(vertex_count);
  for (const Edge& e : edges) {
    tree.adjacency_[e.u].push_back({e.v, e.w});
    tree.adjacency_[e.v].push_back({e.u, e.w});
  }
  return tree;
}

VertexMultiset::VertexMultiset(std::vector<Mass> counts) : counts_(std::move(counts)) {
  total_ = std::accumulate(counts_.begin(), counts_.end(), Mass{0});
}

void VertexMultiset::add(Vertex v, Mass count) {
  if (v >= counts_.size()) throw Error(ErrorCode::BadVertexId, "mass at unknown vertex " + std::to_string(v));
  counts_[v] += count;
  total_ += count;
}

void VertexMultiset::set(Vertex v, Mass count) {
  if (v >= counts_.size()) throw Error(ErrorCode::BadVertexId, "mass at unknown vertex " + std::to_string(v));
  total_ = total_ - counts_[v] + count;
  counts_[v] = count;
}

std::vector<Vertex> VertexMultiset::support() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < counts_.size(); ++v)
    if (counts_[v] > 0) out.push_back(v);
  return out;
}

bool VertexMultiset::is_set() const noexcept {
  for (Mass c : counts_)
    if (c > 1) return false;
  return true;
}

void check_compatible(const WeightedTree& tree, const VertexMultiset& masses) {
  if (masses.vertex_count() != tree.vertex_count())
    throw Error(ErrorCode::BadVertexId, "multiset covers " + std::to_string(masses.vertex_count()) +
                                            " vertices, tree has " + std::to_string(tree.vertex_count()));
}

}  // namespace treecut

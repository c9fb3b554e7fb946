#include "treecut/normalize.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "treecut/error.hpp"

namespace treecut {

Vertex NormalizedInstance::add_node(Vertex parent, Weight w, NodeKind kind, Vertex origin) {
  const Vertex id = parent_.size();
  parent_.push_back(parent);
  parent_weight_.push_back(w);
  children_.push_back({kNoVertex, kNoVertex});
  child_count_.push_back(0);
  leaf_mass_.push_back(0);
  origin_.push_back(origin);
  kind_.push_back(kind);
  if (parent != kNoVertex) children_[parent][child_count_[parent]++] = id;
  return id;
}

Weight NormalizedInstance::distance(Vertex u, Vertex v) const {
  if (u >= node_count() || v >= node_count())
    throw Error(ErrorCode::BadVertexId, "no normalized node " + std::to_string(std::max(u, v)));
  Weight total = 0.0;
  while (depth_[u] > depth_[v]) total += parent_weight_[u], u = parent_[u];
  while (depth_[v] > depth_[u]) total += parent_weight_[v], v = parent_[v];
  while (u != v) {
    total += parent_weight_[u] + parent_weight_[v];
    u = parent_[u];
    v = parent_[v];
  }
  return total;
}

std::vector<Vertex> NormalizedInstance::subtree(Vertex v) const {
  std::vector<Vertex> nodes{v};
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t c = 0; c < child_count_[nodes[i]]; ++c) nodes.push_back(children_[nodes[i]][c]);
  return nodes;
}

NormalizedInstance normalize(const WeightedTree& tree, const VertexMultiset& masses, Vertex root) {
  check_compatible(tree, masses);
  const std::size_t n = tree.vertex_count();
  if (root >= n) throw Error(ErrorCode::BadVertexId, "root " + std::to_string(root) + " not in tree");

  NormalizedInstance out;
  out.original_count_ = n;
  out.root_ = root;
  out.total_mass_ = masses.total_mass();
  for (Vertex v = 0; v < n; ++v) out.add_node(kNoVertex, 0.0, NodeKind::Original, v);

  // Breadth-first over the original tree; each vertex wires up its own
  // children (plus pendant) before they are visited.
  std::vector<Vertex> queue{root};
  std::vector<Vertex> from(n, kNoVertex);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    std::vector<std::pair<Vertex, Weight>> kids;
    for (const auto& nb : tree.neighbors(v)) {
      if (nb.vertex == from[v]) continue;
      from[nb.vertex] = v;
      queue.push_back(nb.vertex);
      kids.emplace_back(nb.vertex, nb.weight);
    }
    if (kids.empty()) {
      out.leaf_mass_[v] = masses.multiplicity(v);
      continue;
    }
    if (masses.multiplicity(v) > 0) {
      const Vertex pendant = out.add_node(kNoVertex, 0.0, NodeKind::Pendant, v);
      out.leaf_mass_[pendant] = masses.multiplicity(v);
      ++out.pendant_count_;
      kids.emplace_back(pendant, 0.0);
    }

    auto attach = [&out](Vertex parent, Vertex child, Weight w) {
      out.parent_[child] = parent;
      out.parent_weight_[child] = w;
      out.children_[parent][out.child_count_[parent]++] = child;
    };
    // Right-leaning chain: every dummy takes one real child and the next
    // dummy; the last dummy takes the final two children.
    Vertex hub = v;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const std::size_t remaining = kids.size() - i;
      attach(hub, kids[i].first, kids[i].second);
      if (remaining > 2) {
        hub = out.add_node(hub, 0.0, NodeKind::Dummy, v);
        ++out.dummy_count_;
      }
    }
  }

  const std::size_t total = out.node_count();
  out.depth_.assign(total, 0);
  out.subtree_mass_.assign(out.leaf_mass_.begin(), out.leaf_mass_.end());
  std::vector<Vertex> preorder{root};
  for (std::size_t i = 0; i < preorder.size(); ++i) {
    const Vertex v = preorder[i];
    for (std::size_t c = 0; c < out.child_count_[v]; ++c) {
      const Vertex child = out.children_[v][c];
      out.depth_[child] = out.depth_[v] + 1;
      preorder.push_back(child);
    }
  }
  // Reverse breadth-first order puts every child before its parent.
  out.post_order_.assign(preorder.rbegin(), preorder.rend());
  for (const Vertex v : out.post_order_)
    if (v != root) out.subtree_mass_[out.parent_[v]] += out.subtree_mass_[v];
  return out;
}

}  // namespace treecut

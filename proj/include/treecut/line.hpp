#pragma once

#include <span>
#include <vector>

#include "treecut/tree.hpp"

namespace treecut {

/// Points on the real line as a path instance. Vertex i sits at
/// coordinates[i]; coordinates are distinct and ascending.
struct LineInstance {
  WeightedTree tree;
  VertexMultiset masses;
  std::vector<double> coordinates;
};

/// Collapses equal coordinates into one vertex with multiplicity and
/// joins consecutive distinct coordinates by an edge of their gap.
/// Throws EmptyInput or NonFiniteCoordinate.
LineInstance line_to_tree(std::span<const double> points);

}  // namespace treecut

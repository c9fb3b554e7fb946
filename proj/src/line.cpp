#include "treecut/line.hpp"

#include <algorithm>
#include <cmath>

#include "treecut/error.hpp"

namespace treecut {

LineInstance line_to_tree(std::span<const double> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points");
  for (double x : points)
    if (!std::isfinite(x)) throw Error(ErrorCode::NonFiniteCoordinate, "coordinate is not finite");

  std::vector<double> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());

  LineInstance out;
  std::vector<Mass> counts;
  for (double x : sorted) {
    if (out.coordinates.empty() || x != out.coordinates.back()) {
      out.coordinates.push_back(x);
      counts.push_back(0);
    }
    ++counts.back();
  }
  std::vector<Edge> edges;
  for (Vertex i = 1; i < out.coordinates.size(); ++i)
    edges.push_back({i - 1, i, out.coordinates[i] - out.coordinates[i - 1]});
  out.tree = validate_tree(out.coordinates.size(), edges);
  out.masses = VertexMultiset(std::move(counts));
  return out;
}

}  // namespace treecut

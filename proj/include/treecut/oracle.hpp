#pragma once

#include <vector>

#include "treecut/metric.hpp"
#include "treecut/normalize.hpp"
#include "treecut/solver.hpp"

namespace treecut::oracle {

inline constexpr Mass kMaxOracleMass = 20;
inline constexpr Mass kMaxSubproblemMass = 15;

struct OracleResult {
  double value = 0.0;
  Partition witness;
};

/// Best value and witness for every side-A size k in 0..m, found by
/// enumerating all per-vertex count vectors. Ties keep the
/// lexicographically smallest side-A count vector.
struct ExhaustiveTable {
  std::vector<OracleResult> by_size;
  /// Number of count vectors visited; equals the product of (mult(v) + 1).
  std::size_t enumerated = 0;
};

/// Throws InstanceTooLargeForOracle when m > kMaxOracleMass.
ExhaustiveTable exhaustive_by_size(const WeightedTree& tree, const VertexMultiset& masses,
                                   Objective objective);

/// Throws InstanceTooLargeForOracle, KOutOfRange.
OracleResult brute_force_optimum(const WeightedTree& tree, const VertexMultiset& masses,
                                 const ProblemSpec& spec);

/// Optimum of the subproblem at node v scored literally: cross-pair path
/// weight inside T_v, plus t times the A-to-v path weights, plus s times
/// the B-to-v path weights, with t = (m - c_v) - s.
/// Throws InstanceTooLargeForOracle when c_v > kMaxSubproblemMass.
double direct_subproblem_value(const NormalizedInstance& instance, Vertex v, Mass p, Mass s,
                               Objective objective);

}  // namespace treecut::oracle

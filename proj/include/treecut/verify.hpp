#pragma once

#include <functional>
#include <optional>
#include <string>

#include "treecut/oracle.hpp"
#include "treecut/variant.hpp"

namespace treecut {

using SolverFn = std::function<SolveResult(const NormalizedInstance&, const ProblemSpec&)>;

struct Mismatch {
  Variant variant = Variant::MaxCut;
  Mass side_a_size = 0;
  double solver_value = 0.0;
  double oracle_value = 0.0;
  std::string reason;
};

struct VerifyOutcome {
  std::size_t checks = 0;
  std::optional<Mismatch> mismatch;

  bool passed() const noexcept { return !mismatch.has_value(); }
};

/// Runs every variant and every feasible k through `solver` and the
/// exhaustive oracle. Values must agree exactly and the returned
/// partition must evaluate to the returned value. Stops at the first
/// disagreement.
VerifyOutcome verify_instance(const WeightedTree& tree, const VertexMultiset& masses,
                              const SolverFn& solver = solve);

}  // namespace treecut

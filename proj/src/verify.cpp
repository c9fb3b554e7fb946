#include "treecut/verify.hpp"

#include <algorithm>
#include <string>

#include "treecut/error.hpp"

namespace treecut {
namespace {

struct Case {
  Variant variant;
  ProblemSpec spec;
};

std::vector<Case> cases_for(Mass m) {
  std::vector<Case> out{{Variant::MaxCut, ProblemSpec::max_cut()}};
  for (Mass k = 0; k <= m; ++k) {
    out.push_back({Variant::MaxPartition, ProblemSpec::max_partition(k)});
    out.push_back({Variant::MinPartition, ProblemSpec::min_partition(k)});
  }
  if (m % 2 == 0) {
    out.push_back({Variant::MaxBisection, ProblemSpec::max_bisection(m)});
    out.push_back({Variant::MinBisection, ProblemSpec::min_bisection(m)});
  }
  return out;
}

}  // namespace

VerifyOutcome verify_instance(const WeightedTree& tree, const VertexMultiset& masses, const SolverFn& solver) {
  const Mass m = masses.total_mass();
  const auto best_max = oracle::exhaustive_by_size(tree, masses, Objective::Maximize);
  const auto best_min = oracle::exhaustive_by_size(tree, masses, Objective::Minimize);
  const NormalizedInstance instance = normalize(tree, masses);
  const DistanceMatrix distances(tree);

  VerifyOutcome outcome;
  for (const Case& c : cases_for(m)) {
    const auto& by_size = c.spec.objective == Objective::Maximize ? best_max.by_size : best_min.by_size;
    double expected = 0.0;
    if (c.spec.side_a_size) {
      expected = by_size[*c.spec.side_a_size].value;
    } else {
      expected = std::max_element(by_size.begin(), by_size.end(), [](const auto& a, const auto& b) {
                   return a.value < b.value;
                 })->value;
    }

    const SolveResult result = solver(instance, c.spec);
    ++outcome.checks;
    auto report = [&](std::string reason) {
      outcome.mismatch = Mismatch{c.variant, result.side_a_size, result.value, expected, std::move(reason)};
    };

    if (result.value != expected) {
      report("optimal value differs from the exhaustive search");
    } else if (c.spec.side_a_size && result.side_a_size != *c.spec.side_a_size) {
      report("solver answered for a different side size");
    } else {
      try {
        check_partition(masses, result.partition);
        if (result.partition.size_a() != result.side_a_size)
          report("reconstructed partition has the wrong side size");
        else if (const double v = cut_value_pairwise(distances, masses, result.partition); v != result.value)
          report("reconstructed partition evaluates to " + std::to_string(v));
      } catch (const Error& e) {
        report(e.what());
      }
    }
    if (outcome.mismatch) break;
    for (Mass k = 0; k <= m && k < result.optimum_by_size.size(); ++k) {
      if (result.optimum_by_size[k] != by_size[k].value) {
        outcome.mismatch = Mismatch{c.variant, k, result.optimum_by_size[k], by_size[k].value,
                                    "per-size optimum differs from the exhaustive search"};
        break;
      }
    }
    if (outcome.mismatch) break;
  }
  return outcome;
}

}  // namespace treecut

#include "treecut/oracle.hpp"

#include <optional>
#include <string>

#include "treecut/error.hpp"

namespace treecut::oracle {
namespace {

/// Calls fn(side_a) for every per-vertex count vector with
/// 0 <= side_a[v] <= limits[v], in lexicographic order.
template <typename Fn>
std::size_t for_each_count_vector(const std::vector<Mass>& limits, Fn&& fn) {
  std::vector<Mass> current(limits.size(), 0);
  std::size_t visited = 0;
  while (true) {
    fn(current);
    ++visited;
    std::size_t i = current.size();
    while (i > 0 && current[i - 1] == limits[i - 1]) current[--i] = 0;
    if (i == 0) return visited;
    ++current[i - 1];
  }
}

bool better(double candidate, double incumbent, Objective objective) {
  return objective == Objective::Maximize ? candidate > incumbent : candidate < incumbent;
}

Partition complete(const VertexMultiset& masses, const std::vector<Mass>& side_a) {
  Partition out{side_a, std::vector<Mass>(side_a.size())};
  for (Vertex v = 0; v < side_a.size(); ++v) out.side_b[v] = masses.multiplicity(v) - side_a[v];
  return out;
}

void check_size(Mass mass, Mass cap, const char* what) {
  if (mass > cap)
    throw Error(ErrorCode::InstanceTooLargeForOracle,
                std::string(what) + " " + std::to_string(mass) + " exceeds oracle cap " + std::to_string(cap));
}

}  // namespace

ExhaustiveTable exhaustive_by_size(const WeightedTree& tree, const VertexMultiset& masses, Objective objective) {
  check_compatible(tree, masses);
  check_size(masses.total_mass(), kMaxOracleMass, "total mass");
  const DistanceMatrix distances(tree);
  const std::vector<Mass> limits(masses.counts().begin(), masses.counts().end());

  std::vector<std::optional<OracleResult>> best(masses.total_mass() + 1);
  ExhaustiveTable out;
  out.enumerated = for_each_count_vector(limits, [&](const std::vector<Mass>& side_a) {
    Partition candidate = complete(masses, side_a);
    const Mass k = candidate.size_a();
    const double value = cut_value_pairwise(distances, masses, candidate);
    if (!best[k] || better(value, best[k]->value, objective)) best[k] = OracleResult{value, std::move(candidate)};
  });
  for (auto& entry : best) out.by_size.push_back(std::move(*entry));
  return out;
}

OracleResult brute_force_optimum(const WeightedTree& tree, const VertexMultiset& masses, const ProblemSpec& spec) {
  check_compatible(tree, masses);
  check_spec(spec, masses.total_mass());
  check_size(masses.total_mass(), kMaxOracleMass, "total mass");
  const DistanceMatrix distances(tree);
  const std::vector<Mass> limits(masses.counts().begin(), masses.counts().end());

  std::optional<OracleResult> best;
  for_each_count_vector(limits, [&](const std::vector<Mass>& side_a) {
    Partition candidate = complete(masses, side_a);
    if (spec.side_a_size && candidate.size_a() != *spec.side_a_size) return;
    const double value = cut_value_pairwise(distances, masses, candidate);
    if (!best || better(value, best->value, spec.objective)) best = OracleResult{value, std::move(candidate)};
  });
  return std::move(*best);
}

double direct_subproblem_value(const NormalizedInstance& instance, Vertex v, Mass p, Mass s, Objective objective) {
  const Mass inside = instance.subtree_mass(v);
  check_size(inside, kMaxSubproblemMass, "subtree mass");
  const Mass outside = instance.total_mass() - inside;
  if (p > inside || s > outside)
    throw Error(ErrorCode::KOutOfRange, "cell (" + std::to_string(p) + ", " + std::to_string(s) + ") outside node " +
                                            std::to_string(v));
  const double t = static_cast<double>(outside - s);

  std::vector<Vertex> holders;
  std::vector<Mass> limits;
  for (const Vertex u : instance.subtree(v)) {
    if (instance.leaf_mass(u) == 0) continue;
    holders.push_back(u);
    limits.push_back(instance.leaf_mass(u));
  }

  std::optional<double> best;
  for_each_count_vector(limits, [&](const std::vector<Mass>& side_a) {
    Mass size_a = 0;
    for (Mass a : side_a) size_a += a;
    if (size_a != p) return;
    double value = 0.0;
    for (std::size_t i = 0; i < holders.size(); ++i) {
      const auto a_i = static_cast<double>(side_a[i]);
      const auto b_i = static_cast<double>(limits[i] - side_a[i]);
      for (std::size_t j = 0; j < holders.size(); ++j) {
        const auto b_j = static_cast<double>(limits[j] - side_a[j]);
        value += a_i * b_j * instance.distance(holders[i], holders[j]);
      }
      const double to_root = instance.distance(holders[i], v);
      value += t * a_i * to_root + static_cast<double>(s) * b_i * to_root;
    }
    if (!best || better(value, *best, objective)) best = value;
  });
  return *best;
}

}  // namespace treecut::oracle

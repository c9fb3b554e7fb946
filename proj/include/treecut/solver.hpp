#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "treecut/metric.hpp"
#include "treecut/normalize.hpp"

namespace treecut {

enum class Objective { Maximize, Minimize };

std::string_view to_string(Objective objective);

/// Objective plus an optional prescribed size k for side A.
/// Without k the best split over all sizes is taken.
struct ProblemSpec {
  Objective objective = Objective::Maximize;
  std::optional<Mass> side_a_size;

  static ProblemSpec max_cut() { return {Objective::Maximize, std::nullopt}; }
  static ProblemSpec max_partition(Mass k) { return {Objective::Maximize, k}; }
  static ProblemSpec min_partition(Mass k) { return {Objective::Minimize, k}; }
  /// Throw OddMassForBisection when `total_mass` is odd.
  static ProblemSpec max_bisection(Mass total_mass);
  static ProblemSpec min_bisection(Mass total_mass);
};

/// Throws KOutOfRange when the prescribed size exceeds `total_mass`.
void check_spec(const ProblemSpec& spec, Mass total_mass);

/// DP cells of one node v: value of the best split of P_v with p copies on
/// side A while s copies outside T_v are on side A too. The paper-style
/// parameters q = c_v - p and t = (m - c_v) - s are implied.
class CellBlock {
 public:
  CellBlock() = default;
  CellBlock(Mass subtree_mass, Mass total_mass, bool with_choices);

  Mass subtree_mass() const noexcept { return inside_; }
  Mass outside_mass() const noexcept { return outside_; }

  double value(Mass p, Mass s) const { return values_[index(p, s)]; }
  double& value(Mass p, Mass s) { return values_[index(p, s)]; }

  /// Side-A copies sent to the first child; only kept at two-child nodes.
  std::uint32_t choice(Mass p, Mass s) const { return choices_.at(index(p, s)); }
  std::uint32_t& choice(Mass p, Mass s) { return choices_.at(index(p, s)); }
  bool has_choices() const noexcept { return !choices_.empty(); }

  std::size_t cell_count() const noexcept { return values_.size(); }

 private:
  std::size_t index(Mass p, Mass s) const noexcept { return p * (outside_ + 1) + s; }

  Mass inside_ = 0;
  Mass outside_ = 0;
  std::vector<double> values_;
  std::vector<std::uint32_t> choices_;
};

/// How often each recurrence ran while filling a table.
struct TransitionCounts {
  std::size_t leaf_nodes = 0;
  std::size_t one_child_nodes = 0;
  /// Two-child nodes whose children are both part of the tree shape.
  std::size_t branching_nodes = 0;
  /// Two-child nodes whose second child is a relocation pendant; these
  /// realise the split of a vertex's own copies between the sides.
  std::size_t pendant_merge_nodes = 0;
  std::size_t cells = 0;
};

struct TransitionResult {
  double value = 0.0;
  std::uint32_t first_child_share = 0;
};

/// Node with children v1, v2 (edge weights w1, w2) and no own mass.
TransitionResult transition_two_children(const CellBlock& first, Weight first_weight,
                                         const CellBlock& second, Weight second_weight,
                                         Mass p, Mass s, Mass total_mass, Objective objective);

/// Node with a single child v1 over an edge of weight w1.
double transition_one_child(const CellBlock& child, Weight child_weight, Mass p, Mass s,
                            Mass total_mass);

/// A leaf's cells are all zero: its copies sit at the leaf itself.
CellBlock base_case_leaf(Mass leaf_mass, Mass total_mass);

class DPTable {
 public:
  Objective objective() const noexcept { return objective_; }
  Mass total_mass() const noexcept { return total_mass_; }
  const CellBlock& block(Vertex v) const { return blocks_.at(v); }
  const TransitionCounts& counts() const noexcept { return counts_; }

  /// Optimum over all splits of P with k copies on side A.
  double optimum(Mass k) const;
  Vertex root() const noexcept { return root_; }

 private:
  friend DPTable build_table(const NormalizedInstance&, Objective);
  Objective objective_ = Objective::Maximize;
  Mass total_mass_ = 0;
  Vertex root_ = 0;
  std::vector<CellBlock> blocks_;
  TransitionCounts counts_;
};

/// Fills every cell bottom-up (post-order).
DPTable build_table(const NormalizedInstance& instance, Objective objective);

/// Follows the stored choices from the root cell (k, 0) down to the
/// leaves and aggregates the side counts per original vertex.
/// Throws KOutOfRange.
Partition backtrack(const NormalizedInstance& instance, const DPTable& table, Mass k);

/// The prescribed size, or the smallest k with the best root value.
Mass choose_side_size(const DPTable& table, const ProblemSpec& spec);

struct SolveResult {
  Objective objective = Objective::Maximize;
  /// optimum_by_size[k] is the optimum with exactly k copies on side A.
  std::vector<double> optimum_by_size;
  /// Requested k, or the smallest optimal k when no size was prescribed.
  Mass side_a_size = 0;
  double value = 0.0;
  Partition partition;
  TransitionCounts counts;
};

/// Throws OddMassForBisection (through the spec constructors) or KOutOfRange.
SolveResult solve(const NormalizedInstance& instance, const ProblemSpec& spec);

}  // namespace treecut

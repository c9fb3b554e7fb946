#include "treecut/solver.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "treecut/error.hpp"

namespace treecut {
namespace {

bool improves(double candidate, double incumbent, Objective objective) {
  return objective == Objective::Maximize ? candidate > incumbent : candidate < incumbent;
}

double as_real(Mass x) { return static_cast<double>(x); }

}  // namespace

std::string_view to_string(Objective objective) {
  return objective == Objective::Maximize ? "maximize" : "minimize";
}

ProblemSpec ProblemSpec::max_bisection(Mass total_mass) {
  if (total_mass % 2 != 0)
    throw Error(ErrorCode::OddMassForBisection, "total mass " + std::to_string(total_mass) + " is odd");
  return {Objective::Maximize, total_mass / 2};
}

ProblemSpec ProblemSpec::min_bisection(Mass total_mass) {
  ProblemSpec spec = max_bisection(total_mass);
  spec.objective = Objective::Minimize;
  return spec;
}

void check_spec(const ProblemSpec& spec, Mass total_mass) {
  if (spec.side_a_size && *spec.side_a_size > total_mass)
    throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(*spec.side_a_size) + " exceeds total mass " +
                                            std::to_string(total_mass));
}

CellBlock::CellBlock(Mass subtree_mass, Mass total_mass, bool with_choices)
    : inside_(subtree_mass),
      outside_(total_mass - subtree_mass),
      values_((inside_ + 1) * (outside_ + 1), 0.0) {
  if (with_choices) choices_.assign(values_.size(), 0);
}

TransitionResult transition_two_children(const CellBlock& first, Weight first_weight,
                                         const CellBlock& second, Weight second_weight,
                                         Mass p, Mass s, Mass total_mass, Objective objective) {
  const Mass c1 = first.subtree_mass();
  const Mass c2 = second.subtree_mass();
  const Mass outside = total_mass - (c1 + c2);
  const double t = as_real(outside - s);
  const double both = first_weight + second_weight;

  const Mass lo = p > c2 ? p - c2 : 0;
  const Mass hi = std::min(c1, p);
  TransitionResult best;
  for (Mass p1 = lo; p1 <= hi; ++p1) {
    const Mass p2 = p - p1;
    const double a1 = as_real(p1), a2 = as_real(p2);
    const double b1 = as_real(c1 - p1), b2 = as_real(c2 - p2);
    // s + p2 <= outside + c2, the outside mass of the first child; same for the second.
    const double value = first.value(p1, s + p2) + second.value(p2, s + p1) +
                         (a1 * b2 + a2 * b1) * both +
                         (a1 * first_weight + a2 * second_weight) * t +
                         (b1 * first_weight + b2 * second_weight) * as_real(s);
    if (p1 == lo || improves(value, best.value, objective)) {
      best.value = value;
      best.first_child_share = static_cast<std::uint32_t>(p1);
    }
  }
  return best;
}

double transition_one_child(const CellBlock& child, Weight child_weight, Mass p, Mass s, Mass total_mass) {
  const Mass inside = child.subtree_mass();
  const double q = as_real(inside - p);
  const double t = as_real(total_mass - inside - s);
  return child.value(p, s) + as_real(p) * t * child_weight + q * as_real(s) * child_weight;
}

CellBlock base_case_leaf(Mass leaf_mass, Mass total_mass) { return CellBlock(leaf_mass, total_mass, false); }

double DPTable::optimum(Mass k) const {
  if (k > total_mass_)
    throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(k) + " exceeds total mass " +
                                            std::to_string(total_mass_));
  return blocks_.at(root_).value(k, 0);
}

DPTable build_table(const NormalizedInstance& instance, Objective objective) {
  DPTable table;
  table.objective_ = objective;
  table.total_mass_ = instance.total_mass();
  table.root_ = instance.root();
  table.blocks_.resize(instance.node_count());
  const Mass m = instance.total_mass();

  for (const Vertex v : instance.post_order()) {
    const Mass inside = instance.subtree_mass(v);
    switch (instance.child_count(v)) {
      case 0:
        table.blocks_[v] = base_case_leaf(instance.leaf_mass(v), m);
        ++table.counts_.leaf_nodes;
        break;
      case 1: {
        const Vertex c = instance.child(v, 0);
        CellBlock block(inside, m, false);
        for (Mass p = 0; p <= inside; ++p)
          for (Mass s = 0; s <= m - inside; ++s)
            block.value(p, s) = transition_one_child(table.blocks_[c], instance.parent_weight(c), p, s, m);
        table.blocks_[v] = std::move(block);
        ++table.counts_.one_child_nodes;
        break;
      }
      default: {
        const Vertex c1 = instance.child(v, 0);
        const Vertex c2 = instance.child(v, 1);
        CellBlock block(inside, m, true);
        for (Mass p = 0; p <= inside; ++p)
          for (Mass s = 0; s <= m - inside; ++s) {
            const auto best = transition_two_children(table.blocks_[c1], instance.parent_weight(c1),
                                                      table.blocks_[c2], instance.parent_weight(c2), p, s, m,
                                                      objective);
            block.value(p, s) = best.value;
            block.choice(p, s) = best.first_child_share;
          }
        table.blocks_[v] = std::move(block);
        if (instance.kind(c2) == NodeKind::Pendant)
          ++table.counts_.pendant_merge_nodes;
        else
          ++table.counts_.branching_nodes;
        break;
      }
    }
    table.counts_.cells += table.blocks_[v].cell_count();
  }
  return table;
}

Partition backtrack(const NormalizedInstance& instance, const DPTable& table, Mass k) {
  if (k > table.total_mass())
    throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(k) + " exceeds total mass " +
                                            std::to_string(table.total_mass()));
  const std::size_t n = instance.original_vertex_count();
  Partition out{std::vector<Mass>(n, 0), std::vector<Mass>(n, 0)};

  std::vector<std::tuple<Vertex, Mass, Mass>> pending{{instance.root(), k, 0}};
  while (!pending.empty()) {
    const auto [v, p, s] = pending.back();
    pending.pop_back();
    switch (instance.child_count(v)) {
      case 0:
        out.side_a[instance.origin(v)] += p;
        out.side_b[instance.origin(v)] += instance.leaf_mass(v) - p;
        break;
      case 1:
        pending.emplace_back(instance.child(v, 0), p, s);
        break;
      default: {
        const Mass p1 = table.block(v).choice(p, s);
        const Mass p2 = p - p1;
        pending.emplace_back(instance.child(v, 0), p1, s + p2);
        pending.emplace_back(instance.child(v, 1), p2, s + p1);
        break;
      }
    }
  }
  return out;
}

Mass choose_side_size(const DPTable& table, const ProblemSpec& spec) {
  check_spec(spec, table.total_mass());
  if (spec.side_a_size) return *spec.side_a_size;
  Mass best = 0;
  for (Mass k = 1; k <= table.total_mass(); ++k)
    if (improves(table.optimum(k), table.optimum(best), spec.objective)) best = k;
  return best;
}

SolveResult solve(const NormalizedInstance& instance, const ProblemSpec& spec) {
  const Mass m = instance.total_mass();
  check_spec(spec, m);
  const DPTable table = build_table(instance, spec.objective);

  SolveResult result;
  result.objective = spec.objective;
  result.counts = table.counts();
  result.optimum_by_size.resize(m + 1);
  for (Mass k = 0; k <= m; ++k) result.optimum_by_size[k] = table.optimum(k);

  result.side_a_size = choose_side_size(table, spec);
  result.value = result.optimum_by_size[result.side_a_size];
  result.partition = backtrack(instance, table, result.side_a_size);
  return result;
}

}  // namespace treecut

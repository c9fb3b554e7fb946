#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "support/random_instances.hpp"
#include "treecut/error.hpp"
#include "treecut/line.hpp"
#include "treecut/oracle.hpp"
#include "treecut/solver.hpp"

using namespace treecut;
using testing::Instance;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

SolveResult solve_raw(const Instance& inst, const ProblemSpec& spec, Vertex root = 0) {
  return solve(normalize(inst.tree, inst.masses, root), spec);
}

Instance star_leaves() {
  const std::vector<Edge> edges{{0, 1, 1.0}, {0, 2, 2.0}, {0, 3, 3.0}};
  return {validate_tree(4, edges), VertexMultiset(std::vector<Mass>{0, 1, 1, 1})};
}

}  // namespace

// Expected values below were computed by hand over every assignment and
// match oracle::brute_force_optimum (checked in test_oracle).
TEST_CASE("solve on small hand-checked instances") {
  const Instance path = testing::path_instance({1, 1}, {1, 1, 1});
  const SolveResult cut = solve_raw(path, ProblemSpec::max_cut());
  CHECK(cut.value == 3.0);
  CHECK(cut_value_pairwise(path.tree, path.masses, cut.partition) == 3.0);

  const Instance single{validate_tree(1, {}), VertexMultiset(std::vector<Mass>{2})};
  CHECK(solve_raw(single, ProblemSpec::max_cut()).value == 0.0);

  const Instance star = star_leaves();
  const SolveResult star_cut = solve_raw(star, ProblemSpec::max_cut());
  CHECK(star_cut.value == 9.0);
  CHECK(star_cut.partition.side_a[3] + star_cut.partition.side_b[3] == 1);
  CHECK(star_cut.partition.side_a[3] != star_cut.partition.side_a[1]);
  CHECK(star_cut.partition.side_a[1] == star_cut.partition.side_a[2]);

  const Instance pair = testing::path_instance({5}, {2, 1});
  CHECK(solve_raw(pair, ProblemSpec::min_partition(1)).value == 5.0);
  CHECK(solve_raw(pair, ProblemSpec::max_partition(1)).value == 10.0);
}

TEST_CASE("four unit-spaced points: min bisection is not a threshold cut") {
  const auto line = line_to_tree(std::vector<double>{0, 1, 2, 3});
  const SolveResult result = solve(normalize(line.tree, line.masses), ProblemSpec::min_bisection(4));
  CHECK(result.value == 6.0);
  CHECK(result.side_a_size == 2);
  CHECK(cut_value_pairwise(line.tree, line.masses, result.partition) == 6.0);
  const auto& a = result.partition.side_a;
  const bool threshold = (a[0] == a[1] && a[2] == a[3]);
  CHECK_FALSE(threshold);
  CHECK(solve(normalize(line.tree, line.masses), ProblemSpec::max_bisection(4)).value == 8.0);
}

TEST_CASE("spec validation") {
  CHECK(code_of([] { ProblemSpec::max_bisection(3); }) == ErrorCode::OddMassForBisection);
  CHECK(code_of([] { ProblemSpec::min_bisection(5); }) == ErrorCode::OddMassForBisection);
  CHECK(ProblemSpec::min_bisection(0).side_a_size == 0);
  const Instance path = testing::path_instance({1}, {1, 1});
  CHECK(code_of([&] { solve_raw(path, ProblemSpec::max_partition(3)); }) == ErrorCode::KOutOfRange);
  const NormalizedInstance inst = normalize(path.tree, path.masses);
  const DPTable table = build_table(inst, Objective::Maximize);
  CHECK(code_of([&] { backtrack(inst, table, 3); }) == ErrorCode::KOutOfRange);
  CHECK(code_of([&] { table.optimum(3); }) == ErrorCode::KOutOfRange);
}

TEST_CASE("leaf cells are zero") {
  const CellBlock heavy = base_case_leaf(3, 7);
  CHECK(heavy.cell_count() == 4 * 5);
  for (Mass p = 0; p <= 3; ++p)
    for (Mass s = 0; s <= 4; ++s) CHECK(heavy.value(p, s) == 0.0);
  const CellBlock empty = base_case_leaf(0, 7);
  CHECK(empty.cell_count() == 8);
  CHECK(empty.value(0, 7) == 0.0);
}

TEST_CASE("two-child transition") {
  // v with two mass-1 leaf children over unit edges, m = 2.
  const CellBlock left = base_case_leaf(1, 2);
  const CellBlock right = base_case_leaf(1, 2);
  const auto split = transition_two_children(left, 1.0, right, 1.0, 1, 0, 2, Objective::Maximize);
  CHECK(split.value == 2.0);
  CHECK(split.first_child_share == 0);  // p1 = 0 and p1 = 1 tie
  CHECK(transition_two_children(left, 1.0, right, 1.0, 2, 0, 2, Objective::Maximize).value == 0.0);
  CHECK(transition_two_children(left, 1.0, right, 1.0, 0, 0, 2, Objective::Minimize).value == 0.0);

  const CellBlock none_left = base_case_leaf(0, 3);
  const CellBlock none_right = base_case_leaf(0, 3);
  for (Mass s = 0; s <= 3; ++s)
    CHECK(transition_two_children(none_left, 4.0, none_right, 2.0, 0, s, 3, Objective::Maximize).value == 0.0);

  // Same pair of leaves with one outside copy (m = 3): each cell equals a
  // direct evaluation of the subproblem objective.
  const std::vector<Edge> edges{{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}};
  const WeightedTree tree = validate_tree(4, edges);
  const NormalizedInstance inst = normalize(tree, VertexMultiset(std::vector<Mass>{0, 1, 1, 1}));
  const DPTable table = build_table(inst, Objective::Maximize);
  for (Vertex v = 0; v < inst.node_count(); ++v) {
    const CellBlock& block = table.block(v);
    for (Mass p = 0; p <= block.subtree_mass(); ++p)
      for (Mass s = 0; s <= block.outside_mass(); ++s)
        CHECK(block.value(p, s) == oracle::direct_subproblem_value(inst, v, p, s, Objective::Maximize));
  }
}

TEST_CASE("one-child transition") {
  const Instance path = testing::path_instance({2, 3}, {0, 0, 2});
  const NormalizedInstance inst = normalize(path.tree, path.masses);
  REQUIRE(inst.child_count(1) == 1);
  const DPTable table = build_table(inst, Objective::Maximize);
  const CellBlock& child = table.block(2);
  for (Mass p = 0; p <= 2; ++p) {
    for (Mass s = 0; s <= child.outside_mass(); ++s)
      CHECK(transition_one_child(child, 0.0, p, s, 2) == child.value(p, s));
    CHECK(transition_one_child(child, 3.0, p, 0, 2) == child.value(p, 0));
  }
  CHECK(table.counts().one_child_nodes == 2);
  CHECK(table.counts().branching_nodes == 0);
  CHECK(table.counts().pendant_merge_nodes == 0);
}

TEST_CASE("every cell matches direct subproblem enumeration") {
  std::mt19937_64 rng(314);
  testing::Bounds bounds{.max_vertices = 7, .max_weight = 10, .max_multiplicity = 3, .max_mass = 9};
  for (int trial = 0; trial < 60; ++trial) {
    const Instance raw = testing::random_instance(rng, bounds);
    const NormalizedInstance inst = normalize(raw.tree, raw.masses);
    for (const Objective objective : {Objective::Maximize, Objective::Minimize}) {
      const DPTable table = build_table(inst, objective);
      for (Vertex v = 0; v < inst.node_count(); ++v) {
        const CellBlock& block = table.block(v);
        for (Mass p = 0; p <= block.subtree_mass(); ++p)
          for (Mass s = 0; s <= block.outside_mass(); ++s)
            REQUIRE(block.value(p, s) == oracle::direct_subproblem_value(inst, v, p, s, objective));
      }
    }
  }
}

TEST_CASE("path tables match direct enumeration") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> points;
    const int count = std::uniform_int_distribution<int>(1, 9)(rng);
    for (int i = 0; i < count; ++i) points.push_back(std::uniform_int_distribution<int>(0, 12)(rng));
    const auto line = line_to_tree(points);
    const NormalizedInstance inst = normalize(line.tree, line.masses);
    const DPTable table = build_table(inst, Objective::Minimize);
    for (Vertex v = 0; v < inst.node_count(); ++v)
      for (Mass p = 0; p <= table.block(v).subtree_mass(); ++p)
        for (Mass s = 0; s <= table.block(v).outside_mass(); ++s)
          REQUIRE(table.block(v).value(p, s) ==
                  oracle::direct_subproblem_value(inst, v, p, s, Objective::Minimize));
  }
}

TEST_CASE("backtracking at the extremes") {
  const Instance star = star_leaves();
  const NormalizedInstance inst = normalize(star.tree, star.masses);
  const DPTable table = build_table(inst, Objective::Maximize);
  const Partition none = backtrack(inst, table, 0);
  CHECK(none == Partition::all_b(star.masses));
  const Partition all = backtrack(inst, table, 3);
  CHECK(all == Partition::all_a(star.masses));
  CHECK(table.optimum(0) == 0.0);
  CHECK(table.optimum(3) == 0.0);
}

TEST_CASE("reconstruction soundness and table symmetry") {
  std::mt19937_64 rng(500);
  testing::Bounds bounds{.max_vertices = 8, .max_weight = 10, .max_multiplicity = 3, .max_mass = 12};
  for (int trial = 0; trial < 500; ++trial) {
    const Instance raw = testing::random_instance(rng, bounds);
    const NormalizedInstance inst = normalize(raw.tree, raw.masses);
    const Mass m = raw.masses.total_mass();
    for (const Objective objective : {Objective::Maximize, Objective::Minimize}) {
      const DPTable table = build_table(inst, objective);
      for (Mass k = 0; k <= m; ++k) {
        const Partition p = backtrack(inst, table, k);
        check_partition(raw.masses, p);
        REQUIRE(p.size_a() == k);
        REQUIRE(cut_value_pairwise(raw.tree, raw.masses, p) == table.optimum(k));
        REQUIRE(table.optimum(k) == table.optimum(m - k));
      }
      for (Vertex v = 0; v < inst.node_count(); ++v) {
        const CellBlock& b = table.block(v);
        for (Mass p = 0; p <= b.subtree_mass(); ++p)
          for (Mass s = 0; s <= b.outside_mass(); ++s) {
            REQUIRE(b.value(p, s) >= 0.0);
            REQUIRE(b.value(p, s) == b.value(b.subtree_mass() - p, b.outside_mass() - s));
          }
      }
    }
  }
}

TEST_CASE("optimum is independent of the root") {
  std::mt19937_64 rng(77);
  testing::Bounds bounds{.max_vertices = 9, .max_weight = 10, .max_multiplicity = 3, .max_mass = 14};
  for (int trial = 0; trial < 100; ++trial) {
    const Instance raw = testing::random_instance(rng, bounds);
    for (const Objective objective : {Objective::Maximize, Objective::Minimize}) {
      const auto reference = solve_raw(raw, {objective, std::nullopt}, 0).optimum_by_size;
      for (Vertex root = 1; root < raw.tree.vertex_count(); ++root)
        REQUIRE(solve_raw(raw, {objective, std::nullopt}, root).optimum_by_size == reference);
    }
  }
}

TEST_CASE("scaling weights scales every optimum") {
  std::mt19937_64 rng(4);
  testing::Bounds bounds{.max_vertices = 9, .max_weight = 10, .max_multiplicity = 3, .max_mass = 14};
  for (int trial = 0; trial < 100; ++trial) {
    const Instance raw = testing::random_instance(rng, bounds);
    std::vector<Edge> edges(raw.tree.edges().begin(), raw.tree.edges().end());
    for (Edge& e : edges) e.w *= 4.0;
    const Instance scaled{validate_tree(raw.tree.vertex_count(), edges), raw.masses};
    for (const Objective objective : {Objective::Maximize, Objective::Minimize}) {
      const NormalizedInstance base_inst = normalize(raw.tree, raw.masses);
      const NormalizedInstance scaled_inst = normalize(scaled.tree, scaled.masses);
      const DPTable base = build_table(base_inst, objective);
      const DPTable big = build_table(scaled_inst, objective);
      for (Mass k = 0; k <= raw.masses.total_mass(); ++k) {
        REQUIRE(big.optimum(k) == 4.0 * base.optimum(k));
        // The partition chosen under one weighting stays optimal under the other.
        const Partition p = backtrack(base_inst, base, k);
        REQUIRE(cut_value_pairwise(scaled.tree, scaled.masses, p) == big.optimum(k));
      }
    }
  }
}

TEST_CASE("max-cut dominates every fixed size; min-bisection beats threshold cuts") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance raw = testing::random_instance(rng, {.max_vertices = 9, .max_weight = 10, .max_multiplicity = 3, .max_mass = 16});
    const SolveResult cut = solve_raw(raw, ProblemSpec::max_cut());
    for (double v : cut.optimum_by_size) CHECK(cut.value >= v);
    CHECK(cut.value == *std::max_element(cut.optimum_by_size.begin(), cut.optimum_by_size.end()));
  }
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> points;
    const int count = 2 * std::uniform_int_distribution<int>(1, 10)(rng);
    for (int i = 0; i < count; ++i) points.push_back(std::uniform_int_distribution<int>(0, 30)(rng));
    const auto line = line_to_tree(points);
    const SolveResult best = solve(normalize(line.tree, line.masses), ProblemSpec::min_bisection(points.size()));
    std::sort(points.begin(), points.end());
    // Lower half against upper half, as a count vector.
    Partition threshold = Partition::all_b(line.masses);
    for (std::size_t i = 0; i < points.size() / 2; ++i) {
      const auto at = std::lower_bound(line.coordinates.begin(), line.coordinates.end(), points[i]) - line.coordinates.begin();
      ++threshold.side_a[at];
      --threshold.side_b[at];
    }
    CHECK(best.value <= cut_value_pairwise(line.tree, line.masses, threshold));
  }
}

TEST_CASE("line instances never branch") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> points;
    const int count = std::uniform_int_distribution<int>(1, 40)(rng);
    for (int i = 0; i < count; ++i) points.push_back(std::uniform_real_distribution<double>(-5, 5)(rng));
    const auto line = line_to_tree(points);
    const NormalizedInstance inst = normalize(line.tree, line.masses);
    const TransitionCounts counts = build_table(inst, Objective::Maximize).counts();
    CHECK(inst.dummy_count() == 0);
    CHECK(counts.branching_nodes == 0);
    CHECK(counts.pendant_merge_nodes == line.coordinates.size() - 1);
    CHECK(counts.leaf_nodes == line.coordinates.size());
  }
  const Instance star = star_leaves();
  const TransitionCounts branching = build_table(normalize(star.tree, star.masses), Objective::Maximize).counts();
  CHECK(branching.branching_nodes == 2);
}

TEST_CASE("table size matches the state count") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance raw = testing::random_instance(rng, {.max_vertices = 12, .max_weight = 5, .max_multiplicity = 3, .max_mass = 25});
    const NormalizedInstance inst = normalize(raw.tree, raw.masses);
    const Mass m = raw.masses.total_mass();
    std::size_t expected = 0;
    for (Vertex v = 0; v < inst.node_count(); ++v) expected += (inst.subtree_mass(v) + 1) * (m - inst.subtree_mass(v) + 1);
    CHECK(build_table(inst, Objective::Minimize).counts().cells == expected);
  }
}

TEST_CASE("ties resolve to the smallest first-child share") {
  const Instance star = star_leaves();
  const std::vector<Edge> equal{{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}};
  const Instance uniform{validate_tree(4, equal), star.masses};
  const SolveResult first = solve_raw(uniform, ProblemSpec::max_partition(1));
  const SolveResult again = solve_raw(uniform, ProblemSpec::max_partition(1));
  CHECK(first.partition == again.partition);
  // Vertex 1 is the first child at the root, so it never takes side A on a tie.
  CHECK(first.partition.side_a[1] == 0);
}

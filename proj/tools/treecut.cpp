// Command-line front end: solve, verify, gen, bench.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "treecut/bench.hpp"
#include "treecut/error.hpp"
#include "treecut/generate.hpp"
#include "treecut/io.hpp"
#include "treecut/line.hpp"
#include "treecut/report.hpp"
#include "treecut/verify.hpp"

namespace {

using namespace treecut;

constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInfeasible = 3;

struct LoadedInstance {
  std::string mode;
  WeightedTree tree;
  VertexMultiset masses;
  std::vector<double> coordinates;
};

LoadedInstance load(const std::string& path, const std::string& format) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    in = &file;
  }
  if (format == "points") {
    auto line = line_to_tree(io::parse_points(*in));
    return {"points", std::move(line.tree), std::move(line.masses), std::move(line.coordinates)};
  }
  auto parsed = io::parse_instance(*in);
  return {"tree", std::move(parsed.tree), std::move(parsed.masses), {}};
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

struct SolveFlags {
  std::string input = "-";
  std::string format = "tree";
  std::string variant;
  std::optional<Mass> k;
  bool all_k = false;
  std::string output = "json";
  std::size_t root = 0;
  std::uint64_t seed = 0;
};

int run_solve(const SolveFlags& flags) {
  const LoadedInstance loaded = load(flags.input, flags.format);
  const Variant variant = parse_variant(flags.variant);
  const ProblemSpec spec = make_spec(variant, loaded.masses.total_mass(), flags.k);

  RunReport report;
  auto clock = std::chrono::steady_clock::now();
  const NormalizedInstance instance = normalize(loaded.tree, loaded.masses, flags.root);
  report.timings.normalize_ms = elapsed_ms(clock);

  clock = std::chrono::steady_clock::now();
  const DPTable table = build_table(instance, spec.objective);
  const Mass k = choose_side_size(table, spec);
  report.timings.solve_ms = elapsed_ms(clock);

  clock = std::chrono::steady_clock::now();
  report.partition = backtrack(instance, table, k);
  report.timings.backtrack_ms = elapsed_ms(clock);

  report.mode = loaded.mode;
  report.vertex_count = loaded.tree.vertex_count();
  report.total_mass = loaded.masses.total_mass();
  report.variant = variant;
  report.side_a_size = k;
  report.value = table.optimum(k);
  report.coordinates = loaded.coordinates;
  if (flags.all_k) {
    std::vector<double> values;
    for (Mass j = 0; j <= report.total_mass; ++j) values.push_back(table.optimum(j));
    report.optimum_by_size = std::move(values);
  }

  if (flags.output == "text")
    std::cout << to_text(report);
  else
    std::cout << to_json(report).dump(2) << '\n';
  return 0;
}

struct VerifyFlags {
  std::string input = "-";
  std::string format = "tree";
  bool random = false;
  std::size_t trials = 100;
  std::size_t max_n = 7;
  std::uint64_t seed = 1;
  Mass max_mult = 3;
  Mass max_mass = 8;
  std::uint64_t max_weight = 10;
};

void print_mismatch(const Mismatch& mismatch, const WeightedTree& tree, const VertexMultiset& masses) {
  std::cout << "FAIL: " << to_string(mismatch.variant) << " k=" << mismatch.side_a_size
            << ": solver " << io::format_number(mismatch.solver_value) << ", oracle "
            << io::format_number(mismatch.oracle_value) << " (" << mismatch.reason << ")\n"
            << "# counterexample\n"
            << io::instance_text(tree, masses);
}

int run_verify(const VerifyFlags& flags) {
  if (!flags.random) {
    const LoadedInstance loaded = load(flags.input, flags.format);
    const VerifyOutcome outcome = verify_instance(loaded.tree, loaded.masses);
    if (!outcome.passed()) {
      print_mismatch(*outcome.mismatch, loaded.tree, loaded.masses);
      return kExitMismatch;
    }
    std::cout << "PASS: 1 instance, " << outcome.checks << " checks\n";
    return 0;
  }

  if (flags.max_n == 0) throw Error(ErrorCode::ParseError, "--max-n must be at least 1");
  std::mt19937_64 rng(flags.seed);
  std::size_t checks = 0;
  for (std::size_t trial = 0; trial < flags.trials; ++trial) {
    gen::Options options;
    options.shape = gen::Shape::RandomTree;
    options.vertex_count = std::uniform_int_distribution<std::size_t>(1, flags.max_n)(rng);
    options.max_weight = flags.max_weight;
    options.min_multiplicity = 0;
    options.max_multiplicity = flags.max_mult;
    auto instance = gen::generate(options, rng);
    gen::trim_mass(instance.masses, flags.max_mass);
    const VerifyOutcome outcome = verify_instance(instance.tree, instance.masses);
    checks += outcome.checks;
    if (!outcome.passed()) {
      std::cout << "trial " << trial << '\n';
      print_mismatch(*outcome.mismatch, instance.tree, instance.masses);
      return kExitMismatch;
    }
  }
  std::cout << "PASS: " << flags.trials << " instances, " << checks << " checks\n";
  return 0;
}

struct GenFlags {
  std::string type = "random-tree";
  std::size_t n = 1;
  std::uint64_t max_weight = 10;
  Mass max_mult = 1;
  std::uint64_t seed = 0;
};

int run_gen(const GenFlags& flags) {
  gen::Options options;
  options.shape = gen::parse_shape(flags.type);
  options.vertex_count = flags.n;
  options.max_weight = flags.max_weight;
  options.max_multiplicity = flags.max_mult;
  const auto instance = gen::generate(options, flags.seed);
  io::write_instance(std::cout, instance.tree, instance.masses);
  return 0;
}

struct BenchFlags {
  std::vector<std::size_t> sizes{50, 100, 200};
  std::string variant = "min-bisection";
  std::string family = "path";
  std::uint64_t seed = 1;
  std::size_t repeats = 3;
};

int run_bench(const BenchFlags& flags) {
  const auto rows = bench::run(bench::parse_family(flags.family), parse_variant(flags.variant), flags.sizes,
                               flags.seed, flags.repeats);
  std::cout << "size,mean_ms,stddev_ms\n";
  for (const auto& row : rows) std::cout << row.size << ',' << row.mean_ms << ',' << row.stddev_ms << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact optimal cuts and partitions of multisets in tree metrics"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("--input", solve_flags.input, "Instance file, '-' for stdin");
  solve_cmd->add_option("--format", solve_flags.format)->check(CLI::IsMember({"tree", "points"}));
  solve_cmd->add_option("--variant", solve_flags.variant)
      ->required()
      ->check(CLI::IsMember({"max-cut", "max-partition", "min-partition", "max-bisection", "min-bisection"}));
  solve_cmd->add_option("--k", solve_flags.k, "Side A size for *-partition");
  solve_cmd->add_flag("--all-k", solve_flags.all_k, "Report the optimum for every side size");
  solve_cmd->add_option("--output", solve_flags.output)->check(CLI::IsMember({"json", "text"}));
  solve_cmd->add_option("--root", solve_flags.root, "Root vertex used for the dynamic program");
  solve_cmd->add_option("--seed", solve_flags.seed, "Ignored");

  VerifyFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the solver against exhaustive search");
  verify_cmd->add_option("--input", verify_flags.input);
  verify_cmd->add_option("--format", verify_flags.format)->check(CLI::IsMember({"tree", "points"}));
  verify_cmd->add_flag("--random", verify_flags.random, "Check generated instances instead of --input");
  verify_cmd->add_option("--trials", verify_flags.trials);
  verify_cmd->add_option("--max-n", verify_flags.max_n);
  verify_cmd->add_option("--seed", verify_flags.seed);
  verify_cmd->add_option("--max-mult", verify_flags.max_mult);
  verify_cmd->add_option("--max-mass", verify_flags.max_mass);
  verify_cmd->add_option("--max-weight", verify_flags.max_weight);

  GenFlags gen_flags;
  auto* gen_cmd = app.add_subcommand("gen", "Print a generated instance");
  gen_cmd->add_option("--type", gen_flags.type)
      ->check(CLI::IsMember({"random-tree", "path", "star", "caterpillar"}));
  gen_cmd->add_option("--n", gen_flags.n)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--max-weight", gen_flags.max_weight);
  gen_cmd->add_option("--max-mult", gen_flags.max_mult)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen_flags.seed)->required();

  BenchFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "Time solves on generated set instances, CSV output");
  bench_cmd->add_option("--sizes", bench_flags.sizes)->delimiter(',');
  bench_cmd->add_option("--variant", bench_flags.variant);
  bench_cmd->add_option("--family", bench_flags.family)->check(CLI::IsMember({"path", "random-tree"}));
  bench_cmd->add_option("--seed", bench_flags.seed);
  bench_cmd->add_option("--repeats", bench_flags.repeats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*solve_cmd) return run_solve(solve_flags);
    if (*verify_cmd) return run_verify(verify_flags);
    if (*gen_cmd) return run_gen(gen_flags);
    if (*bench_cmd) return run_bench(bench_flags);
  } catch (const Error& e) {
    std::cerr << "treecut: " << e.what() << '\n';
    return e.infeasible() ? kExitInfeasible : kExitBadInput;
  }
  return kExitBadInput;
}

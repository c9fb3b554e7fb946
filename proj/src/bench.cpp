#include "treecut/bench.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "treecut/error.hpp"
#include "treecut/generate.hpp"

namespace treecut::bench {

Family parse_family(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "random-tree") return Family::RandomTree;
  throw Error(ErrorCode::ParseError, "unknown bench family '" + std::string(name) + "'");
}

std::vector<Row> run(Family family, Variant variant, std::span<const std::size_t> sizes, std::uint64_t seed,
                     std::size_t repeats) {
  std::vector<Row> rows;
  std::mt19937_64 rng(seed);
  for (const std::size_t n : sizes) {
    gen::Options options;
    options.shape = family == Family::Path ? gen::Shape::Path : gen::Shape::RandomTree;
    options.vertex_count = n;
    options.max_weight = 100;
    auto instance = gen::generate(options, rng);
    if (n % 2 != 0 && (variant == Variant::MaxBisection || variant == Variant::MinBisection))
      instance.masses.set(n - 1, 0);
    const Mass m = instance.masses.total_mass();

    std::vector<double> samples;
    for (std::size_t r = 0; r < std::max<std::size_t>(repeats, 1); ++r) {
      const auto start = std::chrono::steady_clock::now();
      const NormalizedInstance normalized = normalize(instance.tree, instance.masses);
      solve(normalized, make_spec(variant, m, m / 2));
      const auto stop = std::chrono::steady_clock::now();
      samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
    double spread = 0.0;
    for (double x : samples) spread += (x - mean) * (x - mean);
    const double stddev = samples.size() > 1 ? std::sqrt(spread / static_cast<double>(samples.size() - 1)) : 0.0;
    rows.push_back({n, mean, stddev});
  }
  return rows;
}

}  // namespace treecut::bench

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "treecut/variant.hpp"

namespace treecut::bench {

/// Benchmarks run on set instances: every vertex carries one copy.
enum class Family { Path, RandomTree };

Family parse_family(std::string_view name);

struct Row {
  std::size_t size = 0;
  double mean_ms = 0.0;
  double stddev_ms = 0.0;
};

/// Times normalize + solve end to end, `repeats` times per size, on
/// instances with integer weights in [0, 100]. *-partition variants use
/// k = floor(n/2); bisections on odd n drop one vertex's copy.
std::vector<Row> run(Family family, Variant variant, std::span<const std::size_t> sizes,
                     std::uint64_t seed, std::size_t repeats);

}  // namespace treecut::bench

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "treecut/io.hpp"

namespace treecut::gen {

enum class Shape { RandomTree, Path, Star, Caterpillar };

/// Throws Error(ParseError) for unknown names.
Shape parse_shape(std::string_view name);

struct Options {
  Shape shape = Shape::RandomTree;
  std::size_t vertex_count = 1;
  std::uint64_t max_weight = 10;
  Mass min_multiplicity = 1;
  Mass max_multiplicity = 1;
};

/// Random-tree picks a uniform parent among 0..i-1 for vertex i. A
/// caterpillar is a spine of ceil(n/2) vertices with the rest hung off
/// it round-robin. Weights are uniform integers in [0, max_weight],
/// multiplicities uniform in [min_multiplicity, max_multiplicity].
io::TreeInstance generate(const Options& options, std::mt19937_64& rng);
io::TreeInstance generate(const Options& options, std::uint64_t seed);

/// Lowers multiplicities, last vertex first, until the total is at most `max_mass`.
void trim_mass(VertexMultiset& masses, Mass max_mass);

}  // namespace treecut::gen

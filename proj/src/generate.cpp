#include "treecut/generate.hpp"

#include <string>

#include "treecut/error.hpp"

namespace treecut::gen {

Shape parse_shape(std::string_view name) {
  if (name == "random-tree") return Shape::RandomTree;
  if (name == "path") return Shape::Path;
  if (name == "star") return Shape::Star;
  if (name == "caterpillar") return Shape::Caterpillar;
  throw Error(ErrorCode::ParseError, "unknown instance type '" + std::string(name) + "'");
}

io::TreeInstance generate(const Options& options, std::mt19937_64& rng) {
  const std::size_t n = options.vertex_count;
  if (n == 0) throw Error(ErrorCode::EmptyInput, "need at least one vertex");
  if (options.min_multiplicity > options.max_multiplicity)
    throw Error(ErrorCode::ParseError, "min multiplicity exceeds max multiplicity");

  std::uniform_int_distribution<std::uint64_t> weight(0, options.max_weight);
  const std::size_t spine = (n + 1) / 2;
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) {
    Vertex parent = 0;
    switch (options.shape) {
      case Shape::RandomTree: parent = std::uniform_int_distribution<Vertex>(0, i - 1)(rng); break;
      case Shape::Path: parent = i - 1; break;
      case Shape::Star: parent = 0; break;
      case Shape::Caterpillar: parent = i < spine ? i - 1 : (i - spine) % spine; break;
    }
    edges.push_back({parent, i, static_cast<double>(weight(rng))});
  }

  std::uniform_int_distribution<Mass> multiplicity(options.min_multiplicity, options.max_multiplicity);
  std::vector<Mass> counts(n);
  for (auto& c : counts) c = multiplicity(rng);
  return {validate_tree(n, edges), VertexMultiset(std::move(counts))};
}

io::TreeInstance generate(const Options& options, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return generate(options, rng);
}

void trim_mass(VertexMultiset& masses, Mass max_mass) {
  for (Vertex v = masses.vertex_count(); v-- > 0 && masses.total_mass() > max_mass;) {
    const Mass excess = masses.total_mass() - max_mass;
    const Mass current = masses.multiplicity(v);
    masses.set(v, current > excess ? current - excess : 0);
  }
}

}  // namespace treecut::gen

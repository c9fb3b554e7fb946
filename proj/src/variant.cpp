#include "treecut/variant.hpp"

#include <string>

#include "treecut/error.hpp"

namespace treecut {

Variant parse_variant(std::string_view name) {
  if (name == "max-cut") return Variant::MaxCut;
  if (name == "max-partition") return Variant::MaxPartition;
  if (name == "min-partition") return Variant::MinPartition;
  if (name == "max-bisection") return Variant::MaxBisection;
  if (name == "min-bisection") return Variant::MinBisection;
  throw Error(ErrorCode::ParseError, "unknown variant '" + std::string(name) + "'");
}

std::string_view to_string(Variant variant) {
  switch (variant) {
    case Variant::MaxCut: return "max-cut";
    case Variant::MaxPartition: return "max-partition";
    case Variant::MinPartition: return "min-partition";
    case Variant::MaxBisection: return "max-bisection";
    case Variant::MinBisection: return "min-bisection";
  }
  return "unknown";
}

bool needs_size(Variant variant) { return variant == Variant::MaxPartition || variant == Variant::MinPartition; }

ProblemSpec make_spec(Variant variant, Mass total_mass, std::optional<Mass> k) {
  if (needs_size(variant) && !k)
    throw Error(ErrorCode::KOutOfRange, std::string(to_string(variant)) + " needs --k");
  ProblemSpec spec;
  switch (variant) {
    case Variant::MaxCut: spec = ProblemSpec::max_cut(); break;
    case Variant::MaxPartition: spec = ProblemSpec::max_partition(*k); break;
    case Variant::MinPartition: spec = ProblemSpec::min_partition(*k); break;
    case Variant::MaxBisection: spec = ProblemSpec::max_bisection(total_mass); break;
    case Variant::MinBisection: spec = ProblemSpec::min_bisection(total_mass); break;
  }
  check_spec(spec, total_mass);
  return spec;
}

}  // namespace treecut

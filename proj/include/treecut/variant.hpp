#pragma once

#include <optional>
#include <string_view>

#include "treecut/solver.hpp"

namespace treecut {

/// The five problem variants exposed on the command line.
enum class Variant { MaxCut, MaxPartition, MinPartition, MaxBisection, MinBisection };

/// Accepts max-cut, max-partition, min-partition, max-bisection, min-bisection.
/// Throws Error(ParseError).
Variant parse_variant(std::string_view name);
std::string_view to_string(Variant variant);

bool needs_size(Variant variant);

/// Throws KOutOfRange when a *-partition variant lacks k, and
/// OddMassForBisection for an odd bisection.
ProblemSpec make_spec(Variant variant, Mass total_mass, std::optional<Mass> k = std::nullopt);

}  // namespace treecut

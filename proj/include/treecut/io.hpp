#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "treecut/line.hpp"
#include "treecut/tree.hpp"

namespace treecut::io {

struct TreeInstance {
  WeightedTree tree;
  VertexMultiset masses;
};

/// Parses the line-oriented instance format:
///
///   tree <n>
///   edge <u> <v> <w>      (n-1 lines)
///   mass <v> <count>      (zero or more)
///
/// '#' starts a comment. Repeated mass lines for one vertex accumulate.
/// Throws Error(ParseError) on syntax problems and the tree validation
/// errors otherwise.
TreeInstance parse_instance(std::istream& in);
TreeInstance parse_instance_string(const std::string& text);

/// One point per line: `<coordinate>` or `<coordinate> x<count>`.
std::vector<double> parse_points(std::istream& in);
std::vector<double> parse_points_string(const std::string& text);

/// Shortest decimal that reads back to the same double.
std::string format_number(double value);

void write_instance(std::ostream& out, const WeightedTree& tree, const VertexMultiset& masses);
std::string instance_text(const WeightedTree& tree, const VertexMultiset& masses);

}  // namespace treecut::io

#include "treecut/io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string_view>

#include "treecut/error.hpp"

namespace treecut::io {
namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

template <typename T>
T number(std::string_view token, std::size_t line_no) {
  T value{};
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size())
    fail(line_no, "cannot read '" + std::string(token) + "' as a number");
  return value;
}

}  // namespace

TreeInstance parse_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> vertex_count;
  std::vector<Edge> edges;
  std::vector<std::pair<Vertex, Mass>> mass_lines;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (!vertex_count) {
      if (tok[0] != "tree" || tok.size() != 2) fail(line_no, "expected 'tree <n>'");
      vertex_count = number<std::size_t>(tok[1], line_no);
      if (*vertex_count == 0) fail(line_no, "tree needs at least one vertex");
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) fail(line_no, "expected 'edge <u> <v> <w>'");
      if (!mass_lines.empty()) fail(line_no, "edge after mass lines");
      edges.push_back({number<Vertex>(tok[1], line_no), number<Vertex>(tok[2], line_no), number<double>(tok[3], line_no)});
    } else if (tok[0] == "mass") {
      if (tok.size() != 3) fail(line_no, "expected 'mass <v> <count>'");
      const auto count = number<Mass>(tok[2], line_no);
      if (count == 0) fail(line_no, "mass count must be at least 1");
      mass_lines.emplace_back(number<Vertex>(tok[1], line_no), count);
    } else {
      fail(line_no, "unknown directive '" + std::string(tok[0]) + "'");
    }
  }
  if (!vertex_count) throw Error(ErrorCode::ParseError, "missing 'tree <n>' header");

  TreeInstance out{validate_tree(*vertex_count, edges), VertexMultiset(*vertex_count)};
  for (const auto& [v, count] : mass_lines) out.masses.add(v, count);
  return out;
}

TreeInstance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::vector<double> parse_points(std::istream& in) {
  std::vector<double> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok.size() > 2) fail(line_no, "expected '<coordinate>' or '<coordinate> x<count>'");
    const auto x = number<double>(tok[0], line_no);
    std::size_t count = 1;
    if (tok.size() == 2) {
      if (tok[1].size() < 2 || tok[1][0] != 'x') fail(line_no, "count must look like x<count>");
      count = number<std::size_t>(tok[1].substr(1), line_no);
      if (count == 0) fail(line_no, "count must be at least 1");
    }
    points.insert(points.end(), count, x);
  }
  return points;
}

std::vector<double> parse_points_string(const std::string& text) {
  std::istringstream in(text);
  return parse_points(in);
}

std::string format_number(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

void write_instance(std::ostream& out, const WeightedTree& tree, const VertexMultiset& masses) {
  out << "tree " << tree.vertex_count() << '\n';
  for (const Edge& e : tree.edges()) out << "edge " << e.u << ' ' << e.v << ' ' << format_number(e.w) << '\n';
  for (const Vertex v : masses.support()) out << "mass " << v << ' ' << masses.multiplicity(v) << '\n';
}

std::string instance_text(const WeightedTree& tree, const VertexMultiset& masses) {
  std::ostringstream out;
  write_instance(out, tree, masses);
  return out.str();
}

}  // namespace treecut::io

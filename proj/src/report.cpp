#include "treecut/report.hpp"

#include <sstream>

#include "treecut/io.hpp"

namespace treecut {
namespace {

std::string side_listing(const RunReport& report, const std::vector<Mass>& side) {
  std::ostringstream out;
  bool first = true;
  for (Vertex v = 0; v < side.size(); ++v) {
    if (side[v] == 0) continue;
    out << (first ? "" : " ");
    first = false;
    if (report.coordinates.empty())
      out << v;
    else
      out << io::format_number(report.coordinates[v]);
    if (side[v] > 1) out << 'x' << side[v];
  }
  return first ? "(empty)" : out.str();
}

}  // namespace

nlohmann::ordered_json to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["instance"] = {{"mode", report.mode}, {"n", report.vertex_count}, {"m", report.total_mass}};
  j["variant"] = std::string(to_string(report.variant));
  j["k"] = report.side_a_size;
  j["value"] = report.value;
  j["sizes"] = {{"a", report.partition.size_a()}, {"b", report.partition.size_b()}};

  auto sides = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < report.partition.side_a.size(); ++v) {
    const Mass a = report.partition.side_a[v];
    const Mass b = report.partition.side_b[v];
    if (a + b == 0) continue;
    nlohmann::ordered_json entry{{"vertex", v}};
    if (!report.coordinates.empty()) entry["coordinate"] = report.coordinates[v];
    entry["a"] = a;
    entry["b"] = b;
    sides.push_back(std::move(entry));
  }
  j["partition"] = std::move(sides);
  if (report.optimum_by_size) j["optimum_by_size"] = *report.optimum_by_size;
  j["timings_ms"] = {{"normalize", report.timings.normalize_ms},
                     {"solve", report.timings.solve_ms},
                     {"backtrack", report.timings.backtrack_ms}};
  j["solver"] = {{"tie_break", "smallest first-child share"}, {"version", kVersion}};
  return j;
}

std::string to_text(const RunReport& report) {
  std::ostringstream out;
  out << "variant: " << to_string(report.variant) << '\n'
      << "instance: " << report.mode << ", n = " << report.vertex_count << ", m = " << report.total_mass << '\n'
      << "k: " << report.side_a_size << '\n'
      << "value: " << io::format_number(report.value) << '\n'
      << "side A (" << report.partition.size_a() << "): " << side_listing(report, report.partition.side_a) << '\n'
      << "side B (" << report.partition.size_b() << "): " << side_listing(report, report.partition.side_b) << '\n';
  if (report.optimum_by_size) {
    out << "optimum by size:";
    for (double v : *report.optimum_by_size) out << ' ' << io::format_number(v);
    out << '\n';
  }
  out << "timings (ms): normalize " << report.timings.normalize_ms << ", solve " << report.timings.solve_ms
      << ", backtrack " << report.timings.backtrack_ms << '\n';
  return out.str();
}

}  // namespace treecut

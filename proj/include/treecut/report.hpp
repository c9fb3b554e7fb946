#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "treecut/solver.hpp"
#include "treecut/variant.hpp"

namespace treecut {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kVersion = "1.0.0";

struct PhaseTimings {
  double normalize_ms = 0.0;
  double solve_ms = 0.0;
  double backtrack_ms = 0.0;
};

struct RunReport {
  std::string mode;  ///< "tree" or "points"
  std::size_t vertex_count = 0;
  Mass total_mass = 0;
  Variant variant = Variant::MaxCut;
  Mass side_a_size = 0;
  double value = 0.0;
  Partition partition;
  /// Point coordinate of each vertex in points mode.
  std::vector<double> coordinates;
  std::optional<std::vector<double>> optimum_by_size;
  PhaseTimings timings;
};

nlohmann::ordered_json to_json(const RunReport& report);
std::string to_text(const RunReport& report);

}  // namespace treecut

#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "match_ybo/diagrams.hpp"

namespace match_ybo {

enum class SuiteLevel { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 10;

// Quick trims sizes (N <= 4, one prime, one seed); Full runs the stated scope.
CriterionResult run_criterion(int id, SuiteLevel level);
std::vector<CriterionResult> run_acceptance(SuiteLevel level, std::ostream* progress = nullptr);
std::string format_result(const CriterionResult& r);

// Configuration from per-edge labels over {0,f,a,/} listed in the order
// 12,13,23,14,24,34,... ; counties ordered by least vertex.
Configuration configuration_from_edge_string(int n, std::string_view labels);

}  // namespace match_ybo

#pragma once

#include <array>
#include <string>
#include <vector>

#include "match_ybo/matchcat.hpp"

namespace match_ybo {

enum class ResidualSource { Direct, Constraints, Subsets };

std::string to_string(ResidualSource s);
ResidualSource parse_source(const std::string& name);

struct Witness {
  TensorWord row;          // direct and subsets
  TensorWord col;
  Scalar value;
  std::vector<int> subset; // subsets: the 3-subset; constraints: labels playing 1,2,3
  int equation = 0;        // constraints: 1-based index into base_constraints
};

struct ResidualReport {
  bool zero = true;
  std::vector<Witness> witnesses;  // truncated at kMaxWitnesses
  ResidualSource source = ResidualSource::Direct;
  std::size_t nonzero_count = 0;   // before truncation
  std::vector<std::vector<int>> failing_subsets;  // subsets route only
};

inline constexpr std::size_t kMaxWitnesses = 16;

// (S x 1)(1 x S)(S x 1) - (1 x S)(S x 1)(1 x S) at level 3.
ResidualReport ybe_residual_direct(const MatchMatrix2& m);

// The eight base equations on restrict(m, {i,j,k}), labels renamed 1,2,3.
std::array<Scalar, 8> base_constraints(const MatchMatrix2& m, int i, int j, int k);

// Base equations plus their images under all relabellings of every triple;
// for n = 2 only the five pair equations.
ResidualReport constraint_residuals(const MatchMatrix2& m);

ResidualReport is_solution_by_subsets(const MatchMatrix2& m);

// Invertible and direct residual zero.
bool is_solution(const MatchMatrix2& m);

}  // namespace match_ybo

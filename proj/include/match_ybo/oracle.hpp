#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "match_ybo/classify.hpp"
#include "match_ybo/matchcat.hpp"

namespace match_ybo {

// Residue modulo an odd prime.
class FieldElement {
 public:
  FieldElement(std::int64_t value, unsigned prime);
  unsigned residue() const { return residue_; }
  unsigned prime() const { return prime_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inverse() const;  // throws on zero
  bool operator==(const FieldElement&) const = default;

 private:
  unsigned residue_;
  unsigned prime_;
};

// H-type of the three edges plus optional vertex conditions: for edge e,
// same_vertex[e] = true asks its endpoints' scalars to agree (f), false to
// differ (a).
struct FibrePattern {
  TriangleH labels{};
  std::array<std::optional<bool>, 3> same_vertex{};
  bool operator==(const FibrePattern&) const = default;
};

// "/,+,+", "/++", or refined "0,a+,f+".
FibrePattern parse_pattern(std::string_view text);
std::string to_string(const FibrePattern& p);

// Entries v1 v2 v3, then (a,b,c,d) for edges 12, 13, 23.
using FibrePoint = std::array<unsigned, 15>;

// Hits are taken in lower-1 gauge (c = 1 on every edge with b*c != 0);
// the X-action moves every solution to exactly one such point.
void for_each_fibre_solution(const FibrePattern& t, unsigned prime,
                             const std::function<void(const FibrePoint&)>& visit);

struct FibreResult {
  FibrePattern pattern;
  unsigned prime = 0;
  std::uint64_t count = 0;
  std::vector<FibrePoint> sample;
  bool matches_family = true;  // vacuous when count == 0
  std::uint64_t family_misses = 0;
  bool x_closed = true;        // sampled rescalings stayed solutions
  std::string family;
};

FibreResult enumerate_fibre(const FibrePattern& t, unsigned prime, std::size_t keep = 32);

// All Yang-Baxter polynomials vanish and every block is invertible.
bool fibre_satisfies(const FibrePoint& x, unsigned prime);
bool conforms(const FibrePattern& t, const FibrePoint& x);
bool in_family(const FibrePattern& t, const FibrePoint& x, unsigned prime);
std::string family_description(const TriangleH& t);

// x_normalize then reduce entries mod p; nullopt if a denominator vanishes.
std::optional<FibrePoint> reduce_mod_p(const MatchMatrix2& m, unsigned prime);

// Distinct nonzero residual polynomials of the symbolic level-3 equation.
std::size_t ybe_polynomial_count();

// One element per orbit of the triangle group, in table order.
std::vector<TriangleH> fibre_representatives();
std::vector<FibreResult> fibre_report(unsigned prime);

}  // namespace match_ybo

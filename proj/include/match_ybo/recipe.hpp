#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "match_ybo/diagrams.hpp"
#include "match_ybo/matchcat.hpp"

namespace match_ybo {

// Nations are numbered 1.. in the order Configuration keeps them (least vertex).
using NationPair = std::pair<int, int>;  // first < second

struct ParamPoint {
  std::map<NationPair, Scalar> mu;
  // Between-nation datum when only the product b*c is known and has no
  // rational square root; rec then emits [[0, mu_sq],[1, 0]].
  std::map<NationPair, Scalar> mu_sq;
  std::map<int, Scalar> alpha;
  std::map<int, Scalar> beta;  // only for nations with at least two counties

  bool operator==(const ParamPoint&) const = default;
};

struct Germ {
  Configuration config;
  ParamPoint params;

  bool operator==(const Germ&) const = default;
};

// Throws InvalidInput when params do not fit config.
void validate(const Germ& g);

MatchMatrix2 rec(const Germ& g);

// Deterministic in (c, seed); values chosen so that eigenvalue collisions
// only come from the configuration itself.
ParamPoint generic_point(const Configuration& c, std::uint64_t seed);

// MATCH_YBO_SEED if set, otherwise a fixed default.
std::uint64_t default_seed();

// Relabel vertices by w, carrying each nation's parameters along.
Germ transport_germ(const Germ& g, const Permutation& w);
// Reverse county order in every nation; alpha/beta swap where the tags do.
Germ flip_germ(const Germ& g);

}  // namespace match_ybo

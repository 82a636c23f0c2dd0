#pragma once

#include <string>
#include <vector>

#include "match_ybo/diagrams.hpp"
#include "match_ybo/matchcat.hpp"
#include "match_ybo/recipe.hpp"

namespace match_ybo {

using Spectrum = std::vector<Scalar>;

struct Signature {
  std::vector<int> parts;  // descending
  int total() const;
  std::string to_string() const;  // "(6,3)"
  bool operator==(const Signature&) const = default;
};

// Throws IrrationalSpectrum when a block has a non-square discriminant.
Spectrum spectrum(const MatchMatrix2& m);
Signature degeneracy_partition(const Spectrum& eig);

// Per-nation contributions and the between-nation (slash) contributions.
struct SignatureFactors {
  std::vector<std::vector<int>> nations;
  std::vector<int> slash;
  Signature flatten() const;
  std::string notation() const;  // "(4;1:2,2)"
};

SignatureFactors signature_factors(const Configuration& c);
Signature signature_formula(const Configuration& c);

struct SignatureCheck {
  Signature formula;
  Signature sampled;
  bool agree = false;
};

SignatureCheck signature_check(const Germ& g);

}  // namespace match_ybo

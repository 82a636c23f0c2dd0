#pragma once

#include <random>

#include "match_ybo/matchcat.hpp"

namespace test_helpers {

inline match_ybo::Scalar small_rational(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  int p = num(rng);
  while (nonzero && p == 0) p = num(rng);
  match_ybo::Scalar x(p, den(rng));
  x.canonicalize();
  return x;
}

inline match_ybo::MatchMatrix2 random_matrix(int n, std::mt19937_64& rng, bool nonzero = false) {
  match_ybo::MatchMatrix2 m(n);
  for (int i = 1; i <= n; ++i) m.vertex(i) = small_rational(rng, nonzero);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      m.edge(i, j) = {small_rational(rng, nonzero), small_rational(rng, nonzero), small_rational(rng, nonzero),
                      small_rational(rng, nonzero)};
  return m;
}

}  // namespace test_helpers

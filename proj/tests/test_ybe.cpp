#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "match_ybo/recipe.hpp"
#include "match_ybo/ybe.hpp"

using namespace match_ybo;

namespace {

Germ plus_germ(const Scalar& alpha, const Scalar& beta, Part second) {
  Germ g{Configuration(2, {Nation{{{{1}, Part::First}, {{2}, second}}}}), {}};
  g.params.alpha[1] = alpha;
  g.params.beta[1] = beta;
  return g;
}

bool all_zero(const std::array<Scalar, 8>& xs) {
  for (const auto& x : xs)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace

TEST_SUITE("ybe") {
  TEST_CASE("scalar multiples of the identity solve") {
    MatchMatrix2 m = MatchMatrix2::identity(3);
    for (int i = 1; i <= 3; ++i) m.vertex(i) = 4;
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j) m.edge(i, j) = {4, 0, 0, 4};
    CHECK(ybe_residual_direct(m).zero);
    CHECK(constraint_residuals(m).zero);
    CHECK(is_solution(m));
  }

  TEST_CASE("all-slash triangles solve with any data") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
      MatchMatrix2 m(3);
      for (int i = 1; i <= 3; ++i) m.vertex(i) = test_helpers::small_rational(rng, true);
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
          m.edge(i, j) = {0, test_helpers::small_rational(rng, true), test_helpers::small_rational(rng, true), 0};
      CHECK(ybe_residual_direct(m).zero);
      CHECK(all_zero(base_constraints(m, 1, 2, 3)));
    }
  }

  TEST_CASE("perturbed vertex breaks the a+ germ") {
    MatchMatrix2 m = rec(plus_germ(2, 5, Part::Second));
    CHECK(is_solution(m));
    m.vertex(2) = m.vertex(1) + 1;
    ResidualReport r = ybe_residual_direct(m);
    CHECK_FALSE(r.zero);
    CHECK_FALSE(r.witnesses.empty());
    CHECK(r.witnesses.size() <= kMaxWitnesses);
  }

  TEST_CASE("pair equations vanish on the + block") {
    Germ g = plus_germ(3, 7, Part::Second);
    MatchMatrix2 m(3);
    MatchMatrix2 two = rec(g);
    m.vertex(1) = two.vertex(1);
    m.vertex(2) = two.vertex(2);
    m.vertex(3) = 1;
    m.edge(1, 2) = two.edge(1, 2);
    m.edge(1, 3) = {1, 0, 0, 1};
    m.edge(2, 3) = {1, 0, 0, 1};
    auto eqs = base_constraints(m, 1, 2, 3);
    for (int k = 0; k < 5; ++k) CHECK(is_zero(eqs[k]));
  }

  TEST_CASE("random matrices mostly fail") {
    std::mt19937_64 rng(2);
    int fails = 0;
    for (int t = 0; t < 50; ++t) {
      MatchMatrix2 m = test_helpers::random_matrix(3, rng, true);
      if (!all_zero(base_constraints(m, 1, 2, 3))) ++fails;
      CHECK(ybe_residual_direct(m).zero == constraint_residuals(m).zero);
    }
    CHECK(fails >= 45);
  }

  TEST_CASE("unequal slash products in a +++ triangle") {
    Configuration c(3, {Nation{{{{1}, Part::First}, {{2}, Part::First}, {{3}, Part::Second}}}});
    Germ g{c, generic_point(c, 5)};
    MatchMatrix2 m = rec(g);
    CHECK(constraint_residuals(m).zero);
    m.edge(1, 3).b *= 2;
    ResidualReport r = constraint_residuals(m);
    CHECK_FALSE(r.zero);
    CHECK_FALSE(ybe_residual_direct(m).zero);
  }

  TEST_CASE("the three routes agree on n = 2") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
      MatchMatrix2 m = test_helpers::random_matrix(2, rng);
      bool d = ybe_residual_direct(m).zero;
      CHECK(d == constraint_residuals(m).zero);
      CHECK(d == is_solution_by_subsets(m).zero);
    }
    for (const auto& c : enumerate_transversal(2)) {
      MatchMatrix2 m = rec(Germ{c, generic_point(c, 1)});
      CHECK(constraint_residuals(m).zero);
    }
  }

  TEST_CASE("subset witness names the corrupted triple") {
    Configuration c = enumerate_transversal(5).back();  // five singleton nations
    MatchMatrix2 m = rec(Germ{c, generic_point(c, 2)});
    CHECK(is_solution_by_subsets(m).zero);
    // a only breaks triangles through edge 2-4 via the pair equations
    m.edge(2, 4).a = 1;
    ResidualReport r = is_solution_by_subsets(m);
    CHECK_FALSE(r.zero);
    std::vector<int> tri{2, 4, 5};
    CHECK(std::find(r.failing_subsets.begin(), r.failing_subsets.end(), tri) != r.failing_subsets.end());
    for (const auto& s : r.failing_subsets) {
      CHECK(std::find(s.begin(), s.end(), 2) != s.end());
      CHECK(std::find(s.begin(), s.end(), 4) != s.end());
    }
    CHECK_FALSE(ybe_residual_direct(m).zero);
  }

  TEST_CASE("singular matrices are not solutions") {
    MatchMatrix2 m(2);
    m.vertex(1) = 1;
    m.vertex(2) = 1;
    m.edge(1, 2) = {0, 0, 0, 0};
    CHECK(ybe_residual_direct(m).zero);
    CHECK_FALSE(is_solution(m));
  }

  TEST_CASE("symmetry covariance") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 30; ++t) {
      MatchMatrix2 m = test_helpers::random_matrix(3, rng);
      bool s = is_solution(m);
      for (const auto& w : all_permutations(3)) CHECK(is_solution(act_perm(m, w)) == s);
      CHECK(is_solution(act_flip(m)) == s);
      CHECK(is_solution(x_normalize(m)) == s);
    }
  }
}

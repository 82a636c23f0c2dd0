#include <doctest.h>

#include "match_ybo/acceptance.hpp"
#include "match_ybo/errors.hpp"
#include "match_ybo/signature.hpp"

using namespace match_ybo;

TEST_SUITE("signature") {
  TEST_CASE("spectrum of small blocks") {
    MatchMatrix2 m(2);
    m.vertex(1) = 2;
    m.vertex(2) = 5;
    m.edge(1, 2) = {0, 3, 3, 0};
    Spectrum s = spectrum(m);
    std::sort(s.begin(), s.end());
    CHECK(s == Spectrum{-3, 2, 3, 5});
    CHECK(degeneracy_partition(s) == Signature{{1, 1, 1, 1}});

    m.edge(1, 2) = {Scalar(2) + 7, -14, 1, 0};  // alpha 2, beta 7
    s = spectrum(m);
    std::sort(s.begin(), s.end());
    CHECK(s == Spectrum{2, 2, 5, 7});

    m.edge(1, 2) = {4, 0, 0, 4};
    s = spectrum(m);
    CHECK(std::count(s.begin(), s.end(), Scalar(4)) == 2);
  }

  TEST_CASE("irrational spectrum is reported") {
    MatchMatrix2 m(2);
    m.vertex(1) = m.vertex(2) = 1;
    m.edge(1, 2) = {0, 2, 1, 0};
    CHECK_THROWS_AS(spectrum(m), IrrationalSpectrum);
  }

  TEST_CASE("degeneracy partition") {
    CHECK(degeneracy_partition(Spectrum(9, Scalar(3))) == Signature{{9}});
    CHECK(degeneracy_partition(Spectrum{1, 1, 1, 2}) == Signature{{3, 1}});
  }

  TEST_CASE("formula examples") {
    CHECK(signature_formula(configuration_from_edge_string(3, "fff")) == Signature{{6, 3}});
    CHECK(signature_formula(configuration_from_edge_string(3, "0//")) == Signature{{4, 2, 2, 1}});
    CHECK(signature_factors(configuration_from_edge_string(3, "0//")).notation() == "(4;1:2,2)");
    CHECK(signature_formula(configuration_from_edge_string(4, "0aaaa0")) == Signature{{8, 8}});
  }

  TEST_CASE("formula sums to N^2 and is invariant") {
    for (int n = 1; n <= 7; ++n)
      for (const auto& c : enumerate_transversal(n)) {
        Signature s = signature_formula(c);
        CHECK(s.total() == n * n);
        CHECK(signature_formula(flip_configuration(c)) == s);
        if (n <= 4)
          for (const auto& w : all_permutations(n)) CHECK(signature_formula(configuration_perm(c, w)) == s);
      }
  }

  TEST_CASE("formula matches sampled degeneracies") {
    for (int n = 1; n <= 5; ++n)
      for (const auto& c : enumerate_transversal(n))
        for (std::uint64_t seed : {1, 2, 3}) CHECK(signature_check(Germ{c, generic_point(c, seed)}).agree);
  }

  TEST_CASE("non-generic point reports a mismatch") {
    Configuration c = configuration_from_edge_string(2, "/");
    Germ g{c, {}};
    g.params.alpha[1] = 3;
    g.params.alpha[2] = 1;
    g.params.mu[{1, 2}] = 3;  // mu collides with alpha
    SignatureCheck chk = signature_check(g);
    CHECK_FALSE(chk.agree);
    CHECK(chk.formula == Signature{{1, 1, 1, 1}});
    CHECK(chk.sampled == Signature{{2, 1, 1}});
  }
}

#include <doctest.h>

#include <set>

#include "match_ybo/acceptance.hpp"
#include "match_ybo/errors.hpp"
#include "match_ybo/oracle.hpp"
#include "match_ybo/recipe.hpp"

using namespace match_ybo;

namespace {

std::uint64_t count(const char* t, unsigned p) { return enumerate_fibre(parse_pattern(t), p, 0).count; }

TriangleH type_of(const MatchMatrix2& m) {
  return {coarsen(label_edge(m, 1, 2)), coarsen(label_edge(m, 1, 3)), coarsen(label_edge(m, 2, 3))};
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("field arithmetic") {
    FieldElement a(3, 7), b(5, 7);
    CHECK((a + b).residue() == 1);
    CHECK((a - b).residue() == 5);
    CHECK((a * b).residue() == 1);
    CHECK((a * a.inverse()).residue() == 1);
    CHECK(FieldElement(-1, 11).residue() == 10);
    CHECK_THROWS_AS(FieldElement(0, 7).inverse(), SingularMatrix);
  }

  TEST_CASE("pattern parsing") {
    CHECK(to_string(parse_pattern("/,+,+")) == "/,+,+");
    CHECK(to_string(parse_pattern("/++")) == "/,+,+");
    FibrePattern p = parse_pattern("0,a+,f-");
    CHECK(p.labels[1] == EdgeLabelH::Plus);
    CHECK(p.same_vertex[1] == false);
    CHECK(p.same_vertex[2] == true);
    CHECK_THROWS_AS(parse_pattern("/+"), InvalidInput);
    CHECK_THROWS_AS(parse_pattern("x,+,+"), InvalidInput);
  }

  TEST_CASE("bad primes") {
    CHECK_THROWS_AS(enumerate_fibre(parse_pattern("///"), 2), InvalidInput);
    CHECK_THROWS_AS(enumerate_fibre(parse_pattern("///"), 9), InvalidInput);
  }

  TEST_CASE("polynomial system is nontrivial") { CHECK(ybe_polynomial_count() > 8); }

  TEST_CASE("hand-counted fibres") {
    // free vertices and free slash b's
    CHECK(count("///", 7) == 46656);
    // one common scalar
    CHECK(count("000", 7) == 6);
    CHECK(count("000", 11) == 10);
    // {1,2} one county, b shared to 3
    CHECK(count("0//", 7) == 216);
    // unordered root pairs {x,y}, x+y != 0, times 8 vertex choices, plus x = y
    CHECK(count("+++", 7) == 12 * 8 + 6);
    CHECK(count("+++", 11) == 40 * 8 + 10);
    // free v1, shared b, and 54 root-compatible (v2, v3, edge 23)
    CHECK(count("//+", 7) == 6 * 6 * 54);
    CHECK(count("0++", 7) == 54);
  }

  TEST_CASE("nonempty fibres are exactly the admissible types") {
    for (const auto& orbit : g3_orbits())
      for (const TriangleH& t : orbit) {
        bool nonempty = count(to_string(t).c_str(), 7) > 0;
        CHECK_MESSAGE(nonempty == admissible_type(t), to_string(t));
      }
  }

  TEST_CASE("refined patterns") {
    // f vs a on the + edge of //+ splits its count
    std::uint64_t f = count("/,/,f+", 7), a = count("/,/,a+", 7);
    CHECK(f + a == count("//+", 7));
    CHECK(f == 6 * 6 * 30);
    CHECK(a == 6 * 6 * 24);
    // a 0 edge forces equal scalars, so a-decorations next to it must respect that
    CHECK(count("0,a+,f+", 7) == 0);
    CHECK(count("0,f+,a+", 7) == 0);
    CHECK(count("0,a+,a+", 11) > 0);
  }

  TEST_CASE("families and x-closure") {
    for (const char* t : {"///", "//+", "+++", "0//", "000", "0++"}) {
      FibreResult r = enumerate_fibre(parse_pattern(t), 7);
      CHECK(r.count > 0);
      CHECK(r.matches_family);
      CHECK(r.x_closed);
    }
  }

  TEST_CASE("rec outputs reduce into their fibres") {
    for (unsigned p : {7u, 11u}) {
      int hits = 0;
      for (const auto& c : enumerate_configurations(3))
        for (std::uint64_t seed : {1, 2}) {
          MatchMatrix2 m = rec(Germ{c, generic_point(c, seed)});
          auto x = reduce_mod_p(m, p);
          if (!x) continue;
          FibrePattern pat{type_of(m), {}};
          if (!conforms(pat, *x)) continue;  // a nonzero entry vanished mod p
          CHECK(fibre_satisfies(*x, p));
          CHECK(in_family(pat, *x, p));
          ++hits;
        }
      CHECK(hits > 20);
    }
  }

  TEST_CASE("fibre report covers the thirteen orbits") {
    auto report = fibre_report(7);
    CHECK(report.size() == 13);
    std::set<std::string> nonempty;
    for (const auto& r : report)
      if (r.count) nonempty.insert(to_string(r.pattern.labels));
    CHECK(nonempty == std::set<std::string>{"///", "//+", "+++", "0//", "0++", "000"});
  }
}

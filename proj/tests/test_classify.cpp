#include <doctest.h>

#include <set>

#include "match_ybo/acceptance.hpp"
#include "match_ybo/classify.hpp"
#include "match_ybo/errors.hpp"
#include "match_ybo/recipe.hpp"
#include "match_ybo/ybe.hpp"

using namespace match_ybo;

namespace {

MatchMatrix2 build(const Configuration& c, std::uint64_t seed = 5) { return rec(Germ{c, generic_point(c, seed)}); }

std::vector<TriangleH> all_types() {
  std::vector<TriangleH> out;
  for (const auto& o : g3_orbits()) out.insert(out.end(), o.begin(), o.end());
  return out;
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("edge labels") {
    MatchMatrix2 m(2);
    m.vertex(1) = 2;
    m.vertex(2) = 2;
    m.edge(1, 2) = {0, 3, 3, 0};
    CHECK(label_edge(m, 1, 2) == EdgeLabelI::Slash);
    m.edge(1, 2) = {5, -6, 1, 0};
    CHECK(label_edge(m, 1, 2) == EdgeLabelI::FPlus);
    m.vertex(2) = 3;
    CHECK(label_edge(m, 1, 2) == EdgeLabelI::APlus);
    m.edge(1, 2) = {0, -6, 1, 5};
    CHECK(label_edge(m, 1, 2) == EdgeLabelI::AMinus);
    m.vertex(2) = 2;
    CHECK(label_edge(m, 1, 2) == EdgeLabelI::FMinus);
    m.edge(1, 2) = {2, 0, 0, 2};
    CHECK(label_edge(m, 1, 2) == EdgeLabelI::Zero);
    m.edge(1, 2) = {2, 0, 0, 3};
    CHECK_THROWS_AS(label_edge(m, 1, 2), NotASolution);
    m.edge(1, 2) = {1, 1, 1, 1};
    CHECK_THROWS_AS(label_edge(m, 1, 2), NotASolution);
  }

  TEST_CASE("admissible") {
    CHECK(admissible(MatchMatrix2::identity(3)));
    for (int n = 1; n <= 4; ++n)
      for (const auto& c : enumerate_transversal(n)) CHECK(admissible(build(c)));
    // a (/,+,+) triangle: slash on 12 with + on 13 and 23
    MatchMatrix2 m(3);
    m.vertex(1) = 2;
    m.vertex(2) = 3;
    m.vertex(3) = 2;
    m.edge(1, 2) = {0, 4, 1, 0};
    m.edge(1, 3) = {5, -6, 1, 0};
    m.edge(2, 3) = {5, -6, 1, 0};
    CHECK_FALSE(admissible(m));
    CHECK_FALSE(is_solution(m));
  }

  TEST_CASE("triangle rules") {
    CHECK(six_rule_check(parse_triangle("+++")));
    CHECK_FALSE(six_rule_check(parse_triangle("+-+")));  // 1<2<3 but 3<1
    CHECK(slash_rule_check(parse_triangle("///")));
    CHECK_FALSE(slash_rule_check(parse_triangle("/++")));
    int count = 0;
    for (const TriangleH& t : all_types()) {
      if (!admissible_type(t)) continue;
      ++count;
      CHECK(six_rule_check(t));
      CHECK(slash_rule_check(t));
    }
    CHECK(count == 23);
  }

  TEST_CASE("labels of solutions only show admissible triangles") {
    for (int n = 3; n <= 4; ++n)
      for (const auto& c : enumerate_configurations(n)) {
        MatchMatrix2 m = build(c);
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
              TriangleH t{coarsen(label_edge(m, i, j)), coarsen(label_edge(m, i, k)), coarsen(label_edge(m, j, k))};
              CHECK(admissible_type(t));
            }
      }
  }

  TEST_CASE("recover pieces") {
    Configuration slashes = configuration_from_edge_string(3, "///");
    CHECK(recover_nations(build(slashes)) == Partition{{1}, {2}, {3}});
    CHECK(recover_counties(build(slashes)) == Partition{{1}, {2}, {3}});
    MatchMatrix2 id = MatchMatrix2::identity(4);
    CHECK(recover_nations(id) == Partition{{1, 2, 3, 4}});
    CHECK(recover_counties(id) == Partition{{1, 2, 3, 4}});
    CHECK(recover_order(id) == std::vector<Partition>{{{1, 2, 3, 4}}});

    auto fff = recover_colours(build(configuration_from_edge_string(3, "fff")));
    CHECK(fff == std::vector<std::vector<Part>>{{Part::First, Part::First, Part::First}});
    auto afa = recover_colours(build(configuration_from_edge_string(3, "afa")));
    CHECK(afa == std::vector<std::vector<Part>>{{Part::First, Part::Second, Part::First}});

    // county of 2 before county of 1
    Configuration rev(2, {Nation{{{{2}, Part::First}, {{1}, Part::Second}}}});
    CHECK(recover_order(build(rev)) == std::vector<Partition>{{{2}, {1}}});
  }

  TEST_CASE("recovery rejects inconsistent data") {
    MatchMatrix2 m = build(configuration_from_edge_string(3, "///"));
    m.edge(1, 3) = {m.vertex(1), 0, 0, m.vertex(1)};
    m.vertex(3) = m.vertex(1);
    CHECK_THROWS_AS(recover_nations(m), NotASolution);  // one slash in the triangle
    CHECK_THROWS_AS(classify(m), NotASolution);
  }

  TEST_CASE("classify round trip on all labelled configurations") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& c : enumerate_configurations(n)) {
        MatchMatrix2 m = build(c);
        Classification cl = classify(m);
        CHECK(cl.germ.config == c);
        CHECK(x_equivalent(rec(cl.germ), m));
      }
    Classification id = classify(MatchMatrix2::identity(3));
    CHECK(id.germ.config.nations().size() == 1);
    CHECK(id.germ.config.nations()[0].counties.size() == 1);
  }

  TEST_CASE("classify keeps slash products without rational roots") {
    MatchMatrix2 m = build(configuration_from_edge_string(2, "/"));
    m.edge(1, 2) = {0, 2, 1, 0};
    Classification cl = classify(m);
    CHECK(cl.germ.params.mu.empty());
    CHECK(cl.germ.params.mu_sq.at({1, 2}) == 2);
    CHECK_FALSE(cl.normalizations.empty());
    CHECK(x_equivalent(rec(cl.germ), m));
  }

  TEST_CASE("classify rejects gauge-rescaled but broken input") {
    MatchMatrix2 m = build(configuration_from_edge_string(3, "fff"));
    m.edge(1, 2).a += 1;
    CHECK_THROWS_AS(classify(m), NotASolution);
  }

  TEST_CASE("no_minus_rep") {
    auto t = enumerate_transversal(3);
    for (const auto& c : t) {
      MinusFree mf = no_minus_rep(c);
      CHECK(mf.config == c);
      CHECK(mf.witness.is_identity());
    }
    Configuration rev(2, {Nation{{{{2}, Part::First}, {{1}, Part::First}}}});
    MinusFree mf = no_minus_rep(rev);
    CHECK(mf.witness == Permutation({2, 1}));
    MatchMatrix2 m = build(mf.config);
    CHECK(label_edge(m, 1, 2) == EdgeLabelI::FPlus);
  }

  TEST_CASE("g3 orbits") {
    auto orbits = g3_orbits();
    std::size_t total = 0;
    for (const auto& o : orbits) total += o.size();
    CHECK(total == 64);
    CHECK(g3_orbit(parse_triangle("///")) == std::vector<TriangleH>{parse_triangle("///")});
    CHECK(g3_orbit(parse_triangle("000")).size() == 1);
    std::vector<TriangleH> zzs{parse_triangle("00/"), parse_triangle("0/0"), parse_triangle("/00")};
    std::sort(zzs.begin(), zzs.end());
    CHECK(g3_orbit(parse_triangle("00/")) == zzs);
    // the row with an ellipsis has twelve members
    CHECK(g3_orbit(parse_triangle("0/+")).size() == 12);
  }

  TEST_CASE("decorated rows, read as plain types, are orbits") {
    for (const std::vector<std::string>& row :
         {std::vector<std::string>{"/--", "/++", "-/+", "+/-", "++/", "--/"},
          std::vector<std::string>{"---", "+++", "+--", "-++", "--+", "++-"},
          std::vector<std::string>{"0--", "0++", "+0-", "-0+", "++0", "--0"}}) {
      std::vector<TriangleH> want;
      for (const auto& s : row) want.push_back(parse_triangle(s));
      std::sort(want.begin(), want.end());
      CHECK(g3_orbit(want.front()) == want);
    }
  }

  TEST_CASE("configuration orbits") {
    Configuration c = enumerate_transversal(3).back();
    CHECK(orbit(c, false).size() == 1);
    for (int n = 1; n <= 4; ++n) {
      std::set<Configuration> all;
      for (const auto& t : enumerate_transversal(n)) {
        auto o = orbit(t, false);
        int fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        CHECK(fact % static_cast<int>(o.size()) == 0);
        all.insert(o.begin(), o.end());
        CHECK(orbit(t, true).size() >= o.size());
      }
      CHECK(all.size() == enumerate_configurations(n).size());
    }
    std::vector<Nation> nine;
    for (int v = 1; v <= 9; ++v) nine.push_back(Nation{{{{v}, Part::First}}});
    CHECK_THROWS_AS(orbit(Configuration(9, nine), false), InvalidInput);
  }
}

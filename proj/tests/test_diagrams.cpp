#include <doctest.h>

#include <set>

#include "match_ybo/diagrams.hpp"
#include "match_ybo/errors.hpp"

using namespace match_ybo;

namespace {

std::vector<Word> all_words(int max_len) {
  std::vector<Word> out{Word()};
  std::vector<Word> layer{Word()};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (char ch : {'1', '2', '3'}) next.emplace_back(w.str() + ch);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Configuration one_nation(int n, std::vector<County> counties) { return Configuration(n, {Nation{std::move(counties)}}); }

}  // namespace

TEST_SUITE("diagrams") {
  TEST_CASE("shape_of_word follows the box-adding rules") {
    CHECK(shape_of_word(Word("")).rows() == std::vector<Row>{{1, false}});
    CHECK(shape_of_word(Word("1")).rows() == std::vector<Row>{{2, false}});
    CHECK(shape_of_word(Word("121311")).rows() == std::vector<Row>{{2, false}, {2, false}, {3, true}});
  }

  TEST_CASE("word_of_shape inverts shape_of_word") {
    CHECK(word_of_shape(Shape()).str() == "");
    CHECK(word_of_shape(Shape({{2, false}, {2, false}, {3, true}})).str() == "121311");
    CHECK(word_of_shape(Shape({{3, false}})).str() == "11");
    for (const Word& w : all_words(8)) {
      REQUIRE(word_of_shape(shape_of_word(w)) == w);
      CHECK(shape_of_word(w).box_count() == static_cast<int>(w.size()) + 1);
    }
  }

  TEST_CASE("invalid words and shapes are rejected") {
    CHECK_THROWS_AS(Word("124"), InvalidInput);
    CHECK_THROWS_AS(Shape({{1, true}}), InvalidInput);
    CHECK_THROWS_AS(Shape(std::vector<Row>{}), InvalidInput);
    CHECK_THROWS_AS(Shape({{0, false}}), InvalidInput);
  }

  TEST_CASE("word_order puts longer words first") {
    CHECK(word_order(Word("111"), Word("11")) < 0);
    CHECK(word_order(Word("111"), Word("112")) < 0);
    CHECK(word_order(Word("112"), Word("113")) < 0);
    CHECK(word_order(Word("12"), Word("12")) == 0);
    CHECK(word_order(Word("1"), Word("")) < 0);
  }

  TEST_CASE("multiset counts match the Euler transform") {
    const int expected[] = {1, 4, 13, 46, 154, 533, 1802};
    for (int n = 1; n <= 7; ++n) {
      CHECK(euler_count(n) == expected[n - 1]);
      CHECK(enumerate_multisets(n).size() == static_cast<std::size_t>(expected[n - 1]));
    }
  }

  TEST_CASE("multisets are distinct and have the right degree") {
    auto ms = enumerate_multisets(5);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      CHECK(ms[i].degree() == 5);
      for (std::size_t j = i + 1; j < ms.size(); ++j) CHECK_FALSE(ms[i] == ms[j]);
    }
  }

  TEST_CASE("T_2 in book order") {
    auto t = enumerate_transversal(2);
    REQUIRE(t.size() == 4);
    CHECK(t[0] == one_nation(2, {{{1, 2}, Part::First}}));
    CHECK(t[1] == one_nation(2, {{{1}, Part::First}, {{2}, Part::First}}));
    CHECK(t[2] == one_nation(2, {{{1}, Part::First}, {{2}, Part::Second}}));
    CHECK(t[3] == Configuration(2, {Nation{{{{1}, Part::First}}}, Nation{{{{2}, Part::First}}}}));
  }

  TEST_CASE("book order of the eleven-box composite") {
    DiagramMultiset f({{shape_of_word(Word("131")), 1}, {Shape(), 2}, {shape_of_word(Word("1321")), 1}});
    REQUIRE(f.degree() == 11);
    Configuration c = book_order(f);
    REQUIRE(c.nations().size() == 4);
    CHECK(c.nations()[0].size() == 5);
    CHECK(c.nations()[1].size() == 4);
    CHECK(c.nations()[2].size() == 1);
    CHECK(c.nations()[3].size() == 1);
    const auto& first = c.nations()[0].counties;
    REQUIRE(first.size() == 3);
    CHECK(first[0] == County{{1, 2}, Part::First});
    CHECK(first[1] == County{{3}, Part::Second});
    CHECK(first[2] == County{{4, 5}, Part::First});
    CHECK(c.nations()[1].counties[1] == County{{8, 9}, Part::Second});
  }

  TEST_CASE("configuration validity") {
    CHECK_THROWS_AS(Configuration(2, {Nation{{{{1}, Part::First}}}}), InvalidInput);
    CHECK_THROWS_AS(Configuration(2, {Nation{{{{1, 2}, Part::First}, {{2}, Part::First}}}}), InvalidInput);
    CHECK_THROWS_AS(Configuration(2, {Nation{{{{1, 3}, Part::First}}}}), InvalidInput);
    CHECK_THROWS_AS(Configuration(1, {Nation{{}}}), InvalidInput);
    // first county tagged second is renamed
    Configuration c = one_nation(2, {{{2}, Part::Second}, {{1}, Part::First}});
    CHECK(c.nations()[0].counties[0].part == Part::First);
    CHECK(c.nations()[0].counties[1].part == Part::Second);
  }

  TEST_CASE("S_2 and its orbits") {
    auto all = enumerate_configurations(2);
    CHECK(all.size() == 6);
    std::set<Configuration> canon;
    for (const auto& c : all) canon.insert(canonicalize(c).config);
    CHECK(canon.size() == 4);
    // the four one-nation two-county elements fall into two classes
    std::set<Configuration> two_county;
    for (const auto& c : all)
      if (c.nations().size() == 1 && c.nations()[0].counties.size() == 2) two_county.insert(canonicalize(c).config);
    CHECK(two_county.size() == 2);
  }

  TEST_CASE("configuration_perm relabels") {
    Configuration c = one_nation(2, {{{1}, Part::First}, {{2}, Part::First}});
    CHECK(configuration_perm(c, Permutation::identity(2)) == c);
    Configuration swapped = configuration_perm(c, Permutation({2, 1}));
    CHECK(swapped == one_nation(2, {{{2}, Part::First}, {{1}, Part::First}}));
  }

  TEST_CASE("flip reverses county order") {
    Configuration single = Configuration(2, {Nation{{{{1}, Part::First}}}, Nation{{{{2}, Part::First}}}});
    CHECK(flip_configuration(single) == single);
    Configuration c = one_nation(3, {{{1, 2}, Part::First}, {{3}, Part::First}});
    CHECK(flip_configuration(c) == one_nation(3, {{{3}, Part::First}, {{1, 2}, Part::First}}));
    for (int n = 1; n <= 4; ++n)
      for (const auto& x : enumerate_configurations(n)) CHECK(flip_configuration(flip_configuration(x)) == x);
  }

  TEST_CASE("canonicalize returns the transversal element and a witness") {
    Configuration c = one_nation(2, {{{2}, Part::First}, {{1}, Part::Second}});
    Canonical k = canonicalize(c);
    CHECK(k.config == one_nation(2, {{{1}, Part::First}, {{2}, Part::Second}}));
    CHECK(k.witness == Permutation({2, 1}));
    for (int n = 1; n <= 5; ++n)
      for (const auto& t : enumerate_transversal(n)) {
        Canonical kt = canonicalize(t);
        CHECK(kt.config == t);
        CHECK(kt.witness.is_identity());
      }
  }

  TEST_CASE("orbits of S_N biject with T_N") {
    for (int n = 1; n <= 4; ++n) {
      auto t = enumerate_transversal(n);
      std::set<Configuration> ts(t.begin(), t.end());
      auto perms = all_permutations(n);
      std::set<Configuration> canon;
      for (const auto& c : enumerate_configurations(n)) {
        Canonical k = canonicalize(c);
        CHECK(configuration_perm(c, k.witness) == k.config);
        CHECK(ts.count(k.config) == 1);
        canon.insert(k.config);
        for (const auto& w : perms) CHECK(canonicalize(configuration_perm(c, w)).config == k.config);
      }
      CHECK(canon.size() == t.size());
    }
  }

  TEST_CASE("flip commutes with relabelling") {
    for (int n = 1; n <= 4; ++n) {
      auto perms = all_permutations(n);
      for (const auto& c : enumerate_transversal(n))
        for (const auto& w : perms)
          CHECK(flip_configuration(configuration_perm(c, w)) == configuration_perm(flip_configuration(c), w));
    }
  }
}

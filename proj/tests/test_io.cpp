#include <doctest.h>

#include "match_ybo/acceptance.hpp"
#include "match_ybo/classify.hpp"
#include "match_ybo/errors.hpp"
#include "match_ybo/io.hpp"

using namespace match_ybo;

TEST_SUITE("io") {
  TEST_CASE("shape and configuration round trip") {
    for (const char* w : {"1", "123", "3312", "21"}) {
      Shape s = shape_of_word(Word(w));
      CHECK(shape_from_json(to_json(s)) == s);
    }
    for (const auto& c : enumerate_configurations(3)) CHECK(configuration_from_json(to_json(c)) == c);
  }

  TEST_CASE("matrix and germ round trip") {
    for (const auto& c : enumerate_transversal(4)) {
      Germ g{c, generic_point(c, 5)};
      Germ back = germ_from_json(to_json(g), 99);
      CHECK(back.config == g.config);
      CHECK(back.params == g.params);
      MatchMatrix2 m = rec(g);
      CHECK(matrix_from_json(parse_json(to_json(m).dump())) == m);
    }
  }

  TEST_CASE("germ without parameters draws a generic point") {
    Configuration c = configuration_from_edge_string(3, "f//");
    Json j = to_json(c);
    Germ g = germ_from_json(j, 4);
    CHECK(g.params == generic_point(c, 4));
  }

  TEST_CASE("classify output is stable through json") {
    Configuration c = configuration_from_edge_string(4, "a0a///");
    Germ g{c, generic_point(c, 2)};
    std::string first = to_json(rec(g)).dump();
    Classification cl = classify(matrix_from_json(parse_json(first)));
    std::string again = to_json(rec(cl.germ)).dump();
    CHECK(x_equivalent(matrix_from_json(parse_json(first)), matrix_from_json(parse_json(again))));
    CHECK(to_json(cl.germ.config).dump() == to_json(c).dump());
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_json("{"), InvalidInput);
    CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"n": 2, "vertices": ["1"], "edges": []})")), InvalidInput);
    CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"n": 2, "vertices": ["1", "1"], "edges": []})")),
                    InvalidInput);
    CHECK_THROWS_AS(matrix_from_json(parse_json(
                        R"({"n": 2, "vertices": ["1", "1"], "edges": [{"i":1,"j":2,"a":"1.5","b":0,"c":0,"d":1}]})")),
                    InvalidInput);
    CHECK_THROWS_AS(configuration_from_json(parse_json(R"({"n": 2, "nations": [{"counties": [{"vertices": [1]}]}]})")),
                    InvalidInput);
    Json g = to_json(configuration_from_edge_string(2, "/"));
    g["alpha"] = {{"x", "1"}};
    CHECK_THROWS_AS(germ_from_json(g, 1), InvalidInput);
  }
}

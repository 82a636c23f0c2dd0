#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "match_ybo/diagrams.hpp"
#include "match_ybo/matchcat.hpp"
#include "match_ybo/recipe.hpp"

namespace match_ybo {

enum class EdgeLabelI { Zero, Slash, FPlus, APlus, FMinus, AMinus };
enum class EdgeLabelH { Zero, Slash, Plus, Minus };

EdgeLabelH coarsen(EdgeLabelI l);
std::string to_string(EdgeLabelI l);  // 0 / f+ a+ f- a-
char symbol(EdgeLabelH l);            // 0 / + -
EdgeLabelH parse_label_h(char ch);
EdgeLabelH negate(EdgeLabelH l);      // swaps + and -

// Labels of edges 12, 13, 23 in that order.
using TriangleH = std::array<EdgeLabelH, 3>;

// Accepts "/++" or "/,+,+".
TriangleH parse_triangle(std::string_view text);
std::string to_string(const TriangleH& t);

// Throws NotASolution("inadmissible edge block ...") when no pattern fits.
EdgeLabelI label_edge(const MatchMatrix2& m, int i, int j);

bool admissible(const MatchMatrix2& m);

// Equal-sign two-edge chains close with the same sign (natural orientation:
// + on (u,v), u<v, reads u before v).
bool six_rule_check(const TriangleH& t);
// Not exactly one slash.
bool slash_rule_check(const TriangleH& t);
// Slash rule plus a consistent county order (0 = same county, +/- = strict).
bool admissible_type(const TriangleH& t);

using Partition = std::vector<std::vector<int>>;

Partition recover_nations(const MatchMatrix2& m);
Partition recover_counties(const MatchMatrix2& m);
// Per nation (least-vertex order), its counties in county order.
std::vector<Partition> recover_order(const MatchMatrix2& m);
// Per nation, one tag per county aligned with recover_order.
std::vector<std::vector<Part>> recover_colours(const MatchMatrix2& m);

struct Classification {
  Germ germ;
  std::vector<std::string> normalizations;
};

// Throws NotASolution when m is not an invertible solution.
Classification classify(const MatchMatrix2& m);

struct MinusFree {
  Configuration config;
  Permutation witness;
};
MinusFree no_minus_rep(const Configuration& c);

std::vector<std::vector<TriangleH>> g3_orbits();
// Orbit of one triangle under the same group.
std::vector<TriangleH> g3_orbit(const TriangleH& t);

// Distinct images under relabelling (and flip if asked); n <= 8.
std::vector<Configuration> orbit(const Configuration& c, bool include_flip);

}  // namespace match_ybo

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "match_ybo/classify.hpp"
#include "match_ybo/diagrams.hpp"
#include "match_ybo/matchcat.hpp"
#include "match_ybo/oracle.hpp"
#include "match_ybo/recipe.hpp"
#include "match_ybo/signature.hpp"
#include "match_ybo/ybe.hpp"

namespace match_ybo {

using Json = nlohmann::json;

// All *_from_json functions throw InvalidInput on malformed data.
Json parse_json(std::string_view text);

Json to_json(const Shape& s);
Shape shape_from_json(const Json& j);

Json to_json(const Configuration& c);
Configuration configuration_from_json(const Json& j);

Json to_json(const MatchMatrix2& m);
MatchMatrix2 matrix_from_json(const Json& j);

Json to_json(const Germ& g);
// Parameters are optional; when "alpha" is absent a generic point is drawn.
Germ germ_from_json(const Json& j, std::uint64_t seed);

Json to_json(const ResidualReport& r);
Json to_json(const Signature& s);
Json to_json(const FibreResult& r);
Json to_json(const Permutation& w);

}  // namespace match_ybo

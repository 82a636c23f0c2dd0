#include "match_ybo/io.hpp"

#include "match_ybo/errors.hpp"

namespace match_ybo {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
  }
}

Scalar scalar_from(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw InvalidInput("rationals must be strings like \"p/q\" or integers");
}

Json words(const TensorWord& w) { return Json(w); }

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const Shape& s) {
  Json rows = Json::array();
  for (const Row& r : s.rows()) rows.push_back({{"len", r.length}, {"shaded", r.shaded}});
  return {{"rows", rows}};
}

Shape shape_from_json(const Json& j) {
  return guarded("shape", [&] {
    std::vector<Row> rows;
    for (const Json& r : j.at("rows")) rows.push_back(Row{r.at("len").get<int>(), r.at("shaded").get<bool>()});
    return Shape(std::move(rows));
  });
}

Json to_json(const Configuration& c) {
  Json nations = Json::array();
  for (const Nation& nat : c.nations()) {
    Json counties = Json::array();
    for (const County& q : nat.counties)
      counties.push_back({{"vertices", q.vertices}, {"part", q.part == Part::First ? "first" : "second"}});
    nations.push_back({{"counties", counties}});
  }
  return {{"n", c.n()}, {"nations", nations}};
}

Configuration configuration_from_json(const Json& j) {
  return guarded("configuration", [&] {
    std::vector<Nation> nations;
    for (const Json& nj : j.at("nations")) {
      Nation nat;
      for (const Json& qj : nj.at("counties")) {
        County q;
        q.vertices = qj.at("vertices").get<std::vector<int>>();
        std::string part = qj.value("part", std::string("first"));
        if (part == "first") {
          q.part = Part::First;
        } else if (part == "second") {
          q.part = Part::Second;
        } else {
          throw InvalidInput("county part must be \"first\" or \"second\"");
        }
        nat.counties.push_back(std::move(q));
      }
      nations.push_back(std::move(nat));
    }
    return Configuration(j.at("n").get<int>(), std::move(nations));
  });
}

Json to_json(const MatchMatrix2& m) {
  Json vertices = Json::array();
  for (int i = 1; i <= m.n(); ++i) vertices.push_back(to_string(m.vertex(i)));
  Json edges = Json::array();
  for (int i = 1; i <= m.n(); ++i)
    for (int j = i + 1; j <= m.n(); ++j) {
      const EdgeBlock& e = m.edge(i, j);
      edges.push_back({{"i", i}, {"j", j}, {"a", to_string(e.a)}, {"b", to_string(e.b)},
                       {"c", to_string(e.c)}, {"d", to_string(e.d)}});
    }
  return {{"n", m.n()}, {"vertices", vertices}, {"edges", edges}};
}

MatchMatrix2 matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    int n = j.at("n").get<int>();
    MatchMatrix2 m(n);
    const Json& vs = j.at("vertices");
    if (!vs.is_array() || static_cast<int>(vs.size()) != n) throw InvalidInput("matrix needs n vertex scalars");
    for (int i = 1; i <= n; ++i) m.vertex(i) = scalar_from(vs[i - 1]);
    std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
    for (const Json& e : j.at("edges")) {
      int a = e.at("i").get<int>(), b = e.at("j").get<int>();
      if (a < 1 || b > n || a >= b) throw InvalidInput("edge needs 1 <= i < j <= n");
      if (seen[(a - 1) * n + (b - 1)]) throw InvalidInput("edge listed twice");
      seen[(a - 1) * n + (b - 1)] = true;
      m.edge(a, b) = EdgeBlock{scalar_from(e.at("a")), scalar_from(e.at("b")), scalar_from(e.at("c")),
                               scalar_from(e.at("d"))};
    }
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (!seen[(a - 1) * n + (b - 1)]) throw InvalidInput("missing edge block");
    return m;
  });
}

namespace {

std::string pair_key(const NationPair& p) { return std::to_string(p.first) + "," + std::to_string(p.second); }

NationPair parse_pair_key(const std::string& k) {
  auto comma = k.find(',');
  if (comma == std::string::npos) throw InvalidInput("nation pair keys look like \"1,2\"");
  try {
    return {std::stoi(k.substr(0, comma)), std::stoi(k.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InvalidInput("bad nation pair key \"" + k + "\"");
  }
}

int parse_nation_key(const std::string& k) {
  try {
    std::size_t used = 0;
    int v = std::stoi(k, &used);
    if (used != k.size()) throw std::invalid_argument(k);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("bad nation key \"" + k + "\"");
  }
}

}  // namespace

Json to_json(const Germ& g) {
  Json j = to_json(g.config);
  Json mu = Json::object(), mu_sq = Json::object(), alpha = Json::object(), beta = Json::object();
  for (const auto& [p, v] : g.params.mu) mu[pair_key(p)] = to_string(v);
  for (const auto& [p, v] : g.params.mu_sq) mu_sq[pair_key(p)] = to_string(v);
  for (const auto& [i, v] : g.params.alpha) alpha[std::to_string(i)] = to_string(v);
  for (const auto& [i, v] : g.params.beta) beta[std::to_string(i)] = to_string(v);
  j["mu"] = mu;
  if (!mu_sq.empty()) j["mu_sq"] = mu_sq;
  j["alpha"] = alpha;
  j["beta"] = beta;
  return j;
}

Germ germ_from_json(const Json& j, std::uint64_t seed) {
  return guarded("germ", [&] {
    Germ g;
    g.config = configuration_from_json(j);
    if (!j.contains("alpha")) {
      g.params = generic_point(g.config, seed);
      return g;
    }
    for (const auto& [k, v] : j.at("alpha").items()) g.params.alpha[parse_nation_key(k)] = scalar_from(v);
    if (j.contains("beta"))
      for (const auto& [k, v] : j.at("beta").items()) g.params.beta[parse_nation_key(k)] = scalar_from(v);
    if (j.contains("mu"))
      for (const auto& [k, v] : j.at("mu").items()) g.params.mu[parse_pair_key(k)] = scalar_from(v);
    if (j.contains("mu_sq"))
      for (const auto& [k, v] : j.at("mu_sq").items()) g.params.mu_sq[parse_pair_key(k)] = scalar_from(v);
    validate(g);
    return g;
  });
}

Json to_json(const ResidualReport& r) {
  Json ws = Json::array();
  for (const Witness& w : r.witnesses) {
    Json x = {{"value", to_string(w.value)}};
    if (!w.row.empty()) {
      x["row"] = words(w.row);
      x["col"] = words(w.col);
    }
    if (!w.subset.empty()) x["subset"] = w.subset;
    if (w.equation) x["equation"] = w.equation;
    ws.push_back(std::move(x));
  }
  Json j = {{"zero", r.zero}, {"method", to_string(r.source)}, {"nonzero", r.nonzero_count}, {"witnesses", ws}};
  if (r.source == ResidualSource::Subsets) j["failing_subsets"] = r.failing_subsets;
  return j;
}

Json to_json(const Signature& s) { return Json(s.parts); }

Json to_json(const FibreResult& r) {
  Json sample = Json::array();
  for (const FibrePoint& x : r.sample) sample.push_back(Json(x));
  return {{"type", to_string(r.pattern)},
          {"prime", r.prime},
          {"solutions", r.count},
          {"empty", r.count == 0},
          {"matches_family", r.matches_family},
          {"family_misses", r.family_misses},
          {"x_closed", r.x_closed},
          {"family", r.family},
          {"sample", sample}};
}

Json to_json(const Permutation& w) { return Json(w.images()); }

}  // namespace match_ybo

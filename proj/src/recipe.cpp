#include "match_ybo/recipe.hpp"

#include <cstdlib>
#include <random>
#include <set>
#include <string>

#include "match_ybo/errors.hpp"

namespace match_ybo {

namespace {

std::string pair_name(const NationPair& p) {
  return std::to_string(p.first) + "," + std::to_string(p.second);
}

Scalar nation_scalar(const ParamPoint& pp, int nation, Part part) {
  if (part == Part::First) return pp.alpha.at(nation);
  return pp.beta.at(nation);
}

}  // namespace

void validate(const Germ& g) {
  const auto& nations = g.config.nations();
  int k = static_cast<int>(nations.size());
  const ParamPoint& pp = g.params;
  for (int i = 1; i <= k; ++i) {
    auto a = pp.alpha.find(i);
    if (a == pp.alpha.end()) throw InvalidInput("missing alpha for nation " + std::to_string(i));
    if (is_zero(a->second)) throw InvalidInput("alpha must be nonzero (nation " + std::to_string(i) + ")");
    bool multi = nations[i - 1].counties.size() >= 2;
    auto b = pp.beta.find(i);
    if (multi) {
      if (b == pp.beta.end()) throw InvalidInput("missing beta for nation " + std::to_string(i));
      if (is_zero(b->second)) throw InvalidInput("beta must be nonzero (nation " + std::to_string(i) + ")");
      if (is_zero(Scalar(a->second + b->second)))
        throw InvalidInput("alpha + beta must be nonzero (nation " + std::to_string(i) + ")");
    } else if (b != pp.beta.end()) {
      throw InvalidInput("beta given for single-county nation " + std::to_string(i));
    }
  }
  for (const auto& [i, v] : pp.alpha)
    if (i < 1 || i > k) throw InvalidInput("alpha for unknown nation " + std::to_string(i));
  for (const auto& [i, v] : pp.beta)
    if (i < 1 || i > k) throw InvalidInput("beta for unknown nation " + std::to_string(i));
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      NationPair p{i, j};
      bool has_mu = pp.mu.count(p) > 0, has_sq = pp.mu_sq.count(p) > 0;
      if (has_mu == has_sq) throw InvalidInput("need exactly one of mu / mu_sq for nations " + pair_name(p));
      const Scalar& v = has_mu ? pp.mu.at(p) : pp.mu_sq.at(p);
      if (is_zero(v)) throw InvalidInput("mu must be nonzero for nations " + pair_name(p));
    }
  }
  for (const auto* m : {&pp.mu, &pp.mu_sq})
    for (const auto& [p, v] : *m)
      if (p.first < 1 || p.second > k || p.first >= p.second)
        throw InvalidInput("mu for unknown nation pair " + pair_name(p));
}

MatchMatrix2 rec(const Germ& g) {
  validate(g);
  const Configuration& c = g.config;
  const ParamPoint& pp = g.params;
  MatchMatrix2 m(c.n());
  for (int v = 1; v <= c.n(); ++v) m.vertex(v) = nation_scalar(pp, c.nation_of(v) + 1, c.part_of(v));
  for (int u = 1; u <= c.n(); ++u) {
    for (int v = u + 1; v <= c.n(); ++v) {
      int nu = c.nation_of(u) + 1, nv = c.nation_of(v) + 1;
      if (nu != nv) {
        NationPair p{std::min(nu, nv), std::max(nu, nv)};
        if (auto it = pp.mu.find(p); it != pp.mu.end()) {
          m.edge(u, v) = EdgeBlock{0, it->second, it->second, 0};
        } else {
          m.edge(u, v) = EdgeBlock{0, pp.mu_sq.at(p), 1, 0};
        }
        continue;
      }
      int qu = c.county_of(u), qv = c.county_of(v);
      if (qu == qv) {
        const Scalar& x = m.vertex(u);
        m.edge(u, v) = EdgeBlock{x, 0, 0, x};
        continue;
      }
      Scalar s = pp.alpha.at(nu) + pp.beta.at(nu);
      Scalar prod = pp.alpha.at(nu) * pp.beta.at(nu);
      if (qu < qv) {
        m.edge(u, v) = EdgeBlock{s, -prod, 1, 0};
      } else {
        m.edge(u, v) = EdgeBlock{0, -prod, 1, s};
      }
    }
  }
  return m;
}

namespace {

Scalar draw(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  int p = 0;
  while (p == 0) p = num(rng);
  Scalar x(p, den(rng));
  x.canonicalize();
  return x;
}

bool acceptable(const ParamPoint& pp) {
  std::set<Scalar> seen;
  auto fresh = [&](const Scalar& x) {
    if (is_zero(x)) return false;
    return seen.insert(x).second;
  };
  for (const auto& [i, a] : pp.alpha)
    if (!fresh(a)) return false;
  for (const auto& [i, b] : pp.beta) {
    if (!fresh(b)) return false;
    if (is_zero(Scalar(pp.alpha.at(i) + b))) return false;
  }
  for (const auto& [p, m] : pp.mu)
    if (!fresh(m) || !fresh(Scalar(-m))) return false;
  return true;
}

}  // namespace

ParamPoint generic_point(const Configuration& c, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(c.n()), static_cast<std::uint32_t>(c.nations().size())};
  std::mt19937_64 rng(seq);
  int k = static_cast<int>(c.nations().size());
  while (true) {
    ParamPoint pp;
    for (int i = 1; i <= k; ++i) {
      pp.alpha[i] = draw(rng);
      if (c.nations()[i - 1].counties.size() >= 2) pp.beta[i] = draw(rng);
    }
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) pp.mu[{i, j}] = draw(rng);
    if (acceptable(pp)) return pp;
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MATCH_YBO_SEED")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used, 10);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidInput(std::string("MATCH_YBO_SEED is not an unsigned integer: ") + env);
  }
  return 1729;
}

namespace {

// Map nation numbers of `from` to those of `to`, given a vertex map.
std::map<int, int> nation_map(const Configuration& from, const Configuration& to, const Permutation& w) {
  std::map<int, int> out;
  for (std::size_t i = 0; i < from.nations().size(); ++i) {
    int v = from.nations()[i].counties.front().vertices.front();
    out[static_cast<int>(i) + 1] = to.nation_of(w(v)) + 1;
  }
  return out;
}

ParamPoint remap(const ParamPoint& pp, const std::map<int, int>& nm) {
  ParamPoint out;
  for (const auto& [i, a] : pp.alpha) out.alpha[nm.at(i)] = a;
  for (const auto& [i, b] : pp.beta) out.beta[nm.at(i)] = b;
  auto key = [&](const NationPair& p) {
    int x = nm.at(p.first), y = nm.at(p.second);
    return NationPair{std::min(x, y), std::max(x, y)};
  };
  for (const auto& [p, m] : pp.mu) out.mu[key(p)] = m;
  for (const auto& [p, m] : pp.mu_sq) out.mu_sq[key(p)] = m;
  return out;
}

}  // namespace

Germ transport_germ(const Germ& g, const Permutation& w) {
  Germ out;
  out.config = configuration_perm(g.config, w);
  out.params = remap(g.params, nation_map(g.config, out.config, w));
  return out;
}

Germ flip_germ(const Germ& g) {
  Germ out;
  out.config = flip_configuration(g.config);
  out.params = g.params;
  for (std::size_t i = 0; i < g.config.nations().size(); ++i) {
    const Nation& nat = g.config.nations()[i];
    int k = static_cast<int>(i) + 1;
    // the tags were renamed iff the new first county used to be Second
    if (nat.counties.size() >= 2 && nat.counties.back().part == Part::Second)
      std::swap(out.params.alpha[k], out.params.beta[k]);
  }
  return out;
}

}  // namespace match_ybo

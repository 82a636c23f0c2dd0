#include "match_ybo/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "match_ybo/errors.hpp"
#include "match_ybo/ybe.hpp"

namespace match_ybo {

EdgeLabelH coarsen(EdgeLabelI l) {
  switch (l) {
    case EdgeLabelI::Zero: return EdgeLabelH::Zero;
    case EdgeLabelI::Slash: return EdgeLabelH::Slash;
    case EdgeLabelI::FPlus:
    case EdgeLabelI::APlus: return EdgeLabelH::Plus;
    default: return EdgeLabelH::Minus;
  }
}

std::string to_string(EdgeLabelI l) {
  switch (l) {
    case EdgeLabelI::Zero: return "0";
    case EdgeLabelI::Slash: return "/";
    case EdgeLabelI::FPlus: return "f+";
    case EdgeLabelI::APlus: return "a+";
    case EdgeLabelI::FMinus: return "f-";
    default: return "a-";
  }
}

char symbol(EdgeLabelH l) {
  switch (l) {
    case EdgeLabelH::Zero: return '0';
    case EdgeLabelH::Slash: return '/';
    case EdgeLabelH::Plus: return '+';
    default: return '-';
  }
}

EdgeLabelH parse_label_h(char ch) {
  switch (ch) {
    case '0': return EdgeLabelH::Zero;
    case '/': return EdgeLabelH::Slash;
    case '+': return EdgeLabelH::Plus;
    case '-': return EdgeLabelH::Minus;
    default: throw InvalidInput(std::string("unknown edge label '") + ch + "'");
  }
}

EdgeLabelH negate(EdgeLabelH l) {
  if (l == EdgeLabelH::Plus) return EdgeLabelH::Minus;
  if (l == EdgeLabelH::Minus) return EdgeLabelH::Plus;
  return l;
}

TriangleH parse_triangle(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ',' && ch != ' ') s += ch;
  if (s.size() != 3) throw InvalidInput("triangle type needs three labels: \"" + std::string(text) + "\"");
  return {parse_label_h(s[0]), parse_label_h(s[1]), parse_label_h(s[2])};
}

std::string to_string(const TriangleH& t) { return {symbol(t[0]), symbol(t[1]), symbol(t[2])}; }

EdgeLabelI label_edge(const MatchMatrix2& m, int i, int j) {
  const EdgeBlock& e = m.edge(i, j);
  const Scalar& vi = m.vertex(i);
  const Scalar& vj = m.vertex(j);
  auto fail = [&] {
    return NotASolution("inadmissible edge block (" + std::to_string(i) + "," + std::to_string(j) + ")");
  };
  if (is_zero(e.b) && is_zero(e.c)) {
    if (e.a == e.d && e.a == vi && e.a == vj && !is_zero(e.a)) return EdgeLabelI::Zero;
    throw fail();
  }
  if (is_zero(e.b) || is_zero(e.c)) throw fail();
  bool a0 = is_zero(e.a), d0 = is_zero(e.d);
  if (a0 && d0) return EdgeLabelI::Slash;
  if (d0) return vi == vj ? EdgeLabelI::FPlus : EdgeLabelI::APlus;
  if (a0) return vi == vj ? EdgeLabelI::FMinus : EdgeLabelI::AMinus;
  throw fail();
}

bool admissible(const MatchMatrix2& m) {
  if (!invertible(m)) return false;
  try {
    for (int i = 1; i <= m.n(); ++i)
      for (int j = i + 1; j <= m.n(); ++j) label_edge(m, i, j);
  } catch (const NotASolution&) {
    return false;
  }
  return constraint_residuals(m).zero;
}

namespace {

// Label of the oriented pair (u,v) in a triangle on {1,2,3}.
EdgeLabelH tri_label(const TriangleH& t, int u, int v) {
  int lo = std::min(u, v), hi = std::max(u, v);
  int idx = lo == 1 ? (hi == 2 ? 0 : 1) : 2;
  return u < v ? t[idx] : negate(t[idx]);
}

}  // namespace

bool six_rule_check(const TriangleH& t) {
  // x before y before z forces x before z
  for (int x = 1; x <= 3; ++x)
    for (int y = 1; y <= 3; ++y)
      for (int z = 1; z <= 3; ++z) {
        if (x == y || y == z || x == z) continue;
        if (tri_label(t, x, y) == EdgeLabelH::Plus && tri_label(t, y, z) == EdgeLabelH::Plus &&
            tri_label(t, x, z) != EdgeLabelH::Plus)
          return false;
      }
  return true;
}

bool slash_rule_check(const TriangleH& t) {
  return std::count(t.begin(), t.end(), EdgeLabelH::Slash) != 1;
}

bool admissible_type(const TriangleH& t) {
  if (!slash_rule_check(t)) return false;
  if (std::count(t.begin(), t.end(), EdgeLabelH::Slash) >= 2) return true;
  // rank each vertex; the labels must come from some weak order
  for (int r1 = 0; r1 < 3; ++r1)
    for (int r2 = 0; r2 < 3; ++r2)
      for (int r3 = 0; r3 < 3; ++r3) {
        int rank[4] = {0, r1, r2, r3};
        bool ok = true;
        for (int u = 1; u <= 3 && ok; ++u)
          for (int v = u + 1; v <= 3 && ok; ++v) {
            EdgeLabelH want = rank[u] == rank[v]  ? EdgeLabelH::Zero
                              : rank[u] < rank[v] ? EdgeLabelH::Plus
                                                  : EdgeLabelH::Minus;
            ok = tri_label(t, u, v) == want;
          }
        if (ok) return true;
      }
  return false;
}

namespace {

struct Labels {
  int n;
  std::vector<EdgeLabelI> table;  // full n*n, diagonal unused
  EdgeLabelI at(int i, int j) const { return table[(i - 1) * n + (j - 1)]; }
};

EdgeLabelI mirror(EdgeLabelI l) {
  switch (l) {
    case EdgeLabelI::FPlus: return EdgeLabelI::FMinus;
    case EdgeLabelI::APlus: return EdgeLabelI::AMinus;
    case EdgeLabelI::FMinus: return EdgeLabelI::FPlus;
    case EdgeLabelI::AMinus: return EdgeLabelI::APlus;
    default: return l;
  }
}

Labels label_all(const MatchMatrix2& m) {
  Labels L{m.n(), std::vector<EdgeLabelI>(m.n() * m.n(), EdgeLabelI::Zero)};
  for (int i = 1; i <= m.n(); ++i)
    for (int j = i + 1; j <= m.n(); ++j) {
      EdgeLabelI l = label_edge(m, i, j);
      L.table[(i - 1) * m.n() + (j - 1)] = l;
      L.table[(j - 1) * m.n() + (i - 1)] = mirror(l);
    }
  return L;
}

// Classes of the relation `linked`, which must be an equivalence relation.
Partition classes(const std::vector<int>& items, const std::function<bool(int, int)>& linked,
                  const char* what) {
  Partition out;
  std::vector<bool> used(items.size(), false);
  for (std::size_t s = 0; s < items.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> block{items[s]};
    used[s] = true;
    for (std::size_t t = s + 1; t < items.size(); ++t)
      if (!used[t] && linked(items[s], items[t])) {
        block.push_back(items[t]);
        used[t] = true;
      }
    // every pair inside must be linked, and nothing outside may be
    for (std::size_t x = 0; x < block.size(); ++x)
      for (std::size_t y = x + 1; y < block.size(); ++y)
        if (!linked(block[x], block[y]))
          throw NotASolution(std::string("not a solution: ") + what + " relation is not transitive");
    out.push_back(std::move(block));
  }
  for (std::size_t x = 0; x < out.size(); ++x)
    for (std::size_t y = x + 1; y < out.size(); ++y)
      for (int u : out[x])
        for (int v : out[y])
          if (linked(u, v))
            throw NotASolution(std::string("not a solution: ") + what + " relation is not transitive");
  return out;
}

Partition nations_from(const Labels& L, const MatchMatrix2& m) {
  std::vector<int> all(L.n);
  std::iota(all.begin(), all.end(), 1);
  Partition nations =
      classes(all, [&](int u, int v) { return L.at(u, v) != EdgeLabelI::Slash; }, "non-slash");
  for (std::size_t x = 0; x < nations.size(); ++x)
    for (std::size_t y = x + 1; y < nations.size(); ++y) {
      std::optional<Scalar> prod;
      for (int u : nations[x])
        for (int v : nations[y]) {
          const EdgeBlock& e = m.edge(std::min(u, v), std::max(u, v));
          Scalar bc = e.b * e.c;
          if (prod && *prod != bc)
            throw NotASolution("not a solution: slash products differ between two nations");
          prod = bc;
        }
    }
  return nations;
}

Partition counties_in(const Labels& L, const std::vector<int>& nation) {
  return classes(nation, [&](int u, int v) { return L.at(u, v) == EdgeLabelI::Zero; }, "zero-edge");
}

bool is_plus(EdgeLabelI l) { return l == EdgeLabelI::FPlus || l == EdgeLabelI::APlus; }
bool is_ferro(EdgeLabelI l) { return l == EdgeLabelI::FPlus || l == EdgeLabelI::FMinus; }

// Sort counties so that every edge from an earlier to a later county reads +.
Partition order_counties(const Labels& L, Partition counties) {
  std::size_t k = counties.size();
  std::vector<std::vector<int>> before(k, std::vector<int>(k, 0));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      if (x == y) continue;
      std::optional<bool> dir;
      for (int u : counties[x])
        for (int v : counties[y]) {
          bool fwd = is_plus(L.at(u, v));
          if (dir && *dir != fwd) throw NotASolution("not a solution: inconsistent county order");
          dir = fwd;
        }
      before[x][y] = *dir ? 1 : 0;
    }
  // a strict total order has out-degrees k-1, k-2, ..., 0
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  auto wins = [&](std::size_t x) { return std::accumulate(before[x].begin(), before[x].end(), 0); };
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return wins(x) > wins(y); });
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t s = t + 1; s < k; ++s)
      if (!before[idx[t]][idx[s]]) throw NotASolution("not a solution: county order has a cycle");
  Partition out;
  for (std::size_t x : idx) out.push_back(std::move(counties[x]));
  return out;
}

std::vector<Part> colour_counties(const Labels& L, const Partition& ordered) {
  std::size_t k = ordered.size();
  std::vector<int> colour(k, -1);
  colour[0] = 0;
  // counties are pairwise joined, so each is fixed by its relation to the first
  for (std::size_t x = 1; x < k; ++x) {
    EdgeLabelI l = L.at(ordered[0].front(), ordered[x].front());
    colour[x] = is_ferro(l) ? 0 : 1;
  }
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x + 1; y < k; ++y)
      for (int u : ordered[x])
        for (int v : ordered[y])
          if (is_ferro(L.at(u, v)) != (colour[x] == colour[y]))
            throw NotASolution("not a solution: colouring is not two-part");
  std::vector<Part> out;
  for (int c : colour) out.push_back(c == 0 ? Part::First : Part::Second);
  return out;
}

}  // namespace

Partition recover_nations(const MatchMatrix2& m) { return nations_from(label_all(m), m); }

Partition recover_counties(const MatchMatrix2& m) {
  Labels L = label_all(m);
  Partition out;
  for (const auto& nat : nations_from(L, m))
    for (auto& q : counties_in(L, nat)) out.push_back(std::move(q));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> recover_order(const MatchMatrix2& m) {
  Labels L = label_all(m);
  std::vector<Partition> out;
  for (const auto& nat : nations_from(L, m)) out.push_back(order_counties(L, counties_in(L, nat)));
  return out;
}

std::vector<std::vector<Part>> recover_colours(const MatchMatrix2& m) {
  Labels L = label_all(m);
  std::vector<std::vector<Part>> out;
  for (const auto& nat : nations_from(L, m))
    out.push_back(colour_counties(L, order_counties(L, counties_in(L, nat))));
  return out;
}

Classification classify(const MatchMatrix2& m) {
  if (!invertible(m)) throw NotASolution("not a solution: matrix is singular");
  if (!ybe_residual_direct(m).zero) throw NotASolution("not a solution: Yang-Baxter residual is nonzero");
  Classification out;
  Labels L = label_all(m);
  Partition nations = nations_from(L, m);
  std::vector<Nation> built;
  for (const auto& nat : nations) {
    Partition ordered = order_counties(L, counties_in(L, nat));
    std::vector<Part> tags = colour_counties(L, ordered);
    Nation x;
    for (std::size_t t = 0; t < ordered.size(); ++t) x.counties.push_back(County{ordered[t], tags[t]});
    built.push_back(std::move(x));
  }
  Configuration config(m.n(), built);
  ParamPoint pp;
  const auto& cn = config.nations();
  for (std::size_t i = 0; i < cn.size(); ++i) {
    int k = static_cast<int>(i) + 1;
    const Nation& nat = cn[i];
    Scalar alpha = m.vertex(nat.counties.front().vertices.front());
    pp.alpha[k] = alpha;
    if (nat.counties.size() < 2) continue;
    std::optional<Scalar> beta;
    for (const County& q : nat.counties)
      if (q.part == Part::Second) beta = m.vertex(q.vertices.front());
    if (!beta) {
      int u = nat.counties[0].vertices.front(), v = nat.counties[1].vertices.front();
      beta = m.edge(std::min(u, v), std::max(u, v)).trace() - alpha;
    }
    pp.beta[k] = *beta;
    for (const County& q : nat.counties)
      for (int v : q.vertices)
        if (m.vertex(v) != (q.part == Part::First ? alpha : *beta))
          throw NotASolution("not a solution: vertex scalars disagree inside a colour class");
    for (std::size_t x = 0; x < nat.counties.size(); ++x)
      for (std::size_t y = x + 1; y < nat.counties.size(); ++y)
        for (int u : nat.counties[x].vertices)
          for (int v : nat.counties[y].vertices) {
            const EdgeBlock& e = m.edge(std::min(u, v), std::max(u, v));
            if (e.trace() != Scalar(alpha + *beta) || e.det() != Scalar(alpha * *beta))
              throw NotASolution("not a solution: county block does not match its nation's eigenvalues");
          }
  }
  for (std::size_t i = 0; i < cn.size(); ++i)
    for (std::size_t j = i + 1; j < cn.size(); ++j) {
      int u = cn[i].counties.front().vertices.front(), v = cn[j].counties.front().vertices.front();
      const EdgeBlock& e = m.edge(std::min(u, v), std::max(u, v));
      Scalar bc = e.b * e.c;
      NationPair p{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
      if (auto r = rational_sqrt(bc)) {
        pp.mu[p] = *r;
      } else {
        pp.mu_sq[p] = bc;
        out.normalizations.push_back("nations " + std::to_string(p.first) + "," + std::to_string(p.second) +
                                     ": slash product " + to_string(bc) + " has no rational root, kept as mu_sq");
      }
    }
  out.germ = Germ{config, pp};
  MatchMatrix2 back = rec(out.germ);
  for (int i = 1; i <= m.n(); ++i)
    for (int j = i + 1; j <= m.n(); ++j)
      if (!(back.edge(i, j) == m.edge(i, j)))
        out.normalizations.push_back("edge " + std::to_string(i) + "," + std::to_string(j) + ": x-gauge rescaled");
  if (!x_equivalent(back, m)) throw NotASolution("not a solution: rebuilt matrix is not x-equivalent");
  return out;
}

MinusFree no_minus_rep(const Configuration& c) {
  std::vector<int> images(c.n());
  for (const Nation& nat : c.nations()) {
    std::vector<int> labels;
    for (const County& q : nat.counties) labels.insert(labels.end(), q.vertices.begin(), q.vertices.end());
    std::sort(labels.begin(), labels.end());
    std::size_t next = 0;
    for (const County& q : nat.counties)
      for (int v : q.vertices) images[v - 1] = labels[next++];
  }
  Permutation w(std::move(images));
  return MinusFree{configuration_perm(c, w), w};
}

namespace {

TriangleH act_triangle(const TriangleH& t, const Permutation& w, bool flip) {
  TriangleH out{};
  const int ends[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (int e = 0; e < 3; ++e) {
    int u = w(ends[e][0]), v = w(ends[e][1]);
    EdgeLabelH l = t[e];
    if (u > v) {
      std::swap(u, v);
      l = negate(l);
    }
    if (flip) l = negate(l);
    int idx = u == 1 ? (v == 2 ? 0 : 1) : 2;
    out[idx] = l;
  }
  return out;
}

std::vector<TriangleH> all_triangles() {
  std::vector<TriangleH> out;
  const EdgeLabelH ls[4] = {EdgeLabelH::Zero, EdgeLabelH::Slash, EdgeLabelH::Plus, EdgeLabelH::Minus};
  for (auto x : ls)
    for (auto y : ls)
      for (auto z : ls) out.push_back({x, y, z});
  return out;
}

}  // namespace

std::vector<TriangleH> g3_orbit(const TriangleH& t) {
  std::set<TriangleH> seen;
  for (const Permutation& w : all_permutations(3))
    for (bool flip : {false, true}) seen.insert(act_triangle(t, w, flip));
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<TriangleH>> g3_orbits() {
  std::vector<std::vector<TriangleH>> out;
  std::set<TriangleH> done;
  for (const TriangleH& t : all_triangles()) {
    if (done.count(t)) continue;
    auto o = g3_orbit(t);
    done.insert(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<Configuration> orbit(const Configuration& c, bool include_flip) {
  if (c.n() > 8) throw InvalidInput("orbit too large (n > 8)");
  std::set<Configuration> seen;
  for (const Permutation& w : all_permutations(c.n())) {
    Configuration x = configuration_perm(c, w);
    if (include_flip) seen.insert(flip_configuration(x));
    seen.insert(std::move(x));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace match_ybo

#include "match_ybo/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "match_ybo/errors.hpp"
#include "match_ybo/parallel.hpp"

namespace match_ybo {

namespace {

void check_prime(unsigned p) {
  if (p == 2) throw InvalidInput("prime 2 is not supported (signs collapse)");
  if (p < 3 || p > 101) throw InvalidInput("prime must be an odd prime below 102");
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidInput("not a prime: " + std::to_string(p));
}

unsigned pow_mod(unsigned base, unsigned e, unsigned p) {
  std::uint64_t r = 1, b = base % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<unsigned>(r);
}

}  // namespace

FieldElement::FieldElement(std::int64_t value, unsigned prime) : prime_(prime) {
  std::int64_t r = value % static_cast<std::int64_t>(prime);
  if (r < 0) r += prime;
  residue_ = static_cast<unsigned>(r);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return FieldElement(static_cast<std::int64_t>(residue_) + o.residue_, prime_);
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return FieldElement(static_cast<std::int64_t>(residue_) - o.residue_, prime_);
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return FieldElement(static_cast<std::int64_t>(residue_) * o.residue_, prime_);
}
FieldElement FieldElement::inverse() const {
  if (residue_ == 0) throw SingularMatrix("zero has no inverse");
  return FieldElement(pow_mod(residue_, prime_ - 2, prime_), prime_);
}

FibrePattern parse_pattern(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  bool commas = text.find(',') != std::string_view::npos;
  for (char ch : text) {
    if (ch == ' ') continue;
    if (commas) {
      if (ch == ',') {
        tokens.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    } else {
      tokens.emplace_back(1, ch);
    }
  }
  if (commas) tokens.push_back(cur);
  if (tokens.size() != 3) throw InvalidInput("fibre type needs three labels: \"" + std::string(text) + "\"");
  FibrePattern p;
  for (int e = 0; e < 3; ++e) {
    const std::string& t = tokens[e];
    if (t.size() == 1) {
      p.labels[e] = parse_label_h(t[0]);
    } else if (t.size() == 2 && (t[0] == 'f' || t[0] == 'a') && (t[1] == '+' || t[1] == '-')) {
      p.labels[e] = parse_label_h(t[1]);
      p.same_vertex[e] = t[0] == 'f';
    } else {
      throw InvalidInput("unknown fibre label \"" + t + "\"");
    }
  }
  return p;
}

std::string to_string(const FibrePattern& p) {
  std::string s;
  for (int e = 0; e < 3; ++e) {
    if (e) s += ",";
    if (p.same_vertex[e]) s += *p.same_vertex[e] ? "f" : "a";
    s += symbol(p.labels[e]);
  }
  return s;
}

namespace {

constexpr int kEdgeEnds[3][2] = {{1, 2}, {1, 3}, {2, 3}};
constexpr int vertex_var(int i) { return i - 1; }
constexpr int edge_var(int e, int slot) { return 3 + 4 * e + slot; }  // slot a=0 b=1 c=2 d=3

// Integer polynomial; a monomial is a sorted list of variable indices.
using Monomial = std::vector<std::uint8_t>;
using Poly = std::map<Monomial, long long>;

Poly mul(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      Monomial m = mx;
      m.insert(m.end(), my.begin(), my.end());
      std::sort(m.begin(), m.end());
      out[m] += cx * cy;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void add_into(Poly& acc, const Poly& x, long long sign) {
  for (const auto& [m, c] : x) acc[m] += sign * c;
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
}

using SymOp = std::map<TensorWord, std::map<TensorWord, Poly>>;

SymOp sym_compose(const SymOp& s, const SymOp& t) {
  SymOp out;
  for (const auto& [row, cols] : s) {
    std::map<TensorWord, Poly> acc;
    for (const auto& [mid, p] : cols) {
      auto it = t.find(mid);
      if (it == t.end()) continue;
      for (const auto& [col, q] : it->second) add_into(acc[col], mul(p, q), 1);
    }
    for (auto& [col, p] : acc)
      if (!p.empty()) out[row][col] = std::move(p);
  }
  return out;
}

struct CompiledPoly {
  std::vector<std::pair<long long, Monomial>> terms;
  int last_var = 0;
};

std::vector<CompiledPoly> build_polys() {
  SymOp s;
  auto var = [](int v) { return Poly{{Monomial{static_cast<std::uint8_t>(v)}, 1}}; };
  for (int i = 1; i <= 3; ++i) s[{i, i}][{i, i}] = var(vertex_var(i));
  for (int e = 0; e < 3; ++e) {
    int i = kEdgeEnds[e][0], j = kEdgeEnds[e][1];
    s[{i, j}][{i, j}] = var(edge_var(e, 0));
    s[{i, j}][{j, i}] = var(edge_var(e, 1));
    s[{j, i}][{i, j}] = var(edge_var(e, 2));
    s[{j, i}][{j, i}] = var(edge_var(e, 3));
  }
  SymOp f1, f2;
  for (const auto& [r, cols] : s)
    for (const auto& [c, p] : cols)
      for (int k = 1; k <= 3; ++k) {
        f1[{r[0], r[1], k}][{c[0], c[1], k}] = p;
        f2[{k, r[0], r[1]}][{k, c[0], c[1]}] = p;
      }
  SymOp lhs = sym_compose(sym_compose(f1, f2), f1);
  SymOp rhs = sym_compose(sym_compose(f2, f1), f2);
  std::set<Poly> distinct;
  std::set<std::pair<TensorWord, TensorWord>> keys;
  for (const auto& [r, cols] : lhs)
    for (const auto& [c, p] : cols) keys.insert({r, c});
  for (const auto& [r, cols] : rhs)
    for (const auto& [c, p] : cols) keys.insert({r, c});
  auto get = [](const SymOp& op, const TensorWord& r, const TensorWord& c) {
    auto it = op.find(r);
    if (it == op.end()) return Poly{};
    auto jt = it->second.find(c);
    return jt == it->second.end() ? Poly{} : jt->second;
  };
  for (const auto& [r, c] : keys) {
    Poly d = get(lhs, r, c);
    add_into(d, get(rhs, r, c), -1);
    if (d.empty()) continue;
    if (d.begin()->second < 0)
      for (auto& [m, k] : d) k = -k;
    distinct.insert(d);
  }
  std::vector<CompiledPoly> out;
  for (const Poly& p : distinct) {
    CompiledPoly cp;
    for (const auto& [m, c] : p) {
      cp.terms.emplace_back(c, m);
      for (auto v : m) cp.last_var = std::max(cp.last_var, static_cast<int>(v));
    }
    out.push_back(std::move(cp));
  }
  return out;
}

const std::vector<CompiledPoly>& polys() {
  static const std::vector<CompiledPoly> p = build_polys();
  return p;
}

long long eval_mod(const CompiledPoly& cp, const FibrePoint& x, unsigned p) {
  long long acc = 0;
  for (const auto& [c, m] : cp.terms) {
    long long t = ((c % static_cast<long long>(p)) + p) % p;
    for (auto v : m) t = t * x[v] % p;
    acc = (acc + t) % p;
  }
  return acc;
}

bool block_invertible(const FibrePoint& x, int e, unsigned p) {
  long long a = x[edge_var(e, 0)], b = x[edge_var(e, 1)], c = x[edge_var(e, 2)], d = x[edge_var(e, 3)];
  return ((a * d - b * c) % static_cast<long long>(p) + p) % p != 0;
}

// Search order: v1 v2 e12 v3 e13 e23, with (a,d,b,c) inside an edge.
std::vector<int> search_order() {
  std::vector<int> order{vertex_var(1), vertex_var(2)};
  auto edge = [&](int e) {
    for (int slot : {0, 3, 1, 2}) order.push_back(edge_var(e, slot));
  };
  edge(0);
  order.push_back(vertex_var(3));
  edge(1);
  edge(2);
  return order;
}

}  // namespace

bool conforms(const FibrePattern& t, const FibrePoint& x) {
  for (int i = 1; i <= 3; ++i)
    if (x[vertex_var(i)] == 0) return false;
  for (int e = 0; e < 3; ++e) {
    unsigned a = x[edge_var(e, 0)], b = x[edge_var(e, 1)], c = x[edge_var(e, 2)], d = x[edge_var(e, 3)];
    bool ok = false;
    switch (t.labels[e]) {
      case EdgeLabelH::Zero: ok = a && !b && !c && d; break;
      case EdgeLabelH::Slash: ok = !a && b && c == 1 && !d; break;
      case EdgeLabelH::Plus: ok = a && b && c == 1 && !d; break;
      case EdgeLabelH::Minus: ok = !a && b && c == 1 && d; break;
    }
    if (!ok) return false;
    if (t.same_vertex[e]) {
      bool same = x[vertex_var(kEdgeEnds[e][0])] == x[vertex_var(kEdgeEnds[e][1])];
      if (same != *t.same_vertex[e]) return false;
    }
  }
  return true;
}

bool fibre_satisfies(const FibrePoint& x, unsigned prime) {
  for (int i = 1; i <= 3; ++i)
    if (x[vertex_var(i)] % prime == 0) return false;
  for (int e = 0; e < 3; ++e)
    if (!block_invertible(x, e, prime)) return false;
  for (const auto& cp : polys())
    if (eval_mod(cp, x, prime) != 0) return false;
  return true;
}

void for_each_fibre_solution(const FibrePattern& t, unsigned prime,
                             const std::function<void(const FibrePoint&)>& visit) {
  check_prime(prime);
  // fixed[v] = value, or -1 if v ranges over the nonzero residues
  std::array<int, 15> fixed;
  fixed.fill(-1);
  for (int e = 0; e < 3; ++e) {
    switch (t.labels[e]) {
      case EdgeLabelH::Zero: fixed[edge_var(e, 1)] = 0; fixed[edge_var(e, 2)] = 0; break;
      case EdgeLabelH::Slash: fixed[edge_var(e, 0)] = 0; fixed[edge_var(e, 2)] = 1; fixed[edge_var(e, 3)] = 0; break;
      case EdgeLabelH::Plus: fixed[edge_var(e, 2)] = 1; fixed[edge_var(e, 3)] = 0; break;
      case EdgeLabelH::Minus: fixed[edge_var(e, 0)] = 0; fixed[edge_var(e, 2)] = 1; break;
    }
  }
  std::vector<int> order = search_order();
  std::vector<int> pos(15);
  for (int k = 0; k < 15; ++k) pos[order[k]] = k;
  // checks that become decidable once position k is assigned
  std::vector<std::vector<const CompiledPoly*>> poly_at(15);
  for (const auto& cp : polys()) {
    int last = 0;
    for (const auto& [c, m] : cp.terms)
      for (auto v : m) last = std::max(last, pos[v]);
    poly_at[last].push_back(&cp);
  }
  std::vector<std::vector<int>> block_at(15), vertex_rule_at(15);
  for (int e = 0; e < 3; ++e) {
    int last = 0;
    for (int slot = 0; slot < 4; ++slot) last = std::max(last, pos[edge_var(e, slot)]);
    block_at[last].push_back(e);
    if (t.same_vertex[e]) {
      int lv = std::max(pos[vertex_var(kEdgeEnds[e][0])], pos[vertex_var(kEdgeEnds[e][1])]);
      vertex_rule_at[lv].push_back(e);
    }
  }
  auto passes = [&](const FibrePoint& x, int k) {
    for (int e : vertex_rule_at[k]) {
      bool same = x[vertex_var(kEdgeEnds[e][0])] == x[vertex_var(kEdgeEnds[e][1])];
      if (same != *t.same_vertex[e]) return false;
    }
    for (int e : block_at[k])
      if (!block_invertible(x, e, prime)) return false;
    for (const CompiledPoly* cp : poly_at[k])
      if (eval_mod(*cp, x, prime) != 0) return false;
    return true;
  };
  // the first free variable is split across workers; visits are serialized
  std::mutex visit_mu;
  std::function<void(FibrePoint&, int)> descend = [&](FibrePoint& x, int k) {
    if (k == 15) {
      std::lock_guard<std::mutex> lock(visit_mu);
      visit(x);
      return;
    }
    int v = order[k];
    if (fixed[v] >= 0) {
      x[v] = static_cast<unsigned>(fixed[v]);
      if (passes(x, k)) descend(x, k + 1);
      return;
    }
    for (unsigned val = 1; val < prime; ++val) {
      x[v] = val;
      if (passes(x, k)) descend(x, k + 1);
    }
  };
  // order[0] is v1, always free
  parallel_for(prime - 1, [&](std::size_t i) {
    FibrePoint x{};
    x[order[0]] = static_cast<unsigned>(i + 1);
    if (passes(x, 0)) descend(x, 1);
  });
}

bool in_family(const FibrePattern& t, const FibrePoint& x, unsigned prime) {
  if (!conforms(t, x)) return false;
  const long long p = prime;
  auto md = [&](long long v) { return ((v % p) + p) % p; };
  // nations: vertices joined by non-slash edges
  int nation[4] = {0, 1, 2, 3};
  for (int e = 0; e < 3; ++e)
    if (t.labels[e] != EdgeLabelH::Slash) {
      int u = kEdgeEnds[e][0], v = kEdgeEnds[e][1];
      int from = nation[v], to = nation[u];
      for (int w = 1; w <= 3; ++w)
        if (nation[w] == from) nation[w] = to;
    }
  std::map<std::pair<int, int>, long long> slash_b;
  std::map<int, std::pair<long long, long long>> trace_det;
  for (int e = 0; e < 3; ++e) {
    int u = kEdgeEnds[e][0], v = kEdgeEnds[e][1];
    long long a = x[edge_var(e, 0)], b = x[edge_var(e, 1)], d = x[edge_var(e, 3)];
    long long xu = x[vertex_var(u)], xv = x[vertex_var(v)];
    switch (t.labels[e]) {
      case EdgeLabelH::Zero:
        if (!(a == d && a == xu && a == xv)) return false;
        break;
      case EdgeLabelH::Slash: {
        auto key = std::minmax(nation[u], nation[v]);
        auto [it, fresh] = slash_b.emplace(key, b);
        if (!fresh && it->second != b) return false;
        break;
      }
      default: {
        long long s = t.labels[e] == EdgeLabelH::Plus ? a : d;
        long long prod = md(-b);
        auto [it, fresh] = trace_det.emplace(nation[u], std::make_pair(s, prod));
        if (!fresh && it->second != std::make_pair(s, prod)) return false;
        for (long long r : {xu, xv})
          if (md(r * r - s * r + prod) != 0) return false;
        break;
      }
    }
  }
  return true;
}

std::string family_description(const TriangleH& t) {
  int slashes = static_cast<int>(std::count(t.begin(), t.end(), EdgeLabelH::Slash));
  int signs = static_cast<int>(std::count(t.begin(), t.end(), EdgeLabelH::Plus) +
                               std::count(t.begin(), t.end(), EdgeLabelH::Minus));
  std::string s;
  if (slashes == 3) return "free vertex scalars, slash blocks [[0,b],[1,0]] with independent b";
  if (slashes == 2) s = "slash blocks to the lone vertex share b; ";
  if (signs == 0) return s + "the joined vertices carry one scalar x and the block x*I";
  return s + "county blocks share trace s and det P, every endpoint a root of t^2 - s t + P";
}

FibreResult enumerate_fibre(const FibrePattern& t, unsigned prime, std::size_t keep) {
  FibreResult r;
  r.pattern = t;
  r.prime = prime;
  r.family = family_description(t.labels);
  for_each_fibre_solution(t, prime, [&](const FibrePoint& x) {
    ++r.count;
    if (r.sample.size() < keep) r.sample.push_back(x);
    if (!in_family(t, x, prime)) {
      ++r.family_misses;
      r.matches_family = false;
    }
  });
  // X-action: rescale b by y and c by 1/y on each edge with b*c != 0
  std::mt19937_64 rng(prime * 1000003ull + r.count);
  std::uniform_int_distribution<unsigned> pick(1, prime - 1);
  for (const FibrePoint& x : r.sample) {
    for (int trial = 0; trial < 4; ++trial) {
      FibrePoint y = x;
      for (int e = 0; e < 3; ++e) {
        if (y[edge_var(e, 1)] == 0 || y[edge_var(e, 2)] == 0) continue;
        FieldElement s(pick(rng), prime);
        y[edge_var(e, 1)] = (FieldElement(y[edge_var(e, 1)], prime) * s).residue();
        y[edge_var(e, 2)] = (FieldElement(y[edge_var(e, 2)], prime) * s.inverse()).residue();
      }
      if (!fibre_satisfies(y, prime)) r.x_closed = false;
    }
  }
  return r;
}

std::optional<FibrePoint> reduce_mod_p(const MatchMatrix2& m, unsigned prime) {
  check_prime(prime);
  if (m.n() != 3) throw InvalidInput("fibre points live at n = 3");
  MatchMatrix2 g = x_normalize(m);
  auto red = [&](const Scalar& q) -> std::optional<unsigned> {
    mpz_class num = q.get_num() % prime, den = q.get_den() % prime;
    long long nn = num.get_si(), dd = den.get_si();
    nn = (nn % prime + prime) % prime;
    dd = (dd % prime + prime) % prime;
    if (dd == 0) return std::nullopt;
    return (FieldElement(nn, prime) * FieldElement(dd, prime).inverse()).residue();
  };
  FibrePoint x{};
  for (int i = 1; i <= 3; ++i) {
    auto v = red(g.vertex(i));
    if (!v) return std::nullopt;
    x[vertex_var(i)] = *v;
  }
  for (int e = 0; e < 3; ++e) {
    const EdgeBlock& b = g.edge(kEdgeEnds[e][0], kEdgeEnds[e][1]);
    const Scalar* slots[4] = {&b.a, &b.b, &b.c, &b.d};
    for (int s = 0; s < 4; ++s) {
      auto v = red(*slots[s]);
      if (!v) return std::nullopt;
      x[edge_var(e, s)] = *v;
    }
  }
  return x;
}

std::size_t ybe_polynomial_count() { return polys().size(); }

std::vector<TriangleH> fibre_representatives() {
  std::vector<TriangleH> out;
  for (const char* s : {"///", "//+", "/++", "/+-", "+++", "+-+", "0//", "0/+", "0-+", "0++", "00/", "00-", "000"})
    out.push_back(parse_triangle(s));
  return out;
}

std::vector<FibreResult> fibre_report(unsigned prime) {
  std::vector<FibreResult> out;
  for (const TriangleH& t : fibre_representatives()) out.push_back(enumerate_fibre(FibrePattern{t, {}}, prime));
  return out;
}

}  // namespace match_ybo

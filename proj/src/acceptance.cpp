#include "match_ybo/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "match_ybo/classify.hpp"
#include "match_ybo/errors.hpp"
#include "match_ybo/oracle.hpp"
#include "match_ybo/parallel.hpp"
#include "match_ybo/recipe.hpp"
#include "match_ybo/signature.hpp"
#include "match_ybo/ybe.hpp"

namespace match_ybo {

Configuration configuration_from_edge_string(int n, std::string_view labels) {
  if (static_cast<int>(labels.size()) != n * (n - 1) / 2)
    throw InvalidInput("edge string needs n(n-1)/2 labels");
  std::map<std::pair<int, int>, char> lab;
  std::size_t k = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      char ch = labels[k++];
      if (ch != '0' && ch != 'f' && ch != 'a' && ch != '/') throw InvalidInput("edge labels are 0, f, a or /");
      lab[{i, j}] = ch;
    }
  auto at = [&](int u, int v) { return lab.at({std::min(u, v), std::max(u, v)}); };
  std::vector<int> nation(n + 1, 0), county(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    nation[v] = v;
    county[v] = v;
    for (int u = 1; u < v; ++u) {
      if (at(u, v) != '/' && nation[v] == v) nation[v] = nation[u];
      if (at(u, v) == '0' && county[v] == v) county[v] = county[u];
    }
  }
  std::vector<Nation> nations;
  for (int root = 1; root <= n; ++root) {
    if (nation[root] != root) continue;
    Nation nat;
    for (int v = 1; v <= n; ++v) {
      if (nation[v] != root || county[v] != v) continue;
      County q;
      for (int u = 1; u <= n; ++u)
        if (county[u] == v) q.vertices.push_back(u);
      q.part = (v == root || at(root, v) == 'f') ? Part::First : Part::Second;
      nat.counties.push_back(std::move(q));
    }
    nations.push_back(std::move(nat));
  }
  Configuration c(n, std::move(nations));
  // the string must be exactly what c induces
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      char want = c.nation_of(u) != c.nation_of(v)   ? '/'
                  : c.county_of(u) == c.county_of(v) ? '0'
                  : c.part_of(u) == c.part_of(v)     ? 'f'
                                                     : 'a';
      if (at(u, v) != want) throw InvalidInput("edge string is not consistent: " + std::string(labels));
    }
  return c;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Ctx {
  SuiteLevel level;
  std::ostringstream detail;
  bool ok = true;
  std::mutex mu;

  void fail(const std::string& why) {
    std::lock_guard<std::mutex> lock(mu);
    if (ok) detail << "FAILED: ";
    else detail << "; ";
    detail << why;
    ok = false;
  }
};

std::vector<std::uint64_t> seeds(SuiteLevel level) {
  if (level == SuiteLevel::Quick) return {1};
  return {1, 2, 3};
}

int max_n(SuiteLevel level) { return level == SuiteLevel::Quick ? 4 : 5; }

struct GermCase {
  Germ germ;
  std::string tag;
};

std::vector<GermCase> transversal_germs(int n_lo, int n_hi, const std::vector<std::uint64_t>& ss) {
  std::vector<GermCase> out;
  for (int n = n_lo; n <= n_hi; ++n)
    for (const Configuration& c : enumerate_transversal(n))
      for (auto s : ss) out.push_back({Germ{c, generic_point(c, s)}, c.to_string() + " seed " + std::to_string(s)});
  return out;
}

void c1_counts(Ctx& ctx) {
  auto t0 = Clock::now();
  const int expected[] = {1, 4, 13, 46, 154};
  for (int n = 1; n <= 5; ++n) {
    auto t = enumerate_transversal(n);
    std::set<Configuration> distinct(t.begin(), t.end());
    if (static_cast<int>(t.size()) != expected[n - 1] || distinct.size() != t.size() ||
        euler_count(n) != expected[n - 1])
      ctx.fail("N=" + std::to_string(n) + " got " + std::to_string(t.size()));
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= 5) ctx.fail("took " + std::to_string(secs) + "s");
  ctx.detail << "|T_N| = 1,4,13,46,154";
}

void c2_completeness(Ctx& ctx) {
  auto t0 = Clock::now();
  auto cases = transversal_germs(1, max_n(ctx.level), seeds(ctx.level));
  parallel_for(cases.size(), [&](std::size_t i) {
    MatchMatrix2 m = rec(cases[i].germ);
    if (!invertible(m) || !ybe_residual_direct(m).zero) ctx.fail("rec fails for " + cases[i].tag);
  });
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= 300) ctx.fail("took " + std::to_string(secs) + "s");
  ctx.detail << cases.size() << " germs solve exactly";
}

MatchMatrix2 random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  MatchMatrix2 m(n);
  for (int i = 1; i <= n; ++i) m.vertex(i) = entry(rng);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) m.edge(i, j) = EdgeBlock{entry(rng), entry(rng), entry(rng), entry(rng)};
  return m;
}

Scalar* entry_slot(MatchMatrix2& m, int which) {
  // 0..n-1 vertices, then 4 slots per edge
  int n = m.n();
  if (which < n) return &m.vertex(which + 1);
  which -= n;
  int e = which / 4, slot = which % 4;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (e-- == 0) {
        EdgeBlock& b = m.edge(i, j);
        Scalar* s[4] = {&b.a, &b.b, &b.c, &b.d};
        return s[slot];
      }
  throw InvalidInput("entry index out of range");
}

void c3_constraints(Ctx& ctx) {
  std::mt19937_64 rng(20240611);
  std::vector<MatchMatrix2> pool;
  for (int k = 0; k < 500; ++k) pool.push_back(random_matrix(k % 2 ? 4 : 3, rng));
  std::vector<MatchMatrix2> recs;
  for (const auto& gc : transversal_germs(3, 4, seeds(ctx.level))) recs.push_back(rec(gc.germ));
  pool.insert(pool.end(), recs.begin(), recs.end());
  for (int k = 0; k < 50; ++k) {
    MatchMatrix2 m = recs[rng() % recs.size()];
    int slots = m.n() + 2 * m.n() * (m.n() - 1);
    Scalar* s = entry_slot(m, static_cast<int>(rng() % slots));
    *s += static_cast<int>(rng() % 3) + 1;
    pool.push_back(m);
  }
  std::vector<int> verdict(pool.size(), 0);
  parallel_for(pool.size(), [&](std::size_t i) {
    bool d = ybe_residual_direct(pool[i]).zero;
    bool c = constraint_residuals(pool[i]).zero;
    bool s = is_solution_by_subsets(pool[i]).zero;
    if (d != c || d != s) ctx.fail("methods disagree on pool item " + std::to_string(i));
    verdict[i] = d ? 1 : -1;
  });
  long pos = std::count(verdict.begin(), verdict.end(), 1);
  long neg = std::count(verdict.begin(), verdict.end(), -1);
  if (pos < 20 || neg < 20) ctx.fail("pool too one-sided");
  ctx.detail << pool.size() << " matrices, " << pos << " solutions, " << neg << " non-solutions, all agree";
}

void c4_subsets(Ctx& ctx) {
  std::mt19937_64 rng(777);
  int trials = 0;
  for (int n : {4, 5}) {
    auto t = enumerate_transversal(n);
    for (int trial = 0; trial < 10; ++trial) {
      const Configuration& c = t[rng() % t.size()];
      MatchMatrix2 m = rec(Germ{c, generic_point(c, 1 + rng() % 3)});
      std::vector<int> tri;
      while (tri.size() < 3) {
        int v = 1 + static_cast<int>(rng() % n);
        if (std::find(tri.begin(), tri.end(), v) == tri.end()) tri.push_back(v);
      }
      std::sort(tri.begin(), tri.end());
      int pick = static_cast<int>(rng() % 3);
      int i = pick == 2 ? tri[1] : tri[0], j = pick == 0 ? tri[1] : tri[2];
      bool before_direct = ybe_residual_direct(m).zero;
      bool before_subsets = is_solution_by_subsets(m).zero;
      bool flipped = false;
      for (int delta = 1; delta <= 5 && !flipped; ++delta) {
        MatchMatrix2 bad = m;
        bad.edge(i, j).a += delta;
        if (ybe_residual_direct(bad).zero) continue;
        flipped = true;
        ResidualReport sub = is_solution_by_subsets(bad);
        bool has_tri = std::find(sub.failing_subsets.begin(), sub.failing_subsets.end(), tri) !=
                       sub.failing_subsets.end();
        if (!before_direct || !before_subsets || sub.zero || !has_tri)
          ctx.fail("N=" + std::to_string(n) + " trial " + std::to_string(trial) + " subsets verdict did not follow");
      }
      if (!flipped) ctx.fail("corruption did not break N=" + std::to_string(n) + " trial " + std::to_string(trial));
      ++trials;
    }
  }
  ctx.detail << trials << " corruption trials, subsets and direct flip together";
}

void c5_roundtrip(Ctx& ctx) {
  auto cases = transversal_germs(1, max_n(ctx.level), seeds(ctx.level));
  std::atomic<long> checked{0};
  parallel_for(cases.size(), [&](std::size_t k) {
    const Germ& g = cases[k].germ;
    MatchMatrix2 m = rec(g);
    Classification cl = classify(m);
    if (!(cl.germ.config == g.config)) ctx.fail("classify(rec) differs for " + cases[k].tag);
    if (!x_equivalent(rec(cl.germ), m)) ctx.fail("rec(classify) not x-equivalent for " + cases[k].tag);
    ++checked;
    if (g.config.n() > 4) return;
    for (const Permutation& w : all_permutations(g.config.n())) {
      MatchMatrix2 mw = act_perm(m, w);
      Classification cw = classify(mw);
      if (!(cw.germ.config == configuration_perm(g.config, w)))
        ctx.fail("image under " + w.to_string() + " misclassified for " + cases[k].tag);
      if (!x_equivalent(rec(cw.germ), mw)) ctx.fail("image round trip not x-equivalent for " + cases[k].tag);
      ++checked;
    }
  });
  ctx.detail << checked.load() << " matrices round-trip";
}

void c6_signatures(Ctx& ctx) {
  auto check = [&](const Configuration& c, const std::vector<int>& want, const std::string& name) {
    Signature expect{want};
    if (!(signature_formula(c) == expect)) ctx.fail(name + " formula " + signature_formula(c).to_string());
    for (auto s : seeds(SuiteLevel::Full)) {
      Signature got = degeneracy_partition(spectrum(rec(Germ{c, generic_point(c, s)})));
      if (!(got == expect)) ctx.fail(name + " sampled " + got.to_string());
    }
  };
  // N = 2, by transversal position
  {
    auto t = enumerate_transversal(2);
    std::multiset<std::vector<int>> got, want{{4}, {3, 1}, {2, 2}, {1, 1, 1, 1}};
    for (const auto& c : t) {
      got.insert(signature_formula(c).parts);
      check(c, signature_formula(c).parts, "N=2 " + c.to_string());
    }
    if (got != want) ctx.fail("N=2 row differs");
  }
  const std::vector<std::pair<std::string, std::vector<int>>> n3 = {
      {"000", {9}},          {"0aa", {6, 3}},          {"0ff", {7, 2}},
      {"afa", {5, 4}},       {"faa", {5, 4}},          {"fff", {6, 3}},
      {"0//", {4, 2, 2, 1}}, {"f//", {3, 2, 2, 1, 1}}, {"a//", {2, 2, 2, 2, 1}},
      {"///", {1, 1, 1, 1, 1, 1, 1, 1, 1}}};
  for (const auto& [s, p] : n3) check(configuration_from_edge_string(3, s), p, "N=3 " + s);
  const std::vector<std::pair<std::string, std::vector<int>>> n4 = {
      {"000000", {16}},   {"000aaa", {12, 4}}, {"000fff", {13, 3}}, {"0aaaa0", {8, 8}},
      {"0ffff0", {12, 4}}, {"aa0faa", {9, 7}},  {"aa0aff", {10, 6}}, {"ff0aaa", {10, 6}},
      {"ff0fff", {11, 5}}, {"faaaaf", {8, 8}},  {"fffaaa", {9, 7}},  {"ffffff", {10, 6}}};
  for (const auto& [s, p] : n4) check(configuration_from_edge_string(4, s), p, "N=4 " + s);
  ctx.detail << "N=2 row, 10 N=3 entries, 12 N=4 entries reproduced";
}

void c7_table(Ctx& ctx) {
  auto orbits = g3_orbits();
  std::size_t total = 0;
  for (const auto& o : orbits) total += o.size();
  if (total != 64) ctx.fail("orbit sizes sum to " + std::to_string(total));
  const std::vector<std::vector<std::string>> rows = {
      {"///"},
      {"//-", "//+", "/-/", "/+/", "+//", "-//"},
      {"/-+", "/+-", "-/-", "+/+", "+-/", "-+/"},
      {"-+-", "+-+"},
      {"0//", "/0/", "//0"},
      {"0-+", "0+-", "-0-", "+0+", "+-0", "-+0"},
      {"00/", "0/0", "/00"},
      {"00+", "00-", "0+0", "0-0", "+00", "-00"},
      {"000"}};
  for (const auto& row : rows) {
    std::vector<TriangleH> want;
    for (const auto& s : row) want.push_back(parse_triangle(s));
    std::sort(want.begin(), want.end());
    if (std::find(orbits.begin(), orbits.end(), want) == orbits.end()) ctx.fail("row starting " + row[0] + " is not an orbit");
  }
  std::set<std::vector<TriangleH>> hit;
  for (const TriangleH& t : fibre_representatives()) hit.insert(g3_orbit(t));
  if (hit.size() != fibre_representatives().size()) ctx.fail("first-column entries share an orbit");
  if (hit.size() != orbits.size()) ctx.fail("first column misses an orbit");
  ctx.detail << orbits.size() << " orbits, sizes sum to 64, nine clean rows match";
}

void c8_fibres(Ctx& ctx) {
  auto t0 = Clock::now();
  std::vector<unsigned> primes = ctx.level == SuiteLevel::Quick ? std::vector<unsigned>{7} : std::vector<unsigned>{7, 11};
  const char* empty[] = {"/++", "/+-", "0/+", "00/", "+-+", "0-+", "00-"};
  const char* full[] = {"///", "//+", "+++", "0//", "000", "0++"};
  std::ostringstream counts;
  for (unsigned p : primes) {
    for (const char* s : empty) {
      auto r = enumerate_fibre(parse_pattern(s), p);
      if (r.count) ctx.fail(std::string(s) + " nonempty over F_" + std::to_string(p));
    }
    for (const char* s : full) {
      auto r = enumerate_fibre(parse_pattern(s), p);
      if (!r.count) ctx.fail(std::string(s) + " empty over F_" + std::to_string(p));
      if (!r.matches_family) ctx.fail(std::string(s) + " has hits outside its family over F_" + std::to_string(p));
      if (!r.x_closed) ctx.fail(std::string(s) + " not closed under rescaling over F_" + std::to_string(p));
      counts << " " << s << "@" << p << "=" << r.count;
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= 600) ctx.fail("took " + std::to_string(secs) + "s");
  ctx.detail << "empty/nonempty as stated;" << counts.str();
}

void c9_no_minus(Ctx& ctx) {
  std::atomic<long> checked{0};
  for (int n = 1; n <= 4; ++n) {
    auto t = enumerate_transversal(n);
    auto perms = all_permutations(n);
    parallel_for(t.size(), [&](std::size_t k) {
      for (const Permutation& w : perms) {
        Configuration c = configuration_perm(t[k], w);
        MinusFree mf = no_minus_rep(c);
        if (!(mf.config == configuration_perm(c, mf.witness))) ctx.fail("witness mismatch " + c.to_string());
        MatchMatrix2 m = rec(Germ{mf.config, generic_point(mf.config, 1)});
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            auto l = label_edge(m, i, j);
            if (l == EdgeLabelI::FMinus || l == EdgeLabelI::AMinus) ctx.fail("minus edge left in " + mf.config.to_string());
          }
        for (const Nation& nat : mf.config.nations()) {
          std::vector<int> labels;
          for (const County& q : nat.counties) labels.insert(labels.end(), q.vertices.begin(), q.vertices.end());
          std::sort(labels.begin(), labels.end());
          for (const County& q : nat.counties) {
            auto first = std::find(labels.begin(), labels.end(), q.vertices.front());
            if (!std::equal(q.vertices.begin(), q.vertices.end(), first))
              ctx.fail("county not consecutive in " + mf.config.to_string());
          }
        }
        ++checked;
      }
    });
  }
  ctx.detail << checked.load() << " relabelled configurations normalize minus-free";
}

void c10_symmetry(Ctx& ctx) {
  auto cases = transversal_germs(1, 4, seeds(ctx.level));
  parallel_for(cases.size(), [&](std::size_t k) {
    const Germ& g = cases[k].germ;
    const std::string& tag = cases[k].tag;
    MatchMatrix2 m = rec(g);
    MatchMatrix2 xn = x_normalize(m);
    if (!(x_normalize(xn) == xn) || !x_equivalent(xn, m)) ctx.fail("x_normalize not idempotent on " + tag);
    if (!(act_flip(act_flip(m)) == m)) ctx.fail("flip not an involution on " + tag);
    if (!(flip_configuration(flip_configuration(g.config)) == g.config)) ctx.fail("configuration flip not an involution on " + tag);
    if (!is_solution(act_flip(m)) || !is_solution(xn)) ctx.fail("flip or gauge loses solution for " + tag);
    if (!x_equivalent(act_flip(m), rec(flip_germ(g)))) ctx.fail("flip does not match flipped germ for " + tag);
    for (const Permutation& w : all_permutations(g.config.n())) {
      MatchMatrix2 mw = act_perm(m, w);
      if (!(act_flip(mw) == act_perm(act_flip(m), w))) ctx.fail("flip and relabel do not commute on " + tag);
      if (!(flip_configuration(configuration_perm(g.config, w)) == configuration_perm(flip_configuration(g.config), w)))
        ctx.fail("configuration flip and relabel do not commute on " + tag);
      if (!is_solution(mw)) ctx.fail("relabel loses solution for " + tag);
    }
  });
  ctx.detail << cases.size() << " rec outputs checked under gauge, flip and relabelling";
}

const char* names[kCriterionCount] = {"transversal counts",      "completeness of rec",
                                      "constraint equivalence",  "3-subset reduction",
                                      "round-trip classification", "signature tables",
                                      "triangle orbit table",    "fibre oracle",
                                      "no-minus normalization",  "symmetry suite"};

}  // namespace

CriterionResult run_criterion(int id, SuiteLevel level) {
  if (id < 1 || id > kCriterionCount) throw InvalidInput("criterion id must be 1..10");
  Ctx ctx{level, {}, true, {}};
  auto t0 = Clock::now();
  try {
    switch (id) {
      case 1: c1_counts(ctx); break;
      case 2: c2_completeness(ctx); break;
      case 3: c3_constraints(ctx); break;
      case 4: c4_subsets(ctx); break;
      case 5: c5_roundtrip(ctx); break;
      case 6: c6_signatures(ctx); break;
      case 7: c7_table(ctx); break;
      case 8: c8_fibres(ctx); break;
      case 9: c9_no_minus(ctx); break;
      default: c10_symmetry(ctx); break;
    }
  } catch (const std::exception& e) {
    ctx.fail(std::string("exception: ") + e.what());
  }
  CriterionResult r;
  r.id = id;
  r.name = names[id - 1];
  r.passed = ctx.ok;
  r.detail = ctx.detail.str();
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(SuiteLevel level, std::ostream* progress) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, level));
    if (progress) *progress << format_result(out.back()) << std::endl;
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << "): " << r.detail << " ["
    << r.seconds << "s]";
  return s.str();
}

}  // namespace match_ybo

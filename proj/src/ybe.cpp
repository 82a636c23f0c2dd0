#include "match_ybo/ybe.hpp"

#include "match_ybo/errors.hpp"

namespace match_ybo {

std::string to_string(ResidualSource s) {
  switch (s) {
    case ResidualSource::Direct: return "direct";
    case ResidualSource::Constraints: return "constraints";
    default: return "subsets";
  }
}

ResidualSource parse_source(const std::string& name) {
  if (name == "direct") return ResidualSource::Direct;
  if (name == "constraints") return ResidualSource::Constraints;
  if (name == "subsets") return ResidualSource::Subsets;
  throw InvalidInput("unknown method: " + name);
}

namespace {

void record(ResidualReport& r, Witness w) {
  r.zero = false;
  ++r.nonzero_count;
  if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(std::move(w));
}

// Equations on vertices 1,2 and edge 12 only.
std::array<Scalar, 5> pair_equations(const MatchMatrix2& m) {
  const Scalar& v1 = m.vertex(1);
  const Scalar& v2 = m.vertex(2);
  const EdgeBlock& e = m.edge(1, 2);
  Scalar bc = e.b * e.c;
  return {
      Scalar(e.a * (v1 * v1 - e.a * v1 - bc)),
      Scalar(e.a * (v2 * v2 - e.a * v2 - bc)),
      Scalar(e.a * e.c * e.d),
      Scalar(e.a * e.b * e.d),
      Scalar(e.a * e.d * (e.a - e.d)),
  };
}

std::array<Scalar, 8> triple_equations(const MatchMatrix2& m) {
  auto p = pair_equations(m);
  const EdgeBlock& e12 = m.edge(1, 2);
  const EdgeBlock& e13 = m.edge(1, 3);
  const EdgeBlock& e23 = m.edge(2, 3);
  return {
      p[0], p[1], p[2], p[3], p[4],
      Scalar(e12.c * (e13.d * e23.d - e12.d * e23.d - e12.a * e13.d)),
      Scalar(e12.c * (-e13.a * e23.a + e12.a * e23.a + e12.d * e13.a)),
      Scalar(-e13.a * e23.d * e23.d + e13.a * e13.a * e23.d - e12.a * e23.b * e23.c +
             e12.a * e13.b * e13.c),
  };
}

}  // namespace

ResidualReport ybe_residual_direct(const MatchMatrix2& m) {
  ResidualReport r;
  r.source = ResidualSource::Direct;
  SparseOp s = to_sparse(m);
  SparseOp id = SparseOp::identity(1, m.n());
  SparseOp f1 = kron(s, id);
  SparseOp f2 = kron(id, s);
  SparseOp lhs = compose(compose(f1, f2), f1);
  SparseOp rhs = compose(compose(f2, f1), f2);
  SparseOp diff = subtract(lhs, rhs);
  for (const auto& [row, cols] : diff.rows())
    for (const auto& [col, v] : cols) record(r, Witness{row, col, v, {}, 0});
  return r;
}

std::array<Scalar, 8> base_constraints(const MatchMatrix2& m, int i, int j, int k) {
  if (!(1 <= i && i < j && j < k && k <= m.n())) throw InvalidInput("base constraints need i < j < k <= n");
  return triple_equations(restrict(m, {i, j, k}));
}

ResidualReport constraint_residuals(const MatchMatrix2& m) {
  ResidualReport r;
  r.source = ResidualSource::Constraints;
  int n = m.n();
  if (n == 2) {
    for (const Permutation& w : all_permutations(2)) {
      auto eqs = pair_equations(act_perm(m, w));
      for (std::size_t e = 0; e < eqs.size(); ++e)
        if (!is_zero(eqs[e])) record(r, Witness{{}, {}, eqs[e], {w.inverse()(1), w.inverse()(2)}, int(e) + 1});
    }
    return r;
  }
  auto perms = all_permutations(3);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        MatchMatrix2 sub = restrict(m, {i, j, k});
        int labels[3] = {i, j, k};
        for (const Permutation& w : perms) {
          auto eqs = triple_equations(act_perm(sub, w));
          Permutation inv = w.inverse();
          for (std::size_t e = 0; e < eqs.size(); ++e) {
            if (is_zero(eqs[e])) continue;
            // position t of the image matrix holds original label labels[inv(t)-1]
            std::vector<int> who{labels[inv(1) - 1], labels[inv(2) - 1], labels[inv(3) - 1]};
            record(r, Witness{{}, {}, eqs[e], who, int(e) + 1});
          }
        }
      }
    }
  }
  return r;
}

ResidualReport is_solution_by_subsets(const MatchMatrix2& m) {
  int n = m.n();
  if (n <= 2) {
    ResidualReport r = ybe_residual_direct(m);
    r.source = ResidualSource::Subsets;
    return r;
  }
  ResidualReport r;
  r.source = ResidualSource::Subsets;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        std::vector<int> subset{i, j, k};
        ResidualReport sub = ybe_residual_direct(restrict(m, subset));
        if (sub.zero) continue;
        r.failing_subsets.push_back(subset);
        // relabel the letters back; counts include every entry
        for (const auto& w : sub.witnesses) {
          Witness x = w;
          for (int& t : x.row) t = subset[t - 1];
          for (int& t : x.col) t = subset[t - 1];
          x.subset = subset;
          record(r, std::move(x));
        }
        r.nonzero_count += sub.nonzero_count - sub.witnesses.size();
      }
    }
  }
  return r;
}

bool is_solution(const MatchMatrix2& m) { return invertible(m) && ybe_residual_direct(m).zero; }

}  // namespace match_ybo

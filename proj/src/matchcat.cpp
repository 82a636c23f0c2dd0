#include "match_ybo/matchcat.hpp"

#include "match_ybo/errors.hpp"

namespace match_ybo {

MatchMatrix2::MatchMatrix2(int n) : n_(n) {
  if (n < 1) throw InvalidInput("matrix needs n >= 1");
  vertices_.assign(n, Scalar(0));
  edges_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, EdgeBlock{});
}

MatchMatrix2 MatchMatrix2::identity(int n) {
  MatchMatrix2 m(n);
  for (int i = 1; i <= n; ++i) m.vertex(i) = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) m.edge(i, j) = EdgeBlock{1, 0, 0, 1};
  return m;
}

std::size_t MatchMatrix2::edge_index(int i, int j) const {
  if (i < 1 || j > n_ || i >= j) throw InvalidInput("edge index needs 1 <= i < j <= n");
  // row-major over the strict upper triangle
  std::size_t ii = i - 1, jj = j - 1, nn = n_;
  return ii * nn - ii * (ii + 1) / 2 + (jj - ii - 1);
}

EdgeBlock MatchMatrix2::oriented(int i, int j) const {
  if (i == j) throw InvalidInput("oriented block needs i != j");
  return i < j ? edge(i, j) : edge(j, i).anti_transposed();
}

void MatchMatrix2::set_oriented(int i, int j, const EdgeBlock& block) {
  if (i == j) throw InvalidInput("oriented block needs i != j");
  if (i < j) {
    edge(i, j) = block;
  } else {
    edge(j, i) = block.anti_transposed();
  }
}

MatchMatrix2 restrict(const MatchMatrix2& m, const std::vector<int>& subset) {
  if (subset.empty()) throw InvalidInput("restriction to an empty subset");
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] < 1 || subset[k] > m.n()) throw InvalidInput("restriction label out of range");
    if (k && subset[k] <= subset[k - 1]) throw InvalidInput("restriction subset must be increasing");
  }
  int k = static_cast<int>(subset.size());
  MatchMatrix2 r(k);
  for (int s = 1; s <= k; ++s) r.vertex(s) = m.vertex(subset[s - 1]);
  for (int s = 1; s <= k; ++s)
    for (int t = s + 1; t <= k; ++t) r.edge(s, t) = m.edge(subset[s - 1], subset[t - 1]);
  return r;
}

MatchMatrix2 act_perm(const MatchMatrix2& m, const Permutation& w) {
  if (w.n() != m.n()) throw InvalidInput("permutation size does not match matrix");
  MatchMatrix2 r(m.n());
  for (int i = 1; i <= m.n(); ++i) r.vertex(w(i)) = m.vertex(i);
  for (int i = 1; i <= m.n(); ++i)
    for (int j = i + 1; j <= m.n(); ++j) r.set_oriented(w(i), w(j), m.edge(i, j));
  return r;
}

MatchMatrix2 act_flip(const MatchMatrix2& m) {
  MatchMatrix2 r = m;
  for (int i = 1; i <= m.n(); ++i)
    for (int j = i + 1; j <= m.n(); ++j) r.edge(i, j) = m.edge(i, j).anti_transposed();
  return r;
}

MatchMatrix2 x_normalize(const MatchMatrix2& m) {
  MatchMatrix2 r = m;
  for (int i = 1; i <= m.n(); ++i) {
    for (int j = i + 1; j <= m.n(); ++j) {
      EdgeBlock& e = r.edge(i, j);
      if (!is_zero(e.c)) {
        e.b = e.b * e.c;
        e.c = 1;
      } else if (!is_zero(e.b)) {
        e.b = 1;
      }
    }
  }
  return r;
}

bool x_equivalent(const MatchMatrix2& m1, const MatchMatrix2& m2) {
  if (m1.n() != m2.n()) return false;
  for (int i = 1; i <= m1.n(); ++i)
    if (m1.vertex(i) != m2.vertex(i)) return false;
  for (int i = 1; i <= m1.n(); ++i) {
    for (int j = i + 1; j <= m1.n(); ++j) {
      const EdgeBlock& x = m1.edge(i, j);
      const EdgeBlock& y = m2.edge(i, j);
      if (x.a != y.a || x.d != y.d) return false;
      if (Scalar(x.b * x.c) != Scalar(y.b * y.c)) return false;
      if (is_zero(x.b) != is_zero(y.b) || is_zero(x.c) != is_zero(y.c)) return false;
    }
  }
  return true;
}

MatchMatrix2 x_conjugate(const MatchMatrix2& m, const std::map<std::pair<int, int>, Scalar>& x) {
  auto get = [&](int i, int j) -> Scalar {
    auto it = x.find({i, j});
    if (it == x.end()) return Scalar(1);
    if (is_zero(it->second)) throw InvalidInput("diagonal gauge entries must be nonzero");
    return it->second;
  };
  MatchMatrix2 r = m;
  for (int i = 1; i <= m.n(); ++i) {
    for (int j = i + 1; j <= m.n(); ++j) {
      EdgeBlock& e = r.edge(i, j);
      Scalar xij = get(i, j), xji = get(j, i);
      e.b = e.b * xij / xji;
      e.c = e.c * xji / xij;
    }
  }
  return r;
}

bool invertible(const MatchMatrix2& m) {
  for (int i = 1; i <= m.n(); ++i)
    if (is_zero(m.vertex(i))) return false;
  for (int i = 1; i <= m.n(); ++i)
    for (int j = i + 1; j <= m.n(); ++j)
      if (is_zero(m.edge(i, j).det())) return false;
  return true;
}

MatchMatrix2 inverse(const MatchMatrix2& m) {
  MatchMatrix2 r(m.n());
  for (int i = 1; i <= m.n(); ++i) {
    if (is_zero(m.vertex(i))) throw SingularMatrix("singular vertex " + std::to_string(i));
    r.vertex(i) = 1 / m.vertex(i);
  }
  for (int i = 1; i <= m.n(); ++i) {
    for (int j = i + 1; j <= m.n(); ++j) {
      const EdgeBlock& e = m.edge(i, j);
      Scalar det = e.det();
      if (is_zero(det))
        throw SingularMatrix("singular block (" + std::to_string(i) + "," + std::to_string(j) + ")");
      r.edge(i, j) = EdgeBlock{e.d / det, -e.b / det, -e.c / det, e.a / det};
    }
  }
  return r;
}

}  // namespace match_ybo

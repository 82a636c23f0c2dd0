#include <algorithm>

#include "match_ybo/errors.hpp"
#include "match_ybo/matchcat.hpp"

namespace match_ybo {

SparseOp::SparseOp(int level, int alphabet) : level_(level), alphabet_(alphabet) {
  if (level < 1 || alphabet < 1) throw InvalidInput("sparse operator needs positive level and alphabet");
}

SparseOp SparseOp::identity(int level, int alphabet) {
  SparseOp s(level, alphabet);
  TensorWord w(level, 1);
  while (true) {
    s.rows_[w][w] = 1;
    int pos = level - 1;
    while (pos >= 0 && w[pos] == alphabet) w[pos--] = 1;
    if (pos < 0) break;
    ++w[pos];
  }
  return s;
}

void SparseOp::check_word(const TensorWord& w) const {
  if (static_cast<int>(w.size()) != level_) throw InvalidInput("word length does not match operator level");
  for (int x : w)
    if (x < 1 || x > alphabet_) throw InvalidInput("word letter out of alphabet");
}

Scalar SparseOp::at(const TensorWord& row, const TensorWord& col) const {
  auto r = rows_.find(row);
  if (r == rows_.end()) return 0;
  auto c = r->second.find(col);
  return c == r->second.end() ? Scalar(0) : c->second;
}

void SparseOp::set(const TensorWord& row, const TensorWord& col, const Scalar& value) {
  check_word(row);
  check_word(col);
  if (match_ybo::is_zero(value)) {
    auto r = rows_.find(row);
    if (r == rows_.end()) return;
    r->second.erase(col);
    if (r->second.empty()) rows_.erase(r);
    return;
  }
  rows_[row][col] = value;
}

void SparseOp::add(const TensorWord& row, const TensorWord& col, const Scalar& value) {
  set(row, col, at(row, col) + value);
}

std::size_t SparseOp::nnz() const {
  std::size_t k = 0;
  for (const auto& [r, cols] : rows_) k += cols.size();
  return k;
}

bool SparseOp::charge_conserving() const {
  for (const auto& [r, cols] : rows_) {
    TensorWord rs = r;
    std::sort(rs.begin(), rs.end());
    for (const auto& [c, v] : cols) {
      TensorWord cs = c;
      std::sort(cs.begin(), cs.end());
      if (cs != rs) return false;
    }
  }
  return true;
}

SparseOp to_sparse(const MatchMatrix2& m) {
  SparseOp s(2, m.n());
  for (int i = 1; i <= m.n(); ++i) s.set({i, i}, {i, i}, m.vertex(i));
  for (int i = 1; i <= m.n(); ++i) {
    for (int j = i + 1; j <= m.n(); ++j) {
      const EdgeBlock& e = m.edge(i, j);
      s.set({i, j}, {i, j}, e.a);
      s.set({i, j}, {j, i}, e.b);
      s.set({j, i}, {i, j}, e.c);
      s.set({j, i}, {j, i}, e.d);
    }
  }
  return s;
}

MatchMatrix2 from_sparse(const SparseOp& s) {
  if (s.level() != 2) throw InvalidInput("from_sparse needs a level-2 operator");
  if (!s.charge_conserving()) throw InvalidInput("operator is not charge-conserving");
  MatchMatrix2 m(s.alphabet());
  for (int i = 1; i <= m.n(); ++i) m.vertex(i) = s.at({i, i}, {i, i});
  for (int i = 1; i <= m.n(); ++i) {
    for (int j = i + 1; j <= m.n(); ++j) {
      m.edge(i, j) = EdgeBlock{s.at({i, j}, {i, j}), s.at({i, j}, {j, i}), s.at({j, i}, {i, j}),
                               s.at({j, i}, {j, i})};
    }
  }
  return m;
}

SparseOp kron(const SparseOp& a, const SparseOp& b) {
  if (a.alphabet() != b.alphabet()) throw InvalidInput("kron needs equal alphabets");
  SparseOp out(a.level() + b.level(), a.alphabet());
  for (const auto& [ra, colsa] : a.rows()) {
    for (const auto& [rb, colsb] : b.rows()) {
      TensorWord row = ra;
      row.insert(row.end(), rb.begin(), rb.end());
      for (const auto& [ca, va] : colsa) {
        for (const auto& [cb, vb] : colsb) {
          TensorWord col = ca;
          col.insert(col.end(), cb.begin(), cb.end());
          out.set(row, col, va * vb);
        }
      }
    }
  }
  return out;
}

SparseOp compose(const SparseOp& s, const SparseOp& t) {
  if (s.level() != t.level() || s.alphabet() != t.alphabet())
    throw InvalidInput("compose needs equal level and alphabet");
  SparseOp out(s.level(), s.alphabet());
  for (const auto& [row, cols] : s.rows()) {
    SparseOp::RowMap acc;
    for (const auto& [mid, sv] : cols) {
      auto it = t.rows().find(mid);
      if (it == t.rows().end()) continue;
      for (const auto& [col, tv] : it->second) acc[col] += sv * tv;
    }
    for (const auto& [col, v] : acc)
      if (!match_ybo::is_zero(v)) out.set(row, col, v);
  }
  return out;
}

SparseOp subtract(const SparseOp& s, const SparseOp& t) {
  if (s.level() != t.level() || s.alphabet() != t.alphabet())
    throw InvalidInput("subtract needs equal level and alphabet");
  SparseOp out = s;
  for (const auto& [row, cols] : t.rows())
    for (const auto& [col, v] : cols) out.add(row, col, -v);
  return out;
}

SparseOp letter_permutation_op(int level, const Permutation& w) {
  SparseOp id = SparseOp::identity(level, w.n());
  SparseOp out(level, w.n());
  for (const auto& [v, cols] : id.rows()) {
    TensorWord image = v;
    for (int& x : image) x = w(x);
    out.set(image, v, 1);
  }
  return out;
}

}  // namespace match_ybo

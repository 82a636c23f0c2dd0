#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "match_ybo/permutation.hpp"
#include "match_ybo/scalar.hpp"

namespace match_ybo {

// 2x2 block on edge (i,j), rows/cols ordered (ij),(ji).
struct EdgeBlock {
  Scalar a, b, c, d;

  Scalar trace() const { return a + d; }
  Scalar det() const { return a * d - b * c; }
  // [[a,b],[c,d]] -> [[d,c],[b,a]]
  EdgeBlock anti_transposed() const { return EdgeBlock{d, c, b, a}; }

  bool operator==(const EdgeBlock&) const = default;
};

// Level-(2,2) charge-conserving operator: n vertex scalars plus one block per
// unordered pair. Vertex labels are 1-based.
class MatchMatrix2 {
 public:
  MatchMatrix2() = default;
  explicit MatchMatrix2(int n);  // all zero

  static MatchMatrix2 identity(int n);

  int n() const { return n_; }

  Scalar& vertex(int i) { return vertices_.at(i - 1); }
  const Scalar& vertex(int i) const { return vertices_.at(i - 1); }

  // i < j
  EdgeBlock& edge(int i, int j) { return edges_.at(edge_index(i, j)); }
  const EdgeBlock& edge(int i, int j) const { return edges_.at(edge_index(i, j)); }

  // Block as seen from ordered pair (i,j), any i != j; for i > j this is the
  // anti-transpose of the stored block.
  EdgeBlock oriented(int i, int j) const;
  void set_oriented(int i, int j, const EdgeBlock& block);

  bool operator==(const MatchMatrix2&) const = default;

 private:
  std::size_t edge_index(int i, int j) const;

  int n_ = 0;
  std::vector<Scalar> vertices_;
  std::vector<EdgeBlock> edges_;
};

using TensorWord = std::vector<int>;

// Sparse operator on words of fixed length over {1..alphabet}.
class SparseOp {
 public:
  using RowMap = std::map<TensorWord, Scalar>;

  SparseOp(int level, int alphabet);
  static SparseOp identity(int level, int alphabet);

  int level() const { return level_; }
  int alphabet() const { return alphabet_; }

  Scalar at(const TensorWord& row, const TensorWord& col) const;
  void set(const TensorWord& row, const TensorWord& col, const Scalar& value);
  void add(const TensorWord& row, const TensorWord& col, const Scalar& value);

  const std::map<TensorWord, RowMap>& rows() const { return rows_; }
  std::size_t nnz() const;
  bool is_zero() const { return rows_.empty(); }
  // Every stored entry has its column word a rearrangement of its row word.
  bool charge_conserving() const;

  bool operator==(const SparseOp&) const = default;

 private:
  void check_word(const TensorWord& w) const;

  int level_;
  int alphabet_;
  std::map<TensorWord, RowMap> rows_;
};

SparseOp to_sparse(const MatchMatrix2& m);
MatchMatrix2 from_sparse(const SparseOp& s);
SparseOp kron(const SparseOp& a, const SparseOp& b);
SparseOp compose(const SparseOp& s, const SparseOp& t);
SparseOp subtract(const SparseOp& s, const SparseOp& t);
// Level-m place operator of a letter permutation: P_{w(v), v} = 1.
SparseOp letter_permutation_op(int level, const Permutation& w);

MatchMatrix2 restrict(const MatchMatrix2& m, const std::vector<int>& subset);
MatchMatrix2 act_perm(const MatchMatrix2& m, const Permutation& w);
MatchMatrix2 act_flip(const MatchMatrix2& m);

MatchMatrix2 x_normalize(const MatchMatrix2& m);
bool x_equivalent(const MatchMatrix2& m1, const MatchMatrix2& m2);
// Conjugation by the diagonal operator with entry x[(i,j)] on word ij
// (ordered pairs, i != j); vertex words get 1 since they do not matter.
MatchMatrix2 x_conjugate(const MatchMatrix2& m, const std::map<std::pair<int, int>, Scalar>& x);

bool invertible(const MatchMatrix2& m);
MatchMatrix2 inverse(const MatchMatrix2& m);

}  // namespace match_ybo

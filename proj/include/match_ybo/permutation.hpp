#pragma once

#include <compare>
#include <string>
#include <vector>

namespace match_ybo {

// Bijection on {1..n}; images[v-1] = image of v.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[v - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  // (this * other)(v) = this(other(v))
  Permutation after(const Permutation& other) const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// All n! permutations in lexicographic order of image lists.
std::vector<Permutation> all_permutations(int n);

}  // namespace match_ybo

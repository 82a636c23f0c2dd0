#include "match_ybo/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "match_ybo/errors.hpp"

namespace match_ybo {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n() || seen[v]) throw InvalidInput("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto p = identity(n);
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int v = 1; v <= n(); ++v) inv[images_[v - 1] - 1] = v;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int v = 1; v <= n(); ++v)
    if (images_[v - 1] != v) return false;
  return true;
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.n() != n()) throw InvalidInput("permutation size mismatch");
  std::vector<int> im(images_.size());
  for (int v = 1; v <= n(); ++v) im[v - 1] = (*this)(other(v));
  return Permutation(std::move(im));
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace match_ybo

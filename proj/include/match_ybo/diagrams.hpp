#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "match_ybo/permutation.hpp"

namespace match_ybo {

// Sequence over {1,2,3}, stored as characters.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters);

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i] - '0'; }

  bool operator==(const Word&) const = default;

 private:
  std::string letters_;
};

// Longer words first, then dictionary order.
std::strong_ordering word_order(const Word& w1, const Word& w2);

enum class Part { First, Second };

struct Row {
  int length = 1;
  bool shaded = false;
  auto operator<=>(const Row&) const = default;
};

// A row-2-coloured composition diagram: one nation type.
class Shape {
 public:
  Shape();  // one unshaded box
  explicit Shape(std::vector<Row> rows);

  const std::vector<Row>& rows() const { return rows_; }
  int box_count() const;

  auto operator<=>(const Shape&) const = default;

 private:
  std::vector<Row> rows_;
};

Shape shape_of_word(const Word& w);
Word word_of_shape(const Shape& s);

// Shapes with multiplicities, kept in word order of the shapes.
class DiagramMultiset {
 public:
  DiagramMultiset() = default;
  explicit DiagramMultiset(std::vector<std::pair<Shape, int>> entries);

  const std::vector<std::pair<Shape, int>>& entries() const { return entries_; }
  int degree() const { return degree_; }

  bool operator==(const DiagramMultiset&) const = default;

 private:
  std::vector<std::pair<Shape, int>> entries_;
  int degree_ = 0;
};

std::vector<DiagramMultiset> enumerate_multisets(int n);
mpz_class euler_count(int n);

struct County {
  std::vector<int> vertices;
  Part part = Part::First;
  auto operator<=>(const County&) const = default;
};

// Counties listed in county order.
struct Nation {
  std::vector<County> counties;
  int size() const;
  int min_vertex() const;
  auto operator<=>(const Nation&) const = default;
};

// Classification datum on {1..n}. Always held in normal form: vertices sorted
// inside counties, nations sorted by least vertex, and the first county of
// each nation tagged First.
class Configuration {
 public:
  Configuration() = default;
  Configuration(int n, std::vector<Nation> nations);

  int n() const { return n_; }
  const std::vector<Nation>& nations() const { return nations_; }

  int nation_of(int v) const { return nation_of_[v - 1]; }
  int county_of(int v) const { return county_of_[v - 1]; }  // index inside its nation
  Part part_of(int v) const;

  std::string to_string() const;

  auto operator<=>(const Configuration& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return nations_ <=> o.nations_;
  }
  bool operator==(const Configuration& o) const { return n_ == o.n_ && nations_ == o.nations_; }

 private:
  int n_ = 0;
  std::vector<Nation> nations_;
  std::vector<int> nation_of_;
  std::vector<int> county_of_;
};

Shape nation_shape(const Nation& nation);

Configuration book_order(const DiagramMultiset& f);
std::vector<Configuration> enumerate_transversal(int n);
// Every valid configuration on {1..n}; sizes grow fast, meant for n <= 5.
std::vector<Configuration> enumerate_configurations(int n);

Configuration configuration_perm(const Configuration& c, const Permutation& w);
Configuration flip_configuration(const Configuration& c);

struct Canonical {
  Configuration config;
  Permutation witness;
};
Canonical canonicalize(const Configuration& c);

}  // namespace match_ybo

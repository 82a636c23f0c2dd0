#include "match_ybo/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "match_ybo/errors.hpp"

namespace match_ybo {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char ch : letters_)
    if (ch < '1' || ch > '3') throw InvalidInput("word letters must be 1, 2 or 3: \"" + letters_ + "\"");
}

std::strong_ordering word_order(const Word& w1, const Word& w2) {
  if (w1.size() != w2.size()) return w2.size() <=> w1.size();
  return w1.str() <=> w2.str();
}

Shape::Shape() : rows_{Row{1, false}} {}

Shape::Shape(std::vector<Row> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw InvalidInput("shape needs at least one row");
  if (rows_.front().shaded) throw InvalidInput("first row of a shape must be unshaded");
  for (const Row& r : rows_)
    if (r.length < 1) throw InvalidInput("shape rows must have positive length");
}

int Shape::box_count() const {
  int total = 0;
  for (const Row& r : rows_) total += r.length;
  return total;
}

Shape shape_of_word(const Word& w) {
  std::vector<Row> rows{Row{1, false}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    switch (w[i]) {
      case 1: rows.back().length += 1; break;
      case 2: rows.push_back(Row{1, false}); break;
      default: rows.push_back(Row{1, true}); break;
    }
  }
  return Shape(std::move(rows));
}

Word word_of_shape(const Shape& s) {
  std::string letters;
  bool first = true;
  for (const Row& r : s.rows()) {
    if (!first) letters += r.shaded ? '3' : '2';
    first = false;
    letters.append(static_cast<std::size_t>(r.length - 1), '1');
  }
  return Word(std::move(letters));
}

DiagramMultiset::DiagramMultiset(std::vector<std::pair<Shape, int>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
    return word_order(word_of_shape(x.first), word_of_shape(y.first)) < 0;
  });
  for (auto& [shape, mult] : entries) {
    if (mult < 1) throw InvalidInput("multiset multiplicities must be positive");
    if (!entries_.empty() && entries_.back().first == shape) {
      entries_.back().second += mult;
    } else {
      entries_.emplace_back(shape, mult);
    }
    degree_ += mult * shape.box_count();
  }
}

namespace {

std::vector<Word> words_of_length(int len) {
  std::vector<Word> out{Word()};
  for (int i = 0; i < len; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * 3);
    for (const Word& w : out)
      for (char ch : {'1', '2', '3'}) next.emplace_back(w.str() + ch);
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<DiagramMultiset> enumerate_multisets(int n) {
  if (n < 1) throw InvalidInput("degree must be positive");
  // All shapes with at most n boxes, in word order.
  std::vector<Shape> shapes;
  for (int len = n - 1; len >= 0; --len)
    for (const Word& w : words_of_length(len)) shapes.push_back(shape_of_word(w));

  // Nondecreasing index sequences; recursion order is lexicographic on the
  // word-ordered expansion, which is the order we promise.
  std::vector<DiagramMultiset> out;
  std::vector<int> picked;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int remaining) {
    if (remaining == 0) {
      std::vector<std::pair<Shape, int>> entries;
      for (int idx : picked) {
        if (!entries.empty() && entries.back().first == shapes[idx]) {
          ++entries.back().second;
        } else {
          entries.emplace_back(shapes[idx], 1);
        }
      }
      out.emplace_back(std::move(entries));
      return;
    }
    for (std::size_t i = from; i < shapes.size(); ++i) {
      int boxes = shapes[i].box_count();
      if (boxes > remaining) continue;
      picked.push_back(static_cast<int>(i));
      rec(i, remaining - boxes);
      picked.pop_back();
    }
  };
  rec(0, n);
  return out;
}

mpz_class euler_count(int n) {
  if (n < 1) throw InvalidInput("degree must be positive");
  // b_m = (1/m) sum_{k=1..m} c_k b_{m-k},  c_k = sum_{d|k} d * 3^(d-1)
  std::vector<mpz_class> c(n + 1), b(n + 1);
  for (int k = 1; k <= n; ++k) {
    for (int d = 1; d <= k; ++d) {
      if (k % d) continue;
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(d - 1));
      c[k] += d * p;
    }
  }
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    mpz_class s = 0;
    for (int k = 1; k <= m; ++k) s += c[k] * b[m - k];
    b[m] = s / m;
  }
  return b[n];
}

int Nation::size() const {
  int s = 0;
  for (const County& q : counties) s += static_cast<int>(q.vertices.size());
  return s;
}

int Nation::min_vertex() const {
  int m = std::numeric_limits<int>::max();
  for (const County& q : counties)
    for (int v : q.vertices) m = std::min(m, v);
  return m;
}

Configuration::Configuration(int n, std::vector<Nation> nations) : n_(n), nations_(std::move(nations)) {
  if (n_ < 1) throw InvalidInput("configuration needs n >= 1");
  nation_of_.assign(n_, -1);
  county_of_.assign(n_, -1);
  if (nations_.empty()) throw InvalidInput("configuration has no nations");
  for (Nation& nat : nations_) {
    if (nat.counties.empty()) throw InvalidInput("empty nation");
    for (County& q : nat.counties) {
      if (q.vertices.empty()) throw InvalidInput("empty county");
      std::sort(q.vertices.begin(), q.vertices.end());
    }
    if (nat.counties.front().part == Part::Second)
      for (County& q : nat.counties) q.part = q.part == Part::First ? Part::Second : Part::First;
  }
  std::sort(nations_.begin(), nations_.end(),
            [](const Nation& x, const Nation& y) { return x.min_vertex() < y.min_vertex(); });
  for (std::size_t i = 0; i < nations_.size(); ++i) {
    const auto& counties = nations_[i].counties;
    for (std::size_t k = 0; k < counties.size(); ++k) {
      for (int v : counties[k].vertices) {
        if (v < 1 || v > n_) throw InvalidInput("vertex label out of range: " + std::to_string(v));
        if (nation_of_[v - 1] != -1) throw InvalidInput("vertex appears twice: " + std::to_string(v));
        nation_of_[v - 1] = static_cast<int>(i);
        county_of_[v - 1] = static_cast<int>(k);
      }
    }
  }
  for (int v = 1; v <= n_; ++v)
    if (nation_of_[v - 1] == -1) throw InvalidInput("vertex missing: " + std::to_string(v));
}

Part Configuration::part_of(int v) const {
  return nations_[nation_of(v)].counties[county_of(v)].part;
}

std::string Configuration::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < nations_.size(); ++i) {
    if (i) s += " | ";
    const auto& counties = nations_[i].counties;
    for (std::size_t k = 0; k < counties.size(); ++k) {
      if (k) s += " < ";
      s += "{";
      for (std::size_t t = 0; t < counties[k].vertices.size(); ++t) {
        if (t) s += ",";
        s += std::to_string(counties[k].vertices[t]);
      }
      s += counties[k].part == Part::First ? "}a" : "}b";
    }
  }
  return s;
}

Shape nation_shape(const Nation& nation) {
  std::vector<Row> rows;
  Part first = nation.counties.front().part;
  for (const County& q : nation.counties)
    rows.push_back(Row{static_cast<int>(q.vertices.size()), q.part != first});
  return Shape(std::move(rows));
}

Configuration book_order(const DiagramMultiset& f) {
  std::vector<Nation> nations;
  int next = 1;
  for (const auto& [shape, mult] : f.entries()) {
    for (int rep = 0; rep < mult; ++rep) {
      Nation nat;
      for (const Row& r : shape.rows()) {
        County q;
        q.part = r.shaded ? Part::Second : Part::First;
        for (int t = 0; t < r.length; ++t) q.vertices.push_back(next++);
        nat.counties.push_back(std::move(q));
      }
      nations.push_back(std::move(nat));
    }
  }
  return Configuration(f.degree(), std::move(nations));
}

std::vector<Configuration> enumerate_transversal(int n) {
  std::vector<Configuration> out;
  for (const DiagramMultiset& f : enumerate_multisets(n)) out.push_back(book_order(f));
  return out;
}

namespace {

// Set partitions of `items`, blocks in order of least element.
void set_partitions(const std::vector<int>& items, std::size_t idx, std::vector<std::vector<int>>& blocks,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (idx == items.size()) {
    emit(blocks);
    return;
  }
  // index loop: the recursion may grow (and reallocate) blocks
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(items[idx]);
    set_partitions(items, idx + 1, blocks, emit);
    blocks[b].pop_back();
  }
  blocks.push_back({items[idx]});
  set_partitions(items, idx + 1, blocks, emit);
  blocks.pop_back();
}

// Ordered set partitions with a 2-colouring whose first block is First.
std::vector<Nation> nation_choices(const std::vector<int>& vertices) {
  std::vector<Nation> out;
  std::vector<std::vector<int>> blocks;
  set_partitions(vertices, 0, blocks, [&](const std::vector<std::vector<int>>& bl) {
    std::vector<int> order(bl.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      std::size_t k = bl.size();
      for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
        Nation nat;
        for (std::size_t t = 0; t < k; ++t) {
          County q;
          q.vertices = bl[order[t]];
          q.part = (t > 0 && (mask >> (t - 1)) & 1u) ? Part::Second : Part::First;
          nat.counties.push_back(std::move(q));
        }
        out.push_back(std::move(nat));
      }
    } while (std::next_permutation(order.begin(), order.end()));
  });
  return out;
}

}  // namespace

std::vector<Configuration> enumerate_configurations(int n) {
  if (n < 1) throw InvalidInput("degree must be positive");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  std::vector<Configuration> out;
  std::vector<std::vector<int>> blocks;
  set_partitions(all, 0, blocks, [&](const std::vector<std::vector<int>>& nations) {
    std::vector<std::vector<Nation>> choices;
    for (const auto& nat : nations) choices.push_back(nation_choices(nat));
    std::vector<Nation> current;
    std::function<void(std::size_t)> pick = [&](std::size_t i) {
      if (i == choices.size()) {
        out.emplace_back(n, current);
        return;
      }
      for (const Nation& nat : choices[i]) {
        current.push_back(nat);
        pick(i + 1);
        current.pop_back();
      }
    };
    pick(0);
  });
  return out;
}

Configuration configuration_perm(const Configuration& c, const Permutation& w) {
  if (w.n() != c.n()) throw InvalidInput("permutation size does not match configuration");
  std::vector<Nation> nations = c.nations();
  for (Nation& nat : nations)
    for (County& q : nat.counties)
      for (int& v : q.vertices) v = w(v);
  return Configuration(c.n(), std::move(nations));
}

Configuration flip_configuration(const Configuration& c) {
  std::vector<Nation> nations = c.nations();
  for (Nation& nat : nations) std::reverse(nat.counties.begin(), nat.counties.end());
  return Configuration(c.n(), std::move(nations));
}

Canonical canonicalize(const Configuration& c) {
  std::vector<std::size_t> order(c.nations().size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Word> words;
  for (const Nation& nat : c.nations()) words.push_back(word_of_shape(nation_shape(nat)));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return word_order(words[x], words[y]) < 0; });
  std::vector<int> images(c.n());
  int next = 1;
  for (std::size_t i : order)
    for (const County& q : c.nations()[i].counties)
      for (int v : q.vertices) images[v - 1] = next++;
  Permutation w(std::move(images));
  return Canonical{configuration_perm(c, w), w};
}

}  // namespace match_ybo

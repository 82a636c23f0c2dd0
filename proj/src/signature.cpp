#include "match_ybo/signature.hpp"

#include <algorithm>
#include <map>

#include "match_ybo/errors.hpp"

namespace match_ybo {

int Signature::total() const {
  int t = 0;
  for (int p : parts) t += p;
  return t;
}

namespace {

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s;
}

int choose2(int k) { return k * (k - 1) / 2; }

}  // namespace

std::string Signature::to_string() const { return "(" + join(parts) + ")"; }

Spectrum spectrum(const MatchMatrix2& m) {
  Spectrum out;
  for (int i = 1; i <= m.n(); ++i) out.push_back(m.vertex(i));
  for (int i = 1; i <= m.n(); ++i)
    for (int j = i + 1; j <= m.n(); ++j) {
      const EdgeBlock& e = m.edge(i, j);
      Scalar tr = e.trace(), det = e.det();
      Scalar disc = tr * tr - 4 * det;
      auto r = rational_sqrt(disc);
      if (!r) throw IrrationalSpectrum(to_string(tr), to_string(det));
      out.push_back((tr + *r) / 2);
      out.push_back((tr - *r) / 2);
    }
  return out;
}

Signature degeneracy_partition(const Spectrum& eig) {
  std::map<Scalar, int> counts;
  for (const Scalar& x : eig) ++counts[x];
  Signature s;
  for (const auto& [x, k] : counts) s.parts.push_back(k);
  std::sort(s.parts.rbegin(), s.parts.rend());
  return s;
}

Signature SignatureFactors::flatten() const {
  Signature s;
  for (const auto& nu : nations) s.parts.insert(s.parts.end(), nu.begin(), nu.end());
  s.parts.insert(s.parts.end(), slash.begin(), slash.end());
  std::sort(s.parts.rbegin(), s.parts.rend());
  return s;
}

std::string SignatureFactors::notation() const {
  std::string s = "(";
  for (std::size_t i = 0; i < nations.size(); ++i) {
    if (i) s += ";";
    s += join(nations[i]);
  }
  if (!slash.empty()) s += ":" + join(slash);
  return s + ")";
}

SignatureFactors signature_factors(const Configuration& c) {
  SignatureFactors f;
  const auto& ns = c.nations();
  for (const Nation& nat : ns) {
    int size = nat.size();
    int zeros = 0, zeros1 = 0, zeros2 = 0, s1 = 0, s2 = 0;
    for (const County& q : nat.counties) {
      int k = static_cast<int>(q.vertices.size());
      zeros += choose2(k);
      if (q.part == Part::First) {
        zeros1 += choose2(k);
        s1 += k;
      } else {
        zeros2 += choose2(k);
        s2 += k;
      }
    }
    // cross-county edges give one alpha and one beta each; 0-edges give two
    // copies of their county's scalar; vertices give one
    int cross = choose2(size) - zeros;
    std::vector<int> nu;
    for (int part : {cross + 2 * zeros1 + s1, cross + 2 * zeros2 + s2})
      if (part > 0) nu.push_back(part);
    std::sort(nu.rbegin(), nu.rend());
    f.nations.push_back(std::move(nu));
  }
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = i + 1; j < ns.size(); ++j) {
      int k = ns[i].size() * ns[j].size();
      f.slash.push_back(k);
      f.slash.push_back(k);
    }
  std::sort(f.slash.rbegin(), f.slash.rend());
  return f;
}

Signature signature_formula(const Configuration& c) { return signature_factors(c).flatten(); }

SignatureCheck signature_check(const Germ& g) {
  SignatureCheck out;
  out.formula = signature_formula(g.config);
  out.sampled = degeneracy_partition(spectrum(rec(g)));
  out.agree = out.formula == out.sampled;
  return out;
}

}  // namespace match_ybo

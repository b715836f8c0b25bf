#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzv/multipoly.hpp"

namespace mzv {

// The word e0^{a_0} e1 e0^{a_1} e1 ... e1 e0^{a_r}, stored by its exponent
// gaps. Depth r is the number of e1 letters, weight is r plus the e0 count.
struct DepthWord {
  std::vector<int> exponents;  // a_0 .. a_r

  long depth() const { return static_cast<long>(exponents.size()) - 1; }
  long weight() const {
    return depth() + std::accumulate(exponents.begin(), exponents.end(), 0L);
  }
};

// Polynomial representation: e0^{a_0} e1 ... e1 e0^{a_r} -> y_0^{a_0}...y_r^{a_r}.
// A bijection between depth-r weight-N words and degree N-r monomials.
inline MultiPoly polyrep(const DepthWord& w) {
  if (w.exponents.empty()) throw std::invalid_argument("polyrep: empty word");
  for (int a : w.exponents)
    if (a < 0) throw std::invalid_argument("polyrep: negative exponent");
  return MultiPoly::monomial(w.exponents);
}

inline DepthWord word_of_monomial(const MultiPoly::Exponents& e) { return DepthWord{e}; }

// The depth-1 generator polynomial (y_1 - y_0)^{n-1} for odd n >= 3.
inline MultiPoly sigma(long n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("sigma: generator index must be odd and >= 3");
  MultiPoly p(2, n - 1);
  for (long k = 0; k <= n - 1; ++k) {
    Rational c = Rational(binomial(n - 1, k));
    if ((n - 1 - k) % 2 == 1) c = -c;
    p.add_term({static_cast<int>(n - 1 - k), static_cast<int>(k)}, c);
  }
  return p;
}

// A composition (n_1,...,n_r) of odd parts >= 3; the index of S_{N,r}.
class Composition {
 public:
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("Composition: parts must be odd and >= 3");
  }

  const std::vector<int>& parts() const { return parts_; }
  long depth() const { return static_cast<long>(parts_.size()); }
  long weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

  // Label "n1.n2.....nr" used by CSV headers.
  std::string label() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i)
      s += (i ? "." : "") + std::to_string(parts_[i]);
    return s;
  }

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const Composition& a, const Composition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// S_{N,r} in ascending lexicographic order. Empty when N and r have distinct
// parity or N < 3r.
inline std::vector<Composition> enumerate_compositions(long N, long r) {
  std::vector<Composition> out;
  if (r < 1 || N < 3 * r || (N - r) % 2 != 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, long i, long rem) -> void {
    if (i + 1 == r) {
      if (rem >= 3 && rem % 2 == 1) {
        cur[static_cast<std::size_t>(i)] = static_cast<int>(rem);
        out.emplace_back(cur);
      }
      return;
    }
    for (long v = 3; rem - v >= 3 * (r - i - 1); v += 2) {
      cur[static_cast<std::size_t>(i)] = static_cast<int>(v);
      self(self, i + 1, rem - v);
    }
  };
  rec(rec, 0, N);
  return out;
}

// For f homogeneous of degree N-r in y_0..y_r: the coefficients of
// y_1^{n_1-1}...y_r^{n_r-1} (y_0 absent), one entry per composition of
// S_{N,r} in lexicographic order. This reads off the totally odd part.
inline std::vector<Rational> odd_coeff_vector(const MultiPoly& f, long N, long r) {
  if (f.num_vars() != static_cast<std::size_t>(r + 1) || f.degree() != N - r)
    throw std::invalid_argument("odd_coeff_vector: degree or arity mismatch");
  const auto comps = enumerate_compositions(N, r);
  std::vector<Rational> v(comps.size());
  MultiPoly::Exponents e(static_cast<std::size_t>(r + 1));
  for (std::size_t i = 0; i < comps.size(); ++i) {
    e[0] = 0;
    for (long j = 0; j < r; ++j)
      e[static_cast<std::size_t>(j + 1)] = comps[i].parts()[static_cast<std::size_t>(j)] - 1;
    v[i] = f.coeff(e);
  }
  return v;
}

// Quasi-uneven: writing f = g1 * y_0 + g2(y_1,...,y_r), every monomial
// y_1^{2m_1}...y_r^{2m_r} of g2 with all m_i >= 1 has coefficient zero.
inline bool is_quasi_uneven(const MultiPoly& f) {
  for (const auto& [e, c] : f.terms()) {
    if (e.empty() || e[0] != 0) continue;
    bool totally_even = true;
    for (std::size_t i = 1; i < e.size(); ++i)
      if (e[i] < 2 || e[i] % 2 != 0) {
        totally_even = false;
        break;
      }
    if (totally_even && !c.is_zero()) return false;
  }
  return true;
}

}  // namespace mzv

#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mzv/matrix.hpp"
#include "mzv/multipoly.hpp"

namespace mzv {

// A restricted even period polynomial of weight N, stored by its
// coefficients p_{s,t} of x_1^{s-1} x_2^{t-1}, s + t = N. For genuine
// elements produced by period_space, the coefficients sit at s, t odd >= 3
// and the defining relation holds exactly.
class PeriodPolynomial {
 public:
  explicit PeriodPolynomial(long weight) : weight_(weight) {}

  static PeriodPolynomial from_coefficients(long weight,
                                            std::map<std::pair<long, long>, Rational> coeffs) {
    PeriodPolynomial p(weight);
    for (auto& [st, c] : coeffs) {
      if (st.first + st.second != weight)
        throw std::invalid_argument("PeriodPolynomial: index pair off weight");
      if (!c.is_zero()) p.coeffs_.emplace(st, c);
    }
    return p;
  }

  long weight() const { return weight_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::pair<long, long>, Rational>& coefficients() const { return coeffs_; }

  Rational coeff(long s, long t) const {
    auto it = coeffs_.find({s, t});
    return it == coeffs_.end() ? Rational() : it->second;
  }

  // The polynomial itself, degree N-2 in (x_1, x_2).
  MultiPoly to_polynomial() const {
    MultiPoly f(2, weight_ - 2);
    for (const auto& [st, c] : coeffs_)
      f.add_term({static_cast<int>(st.first - 1), static_cast<int>(st.second - 1)}, c);
    return f;
  }

 private:
  long weight_;
  std::map<std::pair<long, long>, Rational> coeffs_;
};

struct PeriodBasis {
  long weight = 0;
  std::vector<PeriodPolynomial> elements;

  std::size_t dim() const { return elements.size(); }
};

namespace detail {

// p(x1, x2) + p(x1 - x2, x1) - p(x1 - x2, x2) as a polynomial, expanded over
// the full degree-(N-2) monomial basis.
inline MultiPoly period_relation_poly(const MultiPoly& p) {
  const MultiPoly x1 = MultiPoly::monomial({1, 0});
  const MultiPoly x2 = MultiPoly::monomial({0, 1});
  const MultiPoly diff = x1 - x2;
  std::vector<MultiPoly> first{diff, x1};
  std::vector<MultiPoly> second{diff, x2};
  return p + p.substitute(first) - p.substitute(second);
}

}  // namespace detail

// Exact basis of the weight-N restricted even period polynomials: unknown
// coefficients at s, t odd, t >= 3 (evenness plus p(x1, 0) = 0), constrained
// by the relation expanded over every degree-(N-2) monomial. The basis is
// canonicalized by RREF over coefficient vectors ordered by ascending s.
inline PeriodBasis period_space(long N) {
  PeriodBasis basis;
  basis.weight = N;
  if (N < 3 || N % 2 != 0) return basis;  // odd weight: even polynomial of odd degree is 0

  std::vector<std::pair<long, long>> index;  // (s, t), ascending s
  for (long s = 1; s <= N - 3; s += 2) index.emplace_back(s, N - s);

  const auto monomials = homogeneous_exponents(2, N - 2);
  QMatrix system(monomials.size(), index.size());
  for (std::size_t j = 0; j < index.size(); ++j) {
    MultiPoly m(2, N - 2);
    m.add_term({static_cast<int>(index[j].first - 1), static_cast<int>(index[j].second - 1)}, 1);
    const MultiPoly rel = detail::period_relation_poly(m);
    for (std::size_t i = 0; i < monomials.size(); ++i) system.at(i, j) = rel.coeff(monomials[i]);
  }

  const Subspace sols = nullspace(system);
  for (std::size_t i = 0; i < sols.dim(); ++i) {
    std::map<std::pair<long, long>, Rational> coeffs;
    for (std::size_t j = 0; j < index.size(); ++j) {
      const Rational& c = sols.basis().at(i, j);
      if (!c.is_zero()) coeffs.emplace(index[j], c);
    }
    basis.elements.push_back(PeriodPolynomial::from_coefficients(N, std::move(coeffs)));
  }
  return basis;
}

// Every nonzero coefficient must sit at a pair of odd indices >= 3.
inline bool coefficient_vanishing_check(const PeriodPolynomial& p) {
  for (const auto& [st, c] : p.coefficients()) {
    if (c.is_zero()) continue;
    if (st.first % 2 == 0 || st.second % 2 == 0) return false;
    if (st.first < 3 || st.second < 3) return false;
  }
  return true;
}

inline bool satisfies_period_relation(const PeriodPolynomial& p) {
  return detail::period_relation_poly(p.to_polynomial()).is_zero();
}

// The dual pairing: the functional attached to a pair of odd single zeta
// weights reads off the matching coefficient.
inline Rational pair_v(long n1, long n2, const PeriodPolynomial& p) {
  if (n1 + n2 != p.weight()) throw std::invalid_argument("pair_v: weight mismatch");
  return p.coeff(n1, n2);
}

// Ordered pairs (a, b) of odd generators >= 3 with a + b = N, ascending a.
inline std::vector<std::pair<long, long>> generator_pairs(long N) {
  std::vector<std::pair<long, long>> out;
  for (long a = 3; N - a >= 3; a += 2)
    if ((N - a) % 2 == 1) out.emplace_back(a, N - a);
  return out;
}

// Coefficient vector of p over the ordered generator pairs of its weight.
inline std::vector<Rational> embed_period(const PeriodPolynomial& p) {
  const auto pairs = generator_pairs(p.weight());
  std::vector<Rational> v(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) v[i] = p.coeff(pairs[i].first, pairs[i].second);
  return v;
}

}  // namespace mzv

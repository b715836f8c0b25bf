#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mzv/matrix.hpp"
#include "mzv/multipoly.hpp"
#include "mzv/period.hpp"
#include "mzv/words.hpp"

namespace mzv {

// b^m_{n,n'} = (-1)^n C(m-1, n-1) + (-1)^{n'-m} C(m-1, n'-1).
inline Rational b_coeff(long m, long n, long np) {
  if (m < 1 || n < 1 || np < 1) throw std::invalid_argument("b_coeff: indices must be >= 1");
  mpz_class first = binomial(m - 1, n - 1);
  if (n % 2 != 0) first = -first;
  mpz_class second = binomial(m - 1, np - 1);
  if (((np - m) % 2 + 2) % 2 != 0) second = -second;
  mpz_class total = first + second;
  return Rational(total);
}

// e(m; n) = delta(m; n)
//         + sum_{i=1}^{r-1} delta(m_2..m_i, m_{i+2}..m_r; n_1..n_{i-1}, n_{i+2}..n_r) b^{m_1}_{n_i, n_{i+1}}
// with delta of empty tuples equal to 1. For r = 2 this is delta + b^{m_1}_{n_1,n_2}.
inline Rational e_entry(const Composition& m, const Composition& n) {
  if (m.depth() != n.depth() || m.weight() != n.weight())
    throw std::invalid_argument("e_entry: compositions must share depth and weight");
  const auto& mp = m.parts();
  const auto& np = n.parts();
  const long r = m.depth();
  Rational out = (mp == np) ? Rational(1) : Rational(0);
  for (long i = 1; i <= r - 1; ++i) {
    bool delta = true;
    // top tuple (m_2..m_i, m_{i+2}..m_r) against bottom (n_1..n_{i-1}, n_{i+2}..n_r)
    for (long a = 2, b = 1; a <= i; ++a, ++b)
      if (mp[static_cast<std::size_t>(a - 1)] != np[static_cast<std::size_t>(b - 1)]) {
        delta = false;
        break;
      }
    if (delta) {
      for (long a = i + 2; a <= r; ++a)
        if (mp[static_cast<std::size_t>(a - 1)] != np[static_cast<std::size_t>(a - 1)]) {
          delta = false;
          break;
        }
    }
    if (!delta) continue;
    out += b_coeff(mp[0], np[static_cast<std::size_t>(i - 1)], np[static_cast<std::size_t>(i)]);
  }
  return out;
}

enum class MatrixKind { E, E_shifted, C, identity };

// A square matrix indexed by S_{N,r} in the shared lexicographic ordering.
struct TasakaMatrix {
  long weight = 0;
  long depth = 0;
  std::vector<Composition> ordering;
  QMatrix matrix;
  MatrixKind kind = MatrixKind::E;
  long frozen = 0;  // leading delta-frozen coordinates for E_shifted

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(ordering.size());
    for (const auto& c : ordering) out.push_back(c.label());
    return out;
  }
};

inline TasakaMatrix build_E(long N, long r) {
  TasakaMatrix t;
  t.weight = N;
  t.depth = r;
  t.kind = MatrixKind::E;
  t.ordering = enumerate_compositions(N, r);
  const std::size_t d = t.ordering.size();
  t.matrix = QMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) t.matrix.at(i, j) = e_entry(t.ordering[i], t.ordering[j]);
  return t;
}

// E^{(r-i)}: the first i coordinates are frozen by delta, e acts on the tail.
inline TasakaMatrix build_E_shifted(long N, long r, long i) {
  if (i < 1 || i > r - 2) throw std::invalid_argument("build_E_shifted: need 1 <= i <= r-2");
  TasakaMatrix t;
  t.weight = N;
  t.depth = r;
  t.kind = MatrixKind::E_shifted;
  t.frozen = i;
  t.ordering = enumerate_compositions(N, r);
  const std::size_t d = t.ordering.size();
  t.matrix = QMatrix(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    const auto& mp = t.ordering[a].parts();
    for (std::size_t b = 0; b < d; ++b) {
      const auto& np = t.ordering[b].parts();
      bool delta = true;
      for (long k = 0; k < i; ++k)
        if (mp[static_cast<std::size_t>(k)] != np[static_cast<std::size_t>(k)]) {
          delta = false;
          break;
        }
      if (!delta) continue;
      Composition msuf(std::vector<int>(mp.begin() + i, mp.end()));
      Composition nsuf(std::vector<int>(np.begin() + i, np.end()));
      t.matrix.at(a, b) = e_entry(msuf, nsuf);
    }
  }
  return t;
}

// C = E^{(2)} E^{(3)} ... E^{(r-1)} E; for r <= 2 the shifted factors are
// absent and C = E.
inline TasakaMatrix build_C(long N, long r) {
  TasakaMatrix e = build_E(N, r);
  TasakaMatrix t;
  t.weight = N;
  t.depth = r;
  t.kind = MatrixKind::C;
  t.ordering = e.ordering;
  QMatrix acc = QMatrix::identity(e.ordering.size());
  for (long super = 2; super <= r - 1; ++super)
    acc = acc * build_E_shifted(N, r, r - super).matrix;
  t.matrix = acc * e.matrix;
  return t;
}

// Read-mostly cache; builders are pure so duplicated initialization is
// harmless, the mutex only guards the map itself.
inline const TasakaMatrix& cached_matrix(long N, long r, MatrixKind kind, long i = 0) {
  static std::map<std::tuple<long, long, MatrixKind, long>, TasakaMatrix> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(N, r, kind, i);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  TasakaMatrix built;
  switch (kind) {
    case MatrixKind::E: built = build_E(N, r); break;
    case MatrixKind::E_shifted: built = build_E_shifted(N, r, i); break;
    case MatrixKind::C: built = build_C(N, r); break;
    case MatrixKind::identity:
      built = build_E(N, r);
      built.kind = MatrixKind::identity;
      built.matrix = QMatrix::identity(built.ordering.size());
      break;
  }
  return cache.emplace(key, std::move(built)).first->second;
}

// Solutions of p(x_1,...,x_r) = p(x_2-x_1, x_2, x_3,...,x_r) - p(x_2-x_1, x_1, x_3,...,x_r)
// inside the span of the totally odd monomials, as vectors over S_{N,r}.
// The functional equation is imposed over the full degree-(N-r) monomial
// basis; only the unknowns are restricted to totally odd indices.
struct WSpace {
  long weight = 0;
  long depth = 0;
  Subspace subspace{0};
};

inline WSpace w_space(long N, long r) {
  if (r < 1) throw std::invalid_argument("w_space: depth must be >= 1");
  const auto comps = enumerate_compositions(N, r);
  WSpace w;
  w.weight = N;
  w.depth = r;
  if (comps.empty()) {
    w.subspace = Subspace(0);
    return w;
  }
  if (r == 1) {
    // the defining equation rewrites the first two slots; with one slot the
    // space is zero
    w.subspace = Subspace(comps.size());
    return w;
  }

  const std::size_t vars = static_cast<std::size_t>(r);
  std::vector<MultiPoly> sub1, sub2;  // x_2-x_1, x_2, x_3.. and x_2-x_1, x_1, x_3..
  auto unit = [&](std::size_t i) {
    MultiPoly::Exponents e(vars, 0);
    e[i] = 1;
    return MultiPoly::monomial(e);
  };
  sub1.push_back(unit(1) - unit(0));
  sub2.push_back(unit(1) - unit(0));
  sub1.push_back(unit(1));
  sub2.push_back(unit(0));
  for (std::size_t i = 2; i < vars; ++i) {
    sub1.push_back(unit(i));
    sub2.push_back(unit(i));
  }

  const auto monomials = homogeneous_exponents(vars, N - r);
  QMatrix system(monomials.size(), comps.size());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    MultiPoly::Exponents e(vars);
    for (std::size_t k = 0; k < vars; ++k) e[k] = comps[j].parts()[k] - 1;
    const MultiPoly p = MultiPoly::monomial(e);
    MultiPoly constraint = p - p.substitute(sub1) + p.substitute(sub2);
    for (std::size_t i = 0; i < monomials.size(); ++i)
      system.at(i, j) = constraint.coeff(monomials[i]);
  }
  w.subspace = nullspace(system);
  return w;
}

// Rows: each W-space basis vector mapped by E - I under the row action.
// Injectivity of the map is full row rank.
inline QMatrix eta_map(long N, long r) {
  if (r < 2) throw std::invalid_argument("eta_map: depth must be >= 2");
  const WSpace w = w_space(N, r);
  const TasakaMatrix& e = cached_matrix(N, r, MatrixKind::E);
  QMatrix diff = e.matrix - QMatrix::identity(e.ordering.size());
  QMatrix out(w.subspace.dim(), e.ordering.size());
  for (std::size_t i = 0; i < w.subspace.dim(); ++i)
    out.set_row(i, row_action(w.subspace.basis().row(i), diff));
  return out;
}

// Rows: each W-space basis vector mapped by E^{(r-1)} under the row action.
inline QMatrix xi_map(long N, long r) {
  if (r < 3) throw std::invalid_argument("xi_map: depth must be >= 3");
  const WSpace w = w_space(N, r);
  const TasakaMatrix& e = cached_matrix(N, r, MatrixKind::E_shifted, 1);
  QMatrix out(w.subspace.dim(), e.ordering.size());
  for (std::size_t i = 0; i < w.subspace.dim(); ++i)
    out.set_row(i, row_action(w.subspace.basis().row(i), e.matrix));
  return out;
}

// Coordinate matrix of the depth-graded coaction, from Vect_{N,r} to the
// direct sum over odd m_1 of Vect_{N-m_1, r-1}. Row index: source
// composition n; column index: (m_1, m') blocks sorted by ascending m_1,
// compositions lexicographic within a block. Entry: e(m_1, m'; n).
inline QMatrix dtilde_matrix(long N, long r) {
  if (r < 2) throw std::invalid_argument("dtilde_matrix: depth must be >= 2");
  const auto source = enumerate_compositions(N, r);
  std::vector<Composition> target;  // (m_1, m') flattened in block order
  for (long m1 = 3; m1 <= N - 3 * (r - 1); m1 += 2)
    for (const auto& rest : enumerate_compositions(N - m1, r - 1)) {
      std::vector<int> full{static_cast<int>(m1)};
      full.insert(full.end(), rest.parts().begin(), rest.parts().end());
      target.emplace_back(std::move(full));
    }
  QMatrix out(source.size(), target.size());
  for (std::size_t i = 0; i < source.size(); ++i)
    for (std::size_t j = 0; j < target.size(); ++j)
      out.at(i, j) = e_entry(target[j], source[i]);
  return out;
}

// Coordinate matrix of D = (v ⊗ id) ∘ (id ⊗ coaction), from the pairs
// (n_1, n') to the direct sum over period weights w of P_w-dual ⊗
// Vect_{N-w, r-2}. Blocks sorted by ascending w, then period basis index,
// then composition order. Row index: (n_1, n') in the dtilde target order,
// which coincides with S_{N,r} lexicographic.
inline QMatrix d_matrix(long N, long r, const std::map<long, PeriodBasis>& period_bases) {
  if (r < 3) throw std::invalid_argument("d_matrix: depth must be >= 3");
  const auto source = enumerate_compositions(N, r);

  struct Col {
    long w;
    std::size_t basis_index;
    Composition rest;
  };
  std::vector<Col> cols;
  for (long w = 12; w <= N - 3 * (r - 2); w += 2) {
    auto it = period_bases.find(w);
    if (it == period_bases.end())
      throw std::invalid_argument("d_matrix: missing period basis for weight " + std::to_string(w));
    if (it->second.dim() == 0) continue;
    for (std::size_t k = 0; k < it->second.dim(); ++k)
      for (const auto& rest : enumerate_compositions(N - w, r - 2)) cols.push_back({w, k, rest});
  }

  QMatrix out(source.size(), cols.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    const auto& parts = source[i].parts();
    const long n1 = parts[0];
    const Composition nrest(std::vector<int>(parts.begin() + 1, parts.end()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const long m2 = cols[j].w - n1;
      if (m2 < 3 || m2 % 2 == 0) continue;
      std::vector<int> mfull{static_cast<int>(m2)};
      mfull.insert(mfull.end(), cols[j].rest.parts().begin(), cols[j].rest.parts().end());
      if (std::accumulate(mfull.begin(), mfull.end(), 0L) != N - n1) continue;
      const PeriodPolynomial& p = period_bases.at(cols[j].w).elements[cols[j].basis_index];
      out.at(i, j) = e_entry(Composition(mfull), nrest) * pair_v(n1, m2, p);
    }
  }
  return out;
}

}  // namespace mzv

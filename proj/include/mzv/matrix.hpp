#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

// Dense rational matrix. 0xn and 0x0 shapes are legal (empty index sets).
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rational> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  void set_row(std::size_t i, std::span<const Rational> r) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r[j];
  }

  QMatrix transposed() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
    QMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("QMatrix: shape mismatch in difference");
    QMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
  }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// v * P, the row-vector action used throughout: (vP)_n = sum_m v_m p(m; n).
inline std::vector<Rational> row_action(std::span<const Rational> v, const QMatrix& p) {
  if (v.size() != p.rows()) throw std::invalid_argument("row_action: length(v) != p.rows()");
  std::vector<Rational> out(p.cols());
  for (std::size_t m = 0; m < p.rows(); ++m) {
    if (v[m].is_zero()) continue;
    for (std::size_t n = 0; n < p.cols(); ++n) out[n] += v[m] * p.at(m, n);
  }
  return out;
}

namespace detail {

// Integer copy of m with each row scaled by the lcm of its denominators.
// Row scaling preserves rank, row space and right kernel.
inline std::vector<std::vector<mpz_class>> integer_rows(const QMatrix& m) {
  std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m.at(i, j).denominator());
    for (std::size_t j = 0; j < m.cols(); ++j)
      z[i][j] = m.at(i, j).numerator() * (l / m.at(i, j).denominator());
  }
  return z;
}

}  // namespace detail

struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  // Integer row echelon grid, fraction-free; rows >= rank are zero.
  std::vector<std::vector<mpz_class>> grid;
};

// Fraction-free (Bareiss one-step) forward elimination. Pivot choice is the
// first nonzero entry in column order, so the result is deterministic.
// Division exactness holds with skipped columns because every entry after
// step k is a (k+1)x(k+1) minor of the row-scaled input.
inline Echelon echelon_form(const QMatrix& m) {
  Echelon e;
  e.grid = detail::integer_rows(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  mpz_class prev = 1;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < cols && pr < rows; ++col) {
    std::size_t k = pr;
    while (k < rows && e.grid[k][col] == 0) ++k;
    if (k == rows) continue;
    if (k != pr) std::swap(e.grid[k], e.grid[pr]);
    const mpz_class pivot = e.grid[pr][col];
    for (std::size_t i = pr + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = pivot * e.grid[i][j] - e.grid[i][col] * e.grid[pr][j];
        mpz_divexact(e.grid[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      e.grid[i][col] = 0;
    }
    prev = pivot;
    e.pivot_cols.push_back(col);
    ++pr;
  }
  e.rank = pr;
  return e;
}

inline std::size_t rank(const QMatrix& m) { return echelon_form(m).rank; }

// Canonical reduced row echelon form: pivot entries 1, zeros above and below
// every pivot, zero rows kept at the bottom. Idempotent; two matrices have
// equal row space iff their rref is equal.
inline QMatrix rref(const QMatrix& m) {
  Echelon e = echelon_form(m);
  QMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < e.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rational(e.grid[i][j]);
  for (std::size_t pi = e.rank; pi-- > 0;) {
    const std::size_t pc = e.pivot_cols[pi];
    const Rational inv = Rational(1) / r.at(pi, pc);
    for (std::size_t j = pc; j < m.cols(); ++j) r.at(pi, j) *= inv;
    for (std::size_t i = 0; i < pi; ++i) {
      const Rational f = r.at(i, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < m.cols(); ++j) r.at(i, j) -= f * r.at(pi, j);
    }
  }
  return r;
}

// A linear subspace of Q^ambient, stored as a canonical RREF basis with no
// zero rows. Equality of subspaces is decidable by matrix equality.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace from_spanning_rows(const QMatrix& rows) {
    QMatrix r = rref(rows);
    std::size_t nz = 0;
    while (nz < r.rows() && !row_is_zero(r, nz)) ++nz;
    QMatrix basis(nz, r.cols());
    for (std::size_t i = 0; i < nz; ++i) basis.set_row(i, r.row(i));
    Subspace s(r.cols());
    s.basis_ = std::move(basis);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const QMatrix& basis() const { return basis_; }

  bool contains(std::span<const Rational> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
    std::vector<Rational> w(v.begin(), v.end());
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      const std::size_t p = pivot_col(i);
      if (w[p].is_zero()) continue;
      const Rational f = w[p];
      for (std::size_t j = p; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
    }
    for (const auto& x : w)
      if (!x.is_zero()) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  static bool row_is_zero(const QMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return false;
    return true;
  }

  std::size_t pivot_col(std::size_t i) const {
    std::size_t j = 0;
    while (basis_.at(i, j).is_zero()) ++j;
    return j;
  }

  std::size_t ambient_;
  QMatrix basis_;
};

// Right kernel {v : m v = 0}.
inline Subspace nullspace(const QMatrix& m) {
  QMatrix r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t j = 0;
    while (j < r.cols() && r.at(i, j).is_zero()) ++j;
    if (j == r.cols()) break;
    is_pivot[j] = true;
    pivots.emplace_back(i, j);
  }
  QMatrix basis(m.cols() - pivots.size(), m.cols());
  std::size_t bi = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis.at(bi, f) = 1;
    for (const auto& [pi, pc] : pivots)
      if (pc < f) basis.at(bi, pc) = -r.at(pi, f);
    ++bi;
  }
  return Subspace::from_spanning_rows(basis);
}

// Left kernel {v : v m = 0}; "Ker" of a matrix acting on row vectors always
// means this one.
inline Subspace left_nullspace(const QMatrix& m) { return nullspace(m.transposed()); }

// One exact solution of a x = b with free variables set to zero, or nullopt
// when the system is inconsistent.
inline std::optional<std::vector<Rational>> solve(const QMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  QMatrix r = rref(aug);
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t j = 0;
    while (j < r.cols() && r.at(i, j).is_zero()) ++j;
    if (j == r.cols()) break;
    if (j == a.cols()) return std::nullopt;  // pivot in the rhs column
    x[j] = r.at(i, a.cols());
  }
  return x;
}

inline Subspace row_space(const QMatrix& m) { return Subspace::from_spanning_rows(m); }

inline Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  QMatrix stacked(a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis().row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis().row(i));
  return Subspace::from_spanning_rows(stacked);
}

// Zassenhaus: rref of [A|A; B|0]; rows with zero left half carry the
// intersection in their right half.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient mismatch");
  const std::size_t n = a.ambient_dim();
  QMatrix block(a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      block.at(i, j) = a.basis().at(i, j);
      block.at(i, n + j) = a.basis().at(i, j);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) block.at(a.dim() + i, j) = b.basis().at(i, j);
  QMatrix r = rref(block);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = r.at(i, j).is_zero();
    if (!left_zero) continue;
    std::vector<Rational> right(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      right[j] = r.at(i, n + j);
      nonzero = nonzero || !right[j].is_zero();
    }
    if (nonzero) rows.push_back(std::move(right));
  }
  QMatrix basis(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) basis.set_row(i, rows[i]);
  return Subspace::from_spanning_rows(basis);
}

// CSV dump: one header row of column labels, then one data row per matrix
// row, entries rendered as "p/q" ("p" when q = 1).
inline void write_matrix_csv(std::ostream& os, const QMatrix& m,
                             const std::vector<std::string>& col_labels) {
  if (col_labels.size() != m.cols())
    throw std::invalid_argument("write_matrix_csv: label count mismatch");
  for (std::size_t j = 0; j < col_labels.size(); ++j)
    os << (j ? "," : "") << col_labels[j];
  os << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m.at(i, j).str();
    os << '\n';
  }
}

}  // namespace mzv

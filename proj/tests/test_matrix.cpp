#include <doctest.h>

#include <sstream>

#include "mzv/matrix.hpp"

using mzv::QMatrix;
using mzv::Rational;
using mzv::Subspace;

namespace {

// Independent rank oracle: largest k with a nonzero k x k minor, determinants
// by Laplace expansion. Exponential, for small matrices only.
Rational minor_det(const QMatrix& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m.at(rows[0], cols[0]);
  Rational det;
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (m.at(rows[0], cols[j]).is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    Rational term = m.at(rows[0], cols[j]) * minor_det(m, sub_rows, sub_cols);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

bool has_nonzero_minor(const QMatrix& m, std::size_t k) {
  std::vector<std::size_t> rows(k), cols(k);
  auto next_subset = [](std::vector<std::size_t>& v, std::size_t n) {
    std::size_t i = v.size();
    while (i-- > 0) {
      if (v[i] + (v.size() - i) < n) {
        ++v[i];
        for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = v[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    do {
      if (!minor_det(m, rows, cols).is_zero()) return true;
    } while (next_subset(cols, m.cols()));
  } while (next_subset(rows, m.rows()));
  return false;
}

std::size_t rank_by_minors(const QMatrix& m) {
  std::size_t k = std::min(m.rows(), m.cols());
  while (k > 0 && !has_nonzero_minor(m, k)) --k;
  return k;
}

// Small deterministic generator for property checks.
struct Lcg {
  unsigned long state = 0x2545F4914F6CDD1DULL;
  long next(long lo, long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((state >> 33) % static_cast<unsigned long>(hi - lo + 1));
  }
};

QMatrix random_matrix(Lcg& gen, std::size_t rows, std::size_t cols) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      long num = gen.next(-4, 4);
      long den = gen.next(1, 3);
      m.at(i, j) = Rational(num, den);
    }
  // occasionally force a dependent row
  if (rows >= 2 && gen.next(0, 1) == 0)
    for (std::size_t j = 0; j < cols; ++j) m.at(rows - 1, j) = m.at(0, j) + m.at(1 % rows, j);
  return m;
}

}  // namespace

TEST_CASE("rank on trivial shapes") {
  CHECK(mzv::rank(QMatrix(0, 0)) == 0);
  CHECK(mzv::rank(QMatrix(0, 5)) == 0);
  CHECK(mzv::rank(QMatrix::identity(3)) == 3);
}

TEST_CASE("rank agrees with the minor oracle") {
  Lcg gen;
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t r = static_cast<std::size_t>(gen.next(1, 5));
    const std::size_t c = static_cast<std::size_t>(gen.next(1, 5));
    QMatrix m = random_matrix(gen, r, c);
    CHECK(mzv::rank(m) == rank_by_minors(m));
  }
}

TEST_CASE("rref basics") {
  CHECK(mzv::rref(QMatrix::identity(4)) == QMatrix::identity(4));

  QMatrix m(1, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  QMatrix expect(1, 2);
  expect.at(0, 0) = 1;
  expect.at(0, 1) = 2;
  CHECK(mzv::rref(m) == expect);
}

TEST_CASE("rref is idempotent and canonical for the row space") {
  Lcg gen;
  for (int trial = 0; trial < 25; ++trial) {
    QMatrix m = random_matrix(gen, static_cast<std::size_t>(gen.next(1, 5)),
                              static_cast<std::size_t>(gen.next(1, 5)));
    QMatrix r = mzv::rref(m);
    CHECK(mzv::rref(r) == r);

    // same row space after row swap and scaling -> same rref
    QMatrix scrambled = m;
    if (m.rows() >= 2) {
      auto r0 = scrambled.row(0);
      scrambled.set_row(0, scrambled.row(m.rows() - 1));
      scrambled.set_row(m.rows() - 1, r0);
    }
    for (std::size_t j = 0; j < scrambled.cols(); ++j)
      scrambled.at(0, j) = scrambled.at(0, j) * Rational(3, 2);
    CHECK(mzv::rref(scrambled) == r);
  }
}

TEST_CASE("nullspace examples and rank-nullity") {
  CHECK(mzv::nullspace(QMatrix::identity(2)).dim() == 0);

  QMatrix ones(2, 2);
  ones.at(0, 0) = ones.at(0, 1) = ones.at(1, 0) = ones.at(1, 1) = 1;
  Subspace ns = mzv::nullspace(ones);
  REQUIRE(ns.dim() == 1);
  CHECK(ns.basis().at(0, 0) == Rational(1));
  CHECK(ns.basis().at(0, 1) == Rational(-1));

  Lcg gen;
  for (int trial = 0; trial < 25; ++trial) {
    QMatrix m = random_matrix(gen, static_cast<std::size_t>(gen.next(1, 5)),
                              static_cast<std::size_t>(gen.next(1, 5)));
    CHECK(mzv::rank(m) + mzv::nullspace(m).dim() == m.cols());
    // kernel vectors really are annihilated
    Subspace k = mzv::nullspace(m);
    for (std::size_t i = 0; i < k.dim(); ++i) {
      auto v = mzv::row_action(k.basis().row(i), m.transposed());
      for (const auto& x : v) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("row action follows the row-vector convention") {
  QMatrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 2) = 2;
  m.at(1, 1) = 5;
  std::vector<Rational> a{Rational(3), Rational(-1)};
  auto out = mzv::row_action(a, m);
  CHECK(out[0] == Rational(3));
  CHECK(out[1] == Rational(-5));
  CHECK(out[2] == Rational(6));

  std::vector<Rational> zero{Rational(), Rational()};
  for (const auto& x : mzv::row_action(zero, m)) CHECK(x.is_zero());

  auto id = QMatrix::identity(2);
  CHECK(mzv::row_action(a, id) == a);

  std::vector<Rational> bad{Rational(1)};
  CHECK_THROWS_AS(mzv::row_action(bad, m), std::invalid_argument);
}

TEST_CASE("subspace lattice operations") {
  QMatrix ex(1, 2);
  ex.at(0, 0) = 1;
  QMatrix ey(1, 2);
  ey.at(0, 1) = 1;
  Subspace sx = Subspace::from_spanning_rows(ex);
  Subspace sy = Subspace::from_spanning_rows(ey);

  CHECK(mzv::intersect(sx, sx) == sx);
  CHECK(mzv::intersect(sx, sy).dim() == 0);
  CHECK(mzv::sum(sx, sy).dim() == 2);
  CHECK(sx.contains(ex.row(0)));
  CHECK_FALSE(sx.contains(ey.row(0)));

  Subspace other(3);
  CHECK_THROWS_AS(mzv::intersect(sx, other), std::invalid_argument);
  CHECK_THROWS_AS(mzv::sum(sx, other), std::invalid_argument);

  Lcg gen;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 4;
    Subspace a = Subspace::from_spanning_rows(
        random_matrix(gen, static_cast<std::size_t>(gen.next(1, 3)), n));
    Subspace b = Subspace::from_spanning_rows(
        random_matrix(gen, static_cast<std::size_t>(gen.next(1, 3)), n));
    CHECK(mzv::sum(a, b).dim() + mzv::intersect(a, b).dim() == a.dim() + b.dim());
    CHECK(mzv::sum(a, b).contains(a));
    CHECK(a.contains(mzv::intersect(a, b)));
  }
}

TEST_CASE("kernel decomposition of a product") {
  // dim Ker(AB) = dim Ker A + dim(Im A cap Ker B) for the row action,
  // the linear algebra behind the depth-3 kernel split.
  Lcg gen;
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.next(2, 5));
    QMatrix a = random_matrix(gen, n, n);
    QMatrix b = random_matrix(gen, n, n);
    const std::size_t lhs = mzv::left_nullspace(a * b).dim();
    const std::size_t rhs =
        mzv::left_nullspace(a).dim() +
        mzv::intersect(mzv::row_space(a), mzv::left_nullspace(b)).dim();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("exact solve") {
  QMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  std::vector<Rational> consistent{Rational(1), Rational(2)};
  auto x = mzv::solve(m, consistent);
  REQUIRE(x.has_value());
  CHECK((*x)[0] + Rational(2) * (*x)[1] == Rational(1));

  std::vector<Rational> inconsistent{Rational(1), Rational(3)};
  CHECK_FALSE(mzv::solve(m, inconsistent).has_value());
}

TEST_CASE("matrix csv format") {
  QMatrix m(2, 2);
  m.at(0, 0) = Rational(1, 2);
  m.at(0, 1) = Rational(-3);
  m.at(1, 1) = Rational(7, 3);
  std::ostringstream os;
  mzv::write_matrix_csv(os, m, {"3.9", "5.7"});
  CHECK(os.str() == "3.9,5.7\n1/2,-3\n0,7/3\n");
}

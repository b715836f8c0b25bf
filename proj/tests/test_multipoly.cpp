#include <doctest.h>

#include "mzv/multipoly.hpp"
#include "mzv/words.hpp"

using mzv::MultiPoly;
using mzv::Rational;

TEST_CASE("construction and homogeneity") {
  MultiPoly m = MultiPoly::monomial({2, 1});
  CHECK(m.num_vars() == 2);
  CHECK(m.degree() == 3);
  CHECK(m.coeff({2, 1}) == Rational(1));

  MultiPoly p(2, 3);
  CHECK_THROWS_AS(p.add_term({1, 1}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(p.add_term({1, 1, 1}, Rational(1)), std::invalid_argument);

  p.add_term({2, 1}, Rational(2));
  p.add_term({2, 1}, Rational(-2));
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
}

TEST_CASE("arithmetic") {
  // (y1 - y0)^2 by explicit multiplication
  MultiPoly d = MultiPoly::monomial({0, 1}) - MultiPoly::monomial({1, 0});
  MultiPoly sq = d * d;
  CHECK(sq.degree() == 2);
  CHECK(sq.coeff({2, 0}) == Rational(1));
  CHECK(sq.coeff({1, 1}) == Rational(-2));
  CHECK(sq.coeff({0, 2}) == Rational(1));
  CHECK(sq == mzv::sigma(3));

  CHECK((Rational(1, 2) * sq).coeff({1, 1}) == Rational(-1));
  CHECK_THROWS_AS(sq + d, std::invalid_argument);
}

TEST_CASE("substitution with linear forms") {
  const MultiPoly y0 = MultiPoly::monomial({1, 0});
  const MultiPoly y1 = MultiPoly::monomial({0, 1});
  const MultiPoly d = y1 - y0;

  // both variables -> y0 kills y1 - y0
  std::vector<MultiPoly> collapse{y0, y0};
  CHECK(d.substitute(collapse).is_zero());

  // (y1 - y0)^2 with y0 -> 0, y1 -> x1 gives x1^2
  MultiPoly zero_form(2, 1);
  std::vector<MultiPoly> project{zero_form, y1};
  MultiPoly image = (d * d).substitute(project);
  CHECK(image.coeff({0, 2}) == Rational(1));
  CHECK(image.term_count() == 1);

  std::vector<MultiPoly> wrong_arity{y0};
  CHECK_THROWS_AS(d.substitute(wrong_arity), std::invalid_argument);
}

TEST_CASE("variable remapping") {
  const MultiPoly d = MultiPoly::monomial({0, 1}) - MultiPoly::monomial({1, 0});
  std::vector<std::size_t> shift{1, 2};
  MultiPoly moved = d.remap_vars(3, shift);
  CHECK(moved.num_vars() == 3);
  CHECK(moved.coeff({0, 0, 1}) == Rational(1));
  CHECK(moved.coeff({0, 1, 0}) == Rational(-1));

  // collapsing map merges exponents
  std::vector<std::size_t> collapse{0, 0};
  CHECK(d.remap_vars(1, collapse).is_zero());
}

TEST_CASE("text form") {
  CHECK(mzv::sigma(3).str() == "1*y0^2 - 2*y0^1*y1^1 + 1*y1^2");
  CHECK(MultiPoly(2, 3).str() == "0");
  MultiPoly half(1, 2);
  half.add_term({2}, Rational(-1, 2));
  CHECK(half.str() == "-1/2*y0^2");
}

TEST_CASE("monomial basis enumeration") {
  auto basis = mzv::homogeneous_exponents(3, 2);
  REQUIRE(basis.size() == 6);  // C(2+2, 2)
  CHECK(basis.front() == MultiPoly::Exponents{0, 0, 2});
  CHECK(basis.back() == MultiPoly::Exponents{2, 0, 0});
  for (std::size_t i = 1; i < basis.size(); ++i) CHECK(basis[i - 1] < basis[i]);

  const MultiPoly sq = mzv::sigma(3);
  auto vec = mzv::coefficient_vector(sq);
  auto b2 = mzv::homogeneous_exponents(2, 2);
  REQUIRE(vec.size() == b2.size());
  for (std::size_t i = 0; i < vec.size(); ++i) CHECK(vec[i] == sq.coeff(b2[i]));
}

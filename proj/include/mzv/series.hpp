#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

// Truncated formal power series over Q, coefficients indexed 0..order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : c_(order + 1) {}

  std::size_t order() const { return c_.size() - 1; }
  const Rational& coeff(std::size_t k) const { return c_[k]; }
  Rational& coeff(std::size_t k) { return c_[k]; }

  static PowerSeries one(std::size_t order) {
    PowerSeries s(order);
    s.c_[0] = 1;
    return s;
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    check_orders(a, b);
    PowerSeries s(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) s.c_[k] = a.c_[k] + b.c_[k];
    return s;
  }

  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    check_orders(a, b);
    PowerSeries s(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) s.c_[k] = a.c_[k] - b.c_[k];
    return s;
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    check_orders(a, b);
    PowerSeries s(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= b.order(); ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return s;
  }

  // Multiplicative inverse up to the truncation order.
  PowerSeries inverse() const {
    if (c_[0].is_zero())
      throw std::domain_error("PowerSeries::inverse: zero constant term");
    PowerSeries s(order());
    const Rational inv0 = Rational(1) / c_[0];
    s.c_[0] = inv0;
    for (std::size_t k = 1; k <= order(); ++k) {
      Rational acc;
      for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * s.c_[k - j];
      s.c_[k] = -acc * inv0;
    }
    return s;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

 private:
  static void check_orders(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order())
      throw std::invalid_argument("PowerSeries: truncation order mismatch");
  }

  std::vector<Rational> c_;
};

// E(x) = x^2 / (1 - x^2): even single zeta weights.
inline PowerSeries es(std::size_t order) {
  PowerSeries s(order);
  for (std::size_t k = 2; k <= order; k += 2) s.coeff(k) = 1;
  return s;
}

// O(x) = x^3 / (1 - x^2): odd single zeta weights >= 3.
inline PowerSeries os(std::size_t order) {
  PowerSeries s(order);
  for (std::size_t k = 3; k <= order; k += 2) s.coeff(k) = 1;
  return s;
}

// S(x) = x^12 / ((1 - x^4)(1 - x^6)): cusp form dimensions. Coefficient at
// x^N counts solutions of 4a + 6b = N - 12, a, b >= 0.
inline PowerSeries ss(std::size_t order) {
  PowerSeries s(order);
  if (order >= 12) s.coeff(12) = 1;
  PowerSeries d(order);
  d.coeff(0) = 1;
  if (order >= 4) d.coeff(4) = -1;
  if (order >= 6) d.coeff(6) = -1;
  if (order >= 10) d.coeff(10) = 1;
  return s * d.inverse();
}

// Truncated series in x and y, stored as y-slices.
class BiSeries {
 public:
  BiSeries(std::size_t order_x, std::size_t order_y)
      : order_x_(order_x), slices_(order_y + 1, PowerSeries(order_x)) {}

  std::size_t order_x() const { return order_x_; }
  std::size_t order_y() const { return slices_.size() - 1; }

  const PowerSeries& slice(std::size_t r) const { return slices_[r]; }
  PowerSeries& slice(std::size_t r) { return slices_[r]; }

  const Rational& coeff(std::size_t n, std::size_t r) const { return slices_[r].coeff(n); }

  // Inverse of a y-polynomial with series coefficients and constant slice 1,
  // by the usual recurrence in the y-degree.
  static BiSeries inverse_of(const std::vector<PowerSeries>& denom, std::size_t order_x,
                             std::size_t order_y) {
    BiSeries out(order_x, order_y);
    out.slices_[0] = denom[0].inverse();
    for (std::size_t r = 1; r <= order_y; ++r) {
      PowerSeries acc(order_x);
      for (std::size_t j = 1; j <= r && j < denom.size(); ++j)
        acc = acc + denom[j] * out.slices_[r - j];
      out.slices_[r] = (PowerSeries(order_x) - acc) * out.slices_[0];
    }
    return out;
  }

 private:
  std::size_t order_x_;
  std::vector<PowerSeries> slices_;
};

// (1 + E y) / (1 - O y + S y^2 - S y^4): the conjectural generating series
// of depth-graded dimensions before reducing mod zeta(2).
inline BiSeries bk_series(std::size_t order_n, std::size_t order_r) {
  const PowerSeries o = os(order_n), sp = ss(order_n), e = es(order_n);
  const PowerSeries zero(order_n);
  std::vector<PowerSeries> denom{PowerSeries::one(order_n), zero - o, sp, zero, zero - sp};
  BiSeries inv = BiSeries::inverse_of(denom, order_n, order_r);
  BiSeries out(order_n, order_r);
  out.slice(0) = inv.slice(0);
  for (std::size_t r = 1; r <= order_r; ++r) out.slice(r) = inv.slice(r) + e * inv.slice(r - 1);
  return out;
}

// 1 / (1 - O y + S y^2): the uneven (totally odd) counterpart.
inline BiSeries uneven_bk_series(std::size_t order_n, std::size_t order_r) {
  const PowerSeries o = os(order_n), sp = ss(order_n);
  const PowerSeries zero(order_n);
  std::vector<PowerSeries> denom{PowerSeries::one(order_n), zero - o, sp};
  return BiSeries::inverse_of(denom, order_n, order_r);
}

// 1 / (1 - O y + S y^2 - S y^4): depth-graded dimensions mod zeta(2).
inline BiSeries graded_a_series(std::size_t order_n, std::size_t order_r) {
  const PowerSeries o = os(order_n), sp = ss(order_n);
  const PowerSeries zero(order_n);
  std::vector<PowerSeries> denom{PowerSeries::one(order_n), zero - o, sp, zero, zero - sp};
  return BiSeries::inverse_of(denom, order_n, order_r);
}

}  // namespace mzv

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace mzv {

// Exact rational scalar. Canonical at all times: gcd(|num|, den) = 1,
// den > 0, zero stored as 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) { canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { canonicalize(); }

  // Accepts "p/q" or "p" in base 10.
  static Rational from_string(std::string_view s) {
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0) {
      throw std::invalid_argument("Rational::from_string: bad literal '" + std::string(s) + "'");
    }
    Rational r;
    r.v_ = q;
    r.canonicalize();
    return r;
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

 private:
  void canonicalize() {
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;
};

// C(n, k) with the usual conventions: 0 when k < 0 or k > n, 1 when k = 0.
inline mpz_class binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace mzv

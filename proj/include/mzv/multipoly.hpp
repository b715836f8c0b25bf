#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

// Homogeneous polynomial in y_0..y_{num_vars-1} over Q, keyed by exponent
// vector. No zero coefficients are stored; every stored exponent vector has
// total degree equal to degree(). The zero polynomial still carries its
// declared degree so that arithmetic stays well typed.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly(std::size_t num_vars, long degree) : num_vars_(num_vars), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("MultiPoly: negative degree");
  }

  static MultiPoly monomial(Exponents exps, Rational coeff = Rational(1)) {
    long deg = std::accumulate(exps.begin(), exps.end(), 0L);
    for (int e : exps)
      if (e < 0) throw std::invalid_argument("MultiPoly: negative exponent");
    MultiPoly p(exps.size(), deg);
    if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), std::move(coeff));
    return p;
  }

  std::size_t num_vars() const { return num_vars_; }
  long degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    if (e.size() != num_vars_) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    if (std::accumulate(e.begin(), e.end(), 0L) != degree_)
      throw std::invalid_argument("MultiPoly: term breaks homogeneity");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const Rational& s, const MultiPoly& p) {
    MultiPoly out(p.num_vars_, p.degree_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, s * c);
    return out;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.num_vars_ != b.num_vars_)
      throw std::invalid_argument("MultiPoly: variable count mismatch in product");
    MultiPoly out(a.num_vars_, a.degree_ + b.degree_);
    Exponents e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
        auto [it, inserted] = out.terms_.emplace(e, ca * cb);
        if (!inserted) {
          it->second += ca * cb;
          if (it->second.is_zero()) out.terms_.erase(it);
        }
      }
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  // Variable renaming into a ring with new_num_vars variables; var i of this
  // polynomial becomes var mapping[i] of the result.
  MultiPoly remap_vars(std::size_t new_num_vars, std::span<const std::size_t> mapping) const {
    if (mapping.size() != num_vars_) throw std::invalid_argument("remap_vars: arity mismatch");
    MultiPoly out(new_num_vars, degree_);
    Exponents e(new_num_vars);
    for (const auto& [old_e, c] : terms_) {
      std::fill(e.begin(), e.end(), 0);
      for (std::size_t i = 0; i < num_vars_; ++i) e[mapping[i]] += old_e[i];
      auto [it, inserted] = out.terms_.emplace(e, c);
      if (!inserted) it->second += c;
    }
    out.prune();
    return out;
  }

  // Substitution of one homogeneous linear form per variable; all forms live
  // in the same target ring. Degree is preserved.
  MultiPoly substitute(std::span<const MultiPoly> assignment) const {
    if (assignment.size() != num_vars_)
      throw std::invalid_argument("substitute: assignment arity mismatch");
    std::size_t target_vars = num_vars_;
    if (!assignment.empty()) target_vars = assignment[0].num_vars();
    for (const MultiPoly& f : assignment) {
      if (f.degree() != 1 || f.num_vars() != target_vars)
        throw std::invalid_argument("substitute: assignments must be linear forms in one ring");
    }
    MultiPoly out(target_vars, degree_);
    for (const auto& [e, c] : terms_) {
      MultiPoly term(target_vars, 0);
      term.terms_.emplace(Exponents(target_vars, 0), c);
      for (std::size_t i = 0; i < num_vars_; ++i)
        for (int k = 0; k < e[i]; ++k) term = term * assignment[i];
      out += term;
    }
    return out;
  }

  // Text form, terms in descending lexicographic exponent order,
  // e.g. "1*y0^2 - 2*y0^1*y1^1 + 1*y1^2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (out.empty()) {
        out += c.sign() < 0 ? "-" : "";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      out += (c.sign() < 0 ? -c : c).str();
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        out += "*y" + std::to_string(i) + "^" + std::to_string(e[i]);
      }
    }
    return out;
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    if (o.num_vars_ != num_vars_ || o.degree_ != degree_)
      throw std::invalid_argument("MultiPoly: incompatible arity or degree");
  }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }

  std::size_t num_vars_;
  long degree_;
  std::map<Exponents, Rational> terms_;
};

// All exponent vectors of the given total degree, ascending lexicographic.
// This is the fixed monomial basis used for coefficient vectors.
inline std::vector<MultiPoly::Exponents> homogeneous_exponents(std::size_t num_vars,
                                                               long degree) {
  std::vector<MultiPoly::Exponents> out;
  if (num_vars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  MultiPoly::Exponents cur(num_vars, 0);
  auto rec = [&](auto&& self, std::size_t i, long rem) -> void {
    if (i + 1 == num_vars) {
      cur[i] = static_cast<int>(rem);
      out.push_back(cur);
      return;
    }
    for (long v = 0; v <= rem; ++v) {
      cur[i] = static_cast<int>(v);
      self(self, i + 1, rem - v);
    }
  };
  rec(rec, 0, degree);
  return out;
}

// Coefficient vector of f over homogeneous_exponents(f.num_vars, f.degree).
inline std::vector<Rational> coefficient_vector(const MultiPoly& f) {
  const auto basis = homogeneous_exponents(f.num_vars(), f.degree());
  std::vector<Rational> v(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) v[i] = f.coeff(basis[i]);
  return v;
}

}  // namespace mzv

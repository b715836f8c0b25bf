#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mzv/matrix.hpp"
#include "mzv/multipoly.hpp"
#include "mzv/period.hpp"
#include "mzv/words.hpp"

namespace mzv {

// A depth-graded element: a homogeneous polynomial in y_0..y_depth.
// weight = depth + polynomial degree.
struct DepthGradedElement {
  long depth;
  MultiPoly poly;

  long weight() const { return depth + poly.degree(); }
};

inline DepthGradedElement sigma_element(long n) { return {1, sigma(n)}; }

namespace detail {

// The displayed product formula
//
//   sum_{i=0}^{s} f(y_i,...,y_{i+r}) g(y_0,...,y_i,y_{i+r+1},...,y_{r+s})
//   + (-1)^{deg f + r} sum_{i=1}^{s} f(y_{i+r},...,y_i) g(y_0,...,y_{i-1},y_{i+r},...,y_{r+s})
//
// for f of depth r and g of depth s. Both factors act by variable renaming,
// so each summand is a single polynomial product. This computes the genuine
// product only when f sits in the Lie part; deeper left factors go through
// the decomposition in circle_product below.
inline DepthGradedElement circle_formula(const DepthGradedElement& f,
                                         const DepthGradedElement& g) {
  const long r = f.depth, s = g.depth;
  const std::size_t out_vars = static_cast<std::size_t>(r + s + 1);
  MultiPoly out(out_vars, f.poly.degree() + g.poly.degree());

  std::vector<std::size_t> fmap(static_cast<std::size_t>(r + 1));
  std::vector<std::size_t> gmap(static_cast<std::size_t>(s + 1));

  for (long i = 0; i <= s; ++i) {
    for (long j = 0; j <= r; ++j) fmap[static_cast<std::size_t>(j)] = static_cast<std::size_t>(i + j);
    for (long k = 0; k <= s; ++k)
      gmap[static_cast<std::size_t>(k)] = static_cast<std::size_t>(k <= i ? k : k + r);
    out += f.poly.remap_vars(out_vars, fmap) * g.poly.remap_vars(out_vars, gmap);
  }

  const bool negate = (f.poly.degree() + r) % 2 != 0;
  for (long i = 1; i <= s; ++i) {
    for (long j = 0; j <= r; ++j)
      fmap[static_cast<std::size_t>(j)] = static_cast<std::size_t>(i + r - j);
    for (long k = 0; k <= s; ++k)
      gmap[static_cast<std::size_t>(k)] = static_cast<std::size_t>(k < i ? k : k + r);
    MultiPoly term = f.poly.remap_vars(out_vars, fmap) * g.poly.remap_vars(out_vars, gmap);
    if (negate) out -= term; else out += term;
  }
  return {r + s, std::move(out)};
}

// sigma_{w_0} o (sigma_{w_1} o (... o (sigma_{w_last} o g))), every step a
// depth-1 left factor.
inline DepthGradedElement nest_onto(std::span<const int> word, DepthGradedElement g) {
  for (std::size_t i = word.size(); i-- > 0;)
    g = circle_formula({1, sigma(word[i])}, g);
  return g;
}

inline DepthGradedElement nest_word(std::span<const int> word) {
  DepthGradedElement g{1, sigma(word.back())};
  return nest_onto(word.first(word.size() - 1), std::move(g));
}

}  // namespace detail

// The associative product transported from the enveloping algebra. A
// depth-1 left factor is handled by the formula directly. A deeper left
// factor is first written exactly over the right-nested generator products
// of its weight and depth, then applied by right nesting, which is the only
// regime the formula computes; this keeps (f o g) o h = f o (g o h) on the
// whole generated subalgebra. Left factors outside that span are rejected.
inline DepthGradedElement circle_product(const DepthGradedElement& f,
                                         const DepthGradedElement& g) {
  if (f.depth <= 1) return detail::circle_formula(f, g);

  const long N = f.weight(), r = f.depth;
  const auto comps = enumerate_compositions(N, r);
  const auto ambient = homogeneous_exponents(static_cast<std::size_t>(r + 1), N - r);
  QMatrix columns(ambient.size(), comps.size());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const MultiPoly p = detail::nest_word(comps[j].parts()).poly;
    for (std::size_t i = 0; i < ambient.size(); ++i) columns.at(i, j) = p.coeff(ambient[i]);
  }
  const auto rhs = coefficient_vector(f.poly);
  const auto coords = solve(columns, rhs);
  if (!coords)
    throw std::domain_error("circle_product: left factor outside the generator product span");

  DepthGradedElement out{r + g.depth,
                         MultiPoly(static_cast<std::size_t>(r + g.depth + 1),
                                   f.poly.degree() + g.poly.degree())};
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if ((*coords)[j].is_zero()) continue;
    DepthGradedElement term = detail::nest_onto(comps[j].parts(), g);
    out.poly += (*coords)[j] * term.poly;
  }
  return out;
}

// The Ihara bracket on polynomial representations, the commutator of o.
inline DepthGradedElement ihara_bracket(const DepthGradedElement& f,
                                        const DepthGradedElement& g) {
  DepthGradedElement fg = circle_product(f, g);
  DepthGradedElement gf = circle_product(g, f);
  fg.poly -= gf.poly;
  return fg;
}

// A formal Lie bracket word over the odd generators; leaves are the
// generator weights 3, 5, 7, ...
class BracketWord {
 public:
  static BracketWord leaf(int n) { return BracketWord(std::make_shared<Node>(Node{n, nullptr, nullptr})); }
  static BracketWord bracket(const BracketWord& l, const BracketWord& r) {
    return BracketWord(std::make_shared<Node>(Node{0, l.node_, r.node_}));
  }

  bool is_leaf() const { return node_->letter != 0; }
  int letter() const { return node_->letter; }
  BracketWord left() const { return BracketWord(node_->left); }
  BracketWord right() const { return BracketWord(node_->right); }

  long depth() const { return is_leaf() ? 1 : left().depth() + right().depth(); }
  long weight() const { return is_leaf() ? node_->letter : left().weight() + right().weight(); }

  std::string str() const {
    if (is_leaf()) return std::to_string(node_->letter);
    return "[" + left().str() + "," + right().str() + "]";
  }

 private:
  struct Node {
    int letter;  // 0 for internal nodes
    std::shared_ptr<const Node> left, right;
  };

  explicit BracketWord(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

inline DepthGradedElement evaluate_bracket(const BracketWord& bw) {
  if (bw.is_leaf()) return sigma_element(bw.letter());
  return ihara_bracket(evaluate_bracket(bw.left()), evaluate_bracket(bw.right()));
}

// Multilinear expansion of a bracket word inside the tensor algebra:
// a map from letter sequences to coefficients, with [u, v] = uv - vu.
inline std::map<std::vector<int>, Rational> expand_to_words(const BracketWord& bw) {
  if (bw.is_leaf()) return {{{bw.letter()}, Rational(1)}};
  const auto lhs = expand_to_words(bw.left());
  const auto rhs = expand_to_words(bw.right());
  std::map<std::vector<int>, Rational> out;
  auto accumulate = [&out](const std::vector<int>& a, const std::vector<int>& b, Rational c) {
    std::vector<int> w(a);
    w.insert(w.end(), b.begin(), b.end());
    auto [it, inserted] = out.emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [wa, ca] : lhs)
    for (const auto& [wb, cb] : rhs) {
      accumulate(wa, wb, ca * cb);
      accumulate(wb, wa, -(ca * cb));
    }
  return out;
}

namespace detail {

inline bool is_lyndon(const std::vector<int>& w) {
  // Strictly smaller than every proper rotation.
  std::vector<int> rot(w);
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate_copy(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end(), rot.begin());
    if (!(w < rot)) return false;
  }
  return true;
}

// Standard bracketing of a Lyndon word: split at the longest proper suffix
// that is itself Lyndon.
inline BracketWord standard_bracketing(const std::vector<int>& w) {
  if (w.size() == 1) return BracketWord::leaf(w[0]);
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::vector<int> suffix(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    if (is_lyndon(suffix)) {
      std::vector<int> prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      return BracketWord::bracket(standard_bracketing(prefix), standard_bracketing(suffix));
    }
  }
  throw std::logic_error("standard_bracketing: input was not Lyndon");
}

inline void letter_tuples(long N, long n, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (static_cast<long>(cur.size()) + 1 == n) {
    const long rem = N - std::accumulate(cur.begin(), cur.end(), 0L);
    if (rem >= 3 && rem % 2 == 1) {
      cur.push_back(static_cast<int>(rem));
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  const long placed = std::accumulate(cur.begin(), cur.end(), 0L);
  for (long v = 3; N - placed - v >= 3 * (n - static_cast<long>(cur.size()) - 1); v += 2) {
    cur.push_back(static_cast<int>(v));
    letter_tuples(N, n, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// Basis of the weight-N, degree-n part of the free Lie algebra on the odd
// generators: bracketed Lyndon words with n letters summing to N, in
// lexicographic word order.
inline std::vector<BracketWord> lyndon_basis(long N, long n) {
  std::vector<BracketWord> out;
  if (n < 1) return out;
  std::vector<std::vector<int>> words;
  std::vector<int> cur;
  detail::letter_tuples(N, n, cur, words);  // already lexicographic
  for (const auto& w : words)
    if (n == 1 || detail::is_lyndon(w)) out.push_back(detail::standard_bracketing(w));
  return out;
}

// A formal Q-linear combination of bracket words.
struct LieCombination {
  std::vector<std::pair<Rational, BracketWord>> terms;

  long weight() const { return terms.empty() ? 0 : terms.front().second.weight(); }

  DepthGradedElement evaluate() const {
    if (terms.empty()) throw std::invalid_argument("LieCombination::evaluate: empty combination");
    DepthGradedElement acc = evaluate_bracket(terms.front().second);
    acc.poly = terms.front().first * acc.poly;
    for (std::size_t i = 1; i < terms.size(); ++i) {
      DepthGradedElement t = evaluate_bracket(terms[i].second);
      acc.poly += terms[i].first * t.poly;
    }
    return acc;
  }
};

// p ⊗ σ_{i_1} ⊗ ... ⊗ σ_{i_{n-2}} ↦ Σ p_{s,t} [...[[σ_s, σ_t], σ_{i_1}], ..., σ_{i_{n-2}}].
inline LieCombination alpha_map(const PeriodPolynomial& p, const std::vector<int>& tail) {
  if (p.is_zero()) throw std::invalid_argument("alpha_map: zero period polynomial");
  for (int t : tail)
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("alpha_map: tail entries must be odd >= 3");
  LieCombination out;
  for (const auto& [st, c] : p.coefficients()) {
    if (c.is_zero()) continue;
    BracketWord b = BracketWord::bracket(BracketWord::leaf(static_cast<int>(st.first)),
                                         BracketWord::leaf(static_cast<int>(st.second)));
    for (int t : tail) b = BracketWord::bracket(b, BracketWord::leaf(t));
    out.terms.emplace_back(c, b);
  }
  return out;
}

enum class SpanMode { lie, product };

// The weight-N depth-r span inside the polynomial coefficient space:
// either the Lie span (images of bracketed Lyndon words) or the product
// span (o-products of single generators over S_{N,r}).
inline Subspace dg_span(long N, long r, SpanMode mode) {
  const auto ambient = homogeneous_exponents(static_cast<std::size_t>(r + 1), N - r);
  std::vector<std::vector<Rational>> rows;
  if (mode == SpanMode::lie) {
    for (const BracketWord& bw : lyndon_basis(N, r))
      rows.push_back(coefficient_vector(evaluate_bracket(bw).poly));
  } else {
    for (const Composition& c : enumerate_compositions(N, r))
      rows.push_back(coefficient_vector(detail::nest_word(c.parts()).poly));
  }
  QMatrix m(rows.size(), ambient.size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return Subspace::from_spanning_rows(m);
}

enum class NondegenerateStatus { exact, not_exact, holds_by_theorem };

struct NondegenerateReport {
  long weight = 0;
  long n = 0;
  std::size_t lie_dim = 0;          // dim of the weight-N part of Lie_n
  std::size_t ker_beta_dim = 0;     // dim Ker(beta) there
  std::size_t alpha_image_dim = 0;  // dim Im(alpha) there
  bool alpha_image_in_kernel = false;
  bool proven = false;  // n = 2, 3 are theorems; higher n is conjectural
  NondegenerateStatus status = NondegenerateStatus::exact;
};

// Compares dim Ker(beta) with dim Im(alpha) on the weight-N part of Lie_n.
// Im(alpha) is computed in tensor-word coordinates, Ker(beta) from the
// polynomial evaluation matrix; Im(alpha) ⊆ Ker(beta) is checked by
// evaluating beta on every alpha generator.
inline NondegenerateReport check_nondegenerate(long N, long n) {
  if (n < 2) throw std::invalid_argument("check_nondegenerate: n must be >= 2");
  NondegenerateReport rep;
  rep.weight = N;
  rep.n = n;
  rep.proven = (n == 2 || n == 3);

  const auto basis = lyndon_basis(N, n);
  rep.lie_dim = basis.size();

  // Ker(beta): rank of the evaluation matrix over the polynomial basis.
  {
    const auto ambient = homogeneous_exponents(static_cast<std::size_t>(n + 1), N - n);
    QMatrix m(basis.size(), ambient.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      m.set_row(i, coefficient_vector(evaluate_bracket(basis[i]).poly));
    rep.ker_beta_dim = basis.size() - rank(m);
  }

  // Im(alpha): generators indexed by a period basis element and an ordered
  // tail of n-2 odd generators.
  std::vector<LieCombination> generators;
  for (long w = 12; w <= N - 3 * (n - 2); w += 2) {
    const PeriodBasis pb = period_space(w);
    if (pb.dim() == 0) continue;
    std::vector<std::vector<int>> tails;
    if (n == 2) {
      if (w == N) tails.push_back({});
    } else {
      std::vector<int> cur;
      detail::letter_tuples(N - w, n - 2, cur, tails);
    }
    for (const auto& tail : tails)
      for (const auto& p : pb.elements) generators.push_back(alpha_map(p, tail));
  }
  {
    const auto word_index = enumerate_compositions(N, n);
    std::map<std::vector<int>, std::size_t> index_of;
    for (std::size_t i = 0; i < word_index.size(); ++i)
      index_of.emplace(word_index[i].parts(), i);
    QMatrix m(generators.size(), word_index.size());
    bool contained = true;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      std::map<std::vector<int>, Rational> words;
      for (const auto& [c, bw] : generators[i].terms)
        for (const auto& [w, cw] : expand_to_words(bw)) {
          auto [it, inserted] = words.emplace(w, c * cw);
          if (!inserted) it->second += c * cw;
        }
      for (const auto& [w, cw] : words) m.at(i, index_of.at(w)) = cw;
      if (!generators[i].evaluate().poly.is_zero()) contained = false;
    }
    rep.alpha_image_dim = rank(m);
    rep.alpha_image_in_kernel = contained;
  }

  rep.status = (rep.ker_beta_dim == rep.alpha_image_dim && rep.alpha_image_in_kernel)
                   ? NondegenerateStatus::exact
                   : NondegenerateStatus::not_exact;
  return rep;
}

}  // namespace mzv

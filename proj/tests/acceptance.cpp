// Acceptance suite: every structural identity the library is built around,
// run at its full documented range with exact arithmetic. One line per
// criterion; the process exits nonzero iff a criterion fails. Conjecture
// ledgers (criterion 13) pass regardless of status but surface any
// CONJECTURE_VIOLATED prominently.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mzv/ihara.hpp"
#include "mzv/matrix.hpp"
#include "mzv/period.hpp"
#include "mzv/report.hpp"
#include "mzv/series.hpp"
#include "mzv/tasaka.hpp"
#include "mzv/verify.hpp"
#include "mzv/words.hpp"

using namespace mzv;

namespace {

struct Criterion {
  std::string id;
  std::string summary;
  std::function<bool()> run;
};

bool crit_period_dimensions() {
  const PowerSeries s = ss(30);
  const std::vector<std::pair<long, long>> frozen{{12, 1}, {14, 0}, {16, 1}, {18, 1}, {20, 1},
                                                  {22, 1}, {24, 2}, {26, 1}, {28, 2}, {30, 2}};
  for (const auto& [N, dim] : frozen) {
    if (Rational(dim) != s.coeff(static_cast<std::size_t>(N))) return false;
    if (static_cast<long>(period_space(N).dim()) != dim) return false;
  }
  for (long N = 1; N <= 30; ++N)
    if (Rational(static_cast<long>(period_space(N).dim())) !=
        s.coeff(static_cast<std::size_t>(N)))
      return false;
  return true;
}

bool crit_baumard_schneps() {
  for (long N = 6; N <= 30; N += 2) {
    const WSpace w = w_space(N, 2);
    const Subspace ker = left_nullspace(cached_matrix(N, 2, MatrixKind::E).matrix);
    if (!(w.subspace == ker)) return false;
  }
  return true;
}

bool crit_depth2_rank() {
  const PowerSeries o = os(30), s = ss(30);
  const PowerSeries predicted = o * o - s;
  for (long N = 6; N <= 30; N += 2) {
    const long rk = static_cast<long>(rank(cached_matrix(N, 2, MatrixKind::E).matrix));
    if (Rational(rk) != predicted.coeff(static_cast<std::size_t>(N))) return false;
  }
  return true;
}

bool crit_b_antisymmetry() {
  for (long m = 1; m <= 31; m += 2)
    for (long n = 1; n <= 31; ++n)
      for (long np = 1; np <= 31; ++np)
        if (!(b_coeff(m, n, np) + b_coeff(m, np, n)).is_zero()) return false;
  return true;
}

MultiPoly power_of_difference(int hi, int lo, long exp) {
  MultiPoly::Exponents ehi(3, 0), elo(3, 0);
  ehi[static_cast<std::size_t>(hi)] = 1;
  elo[static_cast<std::size_t>(lo)] = 1;
  const MultiPoly d = MultiPoly::monomial(ehi) - MultiPoly::monomial(elo);
  MultiPoly out = MultiPoly::monomial(MultiPoly::Exponents(3, 0));
  for (long i = 0; i < exp; ++i) out = out * d;
  return out;
}

bool crit_closed_form() {
  for (long m1 = 3; m1 <= 27; m1 += 2)
    for (long m2 = 3; m1 + m2 <= 30; m2 += 2) {
      const MultiPoly expected =
          power_of_difference(1, 0, m1 - 1) * power_of_difference(2, 0, m2 - 1) +
          power_of_difference(2, 1, m1 - 1) * power_of_difference(1, 0, m2 - 1) -
          power_of_difference(2, 1, m1 - 1) * power_of_difference(2, 0, m2 - 1);
      if (!(circle_product(sigma_element(m1), sigma_element(m2)).poly == expected)) return false;
    }
  return true;
}

bool crit_lie_axioms() {
  for (long a = 3; a <= 15; a += 2)
    for (long b = 3; a + b <= 18; b += 2)
      for (long c = 3; a + b + c <= 21; c += 2) {
        const DepthGradedElement sa = sigma_element(a), sb = sigma_element(b),
                                 sc = sigma_element(c);
        const auto left = circle_product(circle_product(sa, sb), sc);
        const auto right = circle_product(sa, circle_product(sb, sc));
        if (!(left.poly == right.poly)) return false;
        if (!(ihara_bracket(sa, sb).poly + ihara_bracket(sb, sa).poly).is_zero()) return false;
        const auto j1 = ihara_bracket(ihara_bracket(sa, sb), sc);
        const auto j2 = ihara_bracket(ihara_bracket(sb, sc), sa);
        const auto j3 = ihara_bracket(ihara_bracket(sc, sa), sb);
        if (!(j1.poly + j2.poly + j3.poly).is_zero()) return false;
      }
  return true;
}

bool crit_period_annihilation() {
  for (long N : {12L, 16L, 18L, 20L, 22L, 24L}) {
    for (const PeriodPolynomial& p : period_space(N).elements) {
      MultiPoly acc(3, N - 2);
      for (const auto& [st, c] : p.coefficients())
        acc += c * ihara_bracket(sigma_element(st.first), sigma_element(st.second)).poly;
      if (!acc.is_zero()) return false;
    }
  }
  return true;
}

bool crit_triple_product_matrix() {
  for (long N = 9; N <= 21; N += 2) {
    const TasakaMatrix& c = cached_matrix(N, 3, MatrixKind::C);
    const auto comps = enumerate_compositions(N, 3);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& parts = comps[i].parts();
      const DepthGradedElement triple = circle_product(
          sigma_element(parts[0]), circle_product(sigma_element(parts[1]), sigma_element(parts[2])));
      const auto row = odd_coeff_vector(triple.poly, N, 3);
      for (std::size_t j = 0; j < comps.size(); ++j)
        if (row[j] != c.matrix.at(i, j)) return false;
    }
  }
  return true;
}

bool crit_eta_xi() {
  for (long N = 9; N <= 27; N += 2) {
    const QMatrix eta = eta_map(N, 3);
    if (rank(eta) != w_space(N, 3).subspace.dim()) return false;
    const QMatrix xi = xi_map(N, 3);
    if (xi.rows() > 0 && !(xi * cached_matrix(N, 3, MatrixKind::E).matrix).is_zero())
      return false;
  }
  return true;
}

bool crit_d_coaction_zero() {
  for (long N = 9; N <= 27; N += 2) {
    std::map<long, PeriodBasis> bases;
    for (long w = 12; w <= N - 3; w += 2) bases.emplace(w, period_space(w));
    if (!(dtilde_matrix(N, 3) * d_matrix(N, 3, bases)).is_zero()) return false;
  }
  return true;
}

bool crit_quasi_uneven() {
  for (long N = 6; N <= 30; N += 2) {
    const auto comps = enumerate_compositions(N, 2);
    QMatrix full(comps.size(), homogeneous_exponents(3, N - 2).size());
    QMatrix odd(comps.size(), comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const DepthGradedElement prod =
          circle_product(sigma_element(comps[i].parts()[0]), sigma_element(comps[i].parts()[1]));
      full.set_row(i, coefficient_vector(prod.poly));
      odd.set_row(i, odd_coeff_vector(prod.poly, N, 2));
    }
    if (rank(full) != rank(odd)) return false;
  }
  return true;
}

bool crit_nondegenerate_proven() {
  for (long N = 6; N <= 27; ++N) {
    if (check_nondegenerate(N, 2).status != NondegenerateStatus::exact) return false;
    if (check_nondegenerate(N, 3).status != NondegenerateStatus::exact) return false;
  }
  return true;
}

bool crit_conjecture_ledger() {
  std::vector<CheckResult> ledger;
  const PowerSeries o = os(27), s = ss(27);
  const PowerSeries predicted = o * o * o - (s * o + s * o);
  for (long N = 9; N <= 27; N += 2) {
    const TasakaMatrix& c = cached_matrix(N, 3, MatrixKind::C);
    const TasakaMatrix& e = cached_matrix(N, 3, MatrixKind::E);
    const TasakaMatrix& e2 = cached_matrix(N, 3, MatrixKind::E_shifted, 1);
    const long rk = static_cast<long>(rank(c.matrix));
    const long pred = std::stol(predicted.coeff(static_cast<std::size_t>(N)).str());
    ledger.push_back({"depth3/rank-C-vs-series", N, 3,
                      rk == pred ? CheckStatus::CONJECTURE_CONSISTENT
                                 : CheckStatus::CONJECTURE_VIOLATED,
                      rk, pred, ""});
    const bool contained = row_space(e2.matrix).contains(left_nullspace(e.matrix));
    ledger.push_back({"depth3/kerE-in-imE2", N, 3,
                      contained ? CheckStatus::CONJECTURE_CONSISTENT
                                : CheckStatus::CONJECTURE_VIOLATED,
                      0, 0, ""});
  }
  for (long N = 12; N <= 18; N += 2) {
    const NondegenerateReport rep = check_nondegenerate(N, 4);
    ledger.push_back({"lie/nondegenerate-n4", N, 4,
                      rep.status == NondegenerateStatus::exact
                          ? CheckStatus::CONJECTURE_CONSISTENT
                          : CheckStatus::CONJECTURE_VIOLATED,
                      static_cast<long>(rep.ker_beta_dim),
                      static_cast<long>(rep.alpha_image_dim), ""});
  }
  for (const CheckResult* v : violated_conjectures(ledger))
    std::printf("        !! CONJECTURE_VIOLATED %s N=%ld r=%ld lhs=%ld rhs=%ld\n",
                v->check_id.c_str(), v->weight, v->depth, v->lhs, v->rhs);
  return true;  // the ledger records status, it never fails the suite
}

bool crit_series_consistency() {
  const std::size_t ON = 40, OR = 6;
  const PowerSeries o = os(ON), e = es(ON), s = ss(ON);
  const PowerSeries zero(ON), one = PowerSeries::one(ON);
  const BiSeries bk = bk_series(ON, OR);
  const std::vector<PowerSeries> denom{one, zero - o, s, zero, zero - s};
  for (std::size_t r = 0; r <= OR; ++r) {
    PowerSeries acc(ON);
    for (std::size_t j = 0; j <= r && j < denom.size(); ++j) acc = acc + denom[j] * bk.slice(r - j);
    const PowerSeries expect = r == 0 ? one : (r == 1 ? e : zero);
    if (!(acc == expect)) return false;
  }
  const BiSeries ubk = uneven_bk_series(ON, OR);
  const std::vector<PowerSeries> udenom{one, zero - o, s};
  for (std::size_t r = 0; r <= OR; ++r) {
    PowerSeries acc(ON);
    for (std::size_t j = 0; j <= r && j < udenom.size(); ++j)
      acc = acc + udenom[j] * ubk.slice(r - j);
    if (!(acc == (r == 0 ? one : zero))) return false;
  }
  PowerSeries odd_gen(ON);
  odd_gen.coeff(0) = 1;
  for (std::size_t k = 3; k <= ON; k += 2) odd_gen.coeff(k) = -1;
  return odd_gen.inverse() * (one - o) == one;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"01-period-dimensions", "dim P_N equals the cusp form series coefficient, N <= 30",
       crit_period_dimensions},
      {"02-baumard-schneps", "pi_1(W_{N,2}) = Ker E_{N,2} as canonical subspaces, even N <= 30",
       crit_baumard_schneps},
      {"03-depth2-rank", "rank E_{N,2} = [x^N] (O^2 - S), even N <= 30", crit_depth2_rank},
      {"04-b-antisymmetry", "b^m_{n,n'} + b^m_{n',n} = 0 for odd m <= 31, n, n' <= 31",
       crit_b_antisymmetry},
      {"05-closed-form", "sigma o sigma equals the three-term polynomial, weight <= 30",
       crit_closed_form},
      {"06-lie-axioms", "o associative; bracket antisymmetric and Jacobi, weight <= 21",
       crit_lie_axioms},
      {"07-period-annihilation", "sum p_{s,t} {sigma_s, sigma_t} = 0 for N in {12,...,24}",
       crit_period_annihilation},
      {"08-triple-product-matrix", "totally even part of triple products equals C_{N,3}, N <= 21",
       crit_triple_product_matrix},
      {"09-eta-xi", "eta injective and Im xi in Ker E^{(2)}E at depth 3, N <= 27", crit_eta_xi},
      {"10-D-coaction-zero", "D after the coaction vanishes in coordinates, N <= 27",
       crit_d_coaction_zero},
      {"11-quasi-uneven", "totally odd coefficient map injective on depth-2 spans, N <= 30",
       crit_quasi_uneven},
      {"12-nondegenerate", "non-degeneracy exact for n = 2, 3 at all weights <= 27",
       crit_nondegenerate_proven},
      {"13-conjecture-ledger", "depth-3 rank and inclusion plus n = 4 ledger, recorded",
       crit_conjecture_ledger},
      {"14-series-consistency", "generating series satisfy their defining identities, order 40",
       crit_series_consistency},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::printf("        !! exception: %s\n", e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %-26s %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.id.c_str(), c.summary.c_str(),
                elapsed);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}

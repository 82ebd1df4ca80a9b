#pragma once

// Generating functions of the signed composition counts, expanded as exact
// truncated series. Signed counts are read off as negated coefficients: for a
// class on size n+k-1 the series is 1 - sum_n b_n x^(n+k-1).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "closed_forms.hpp"
#include "composition.hpp"
#include "sequence.hpp"
#include "series.hpp"

namespace evenodd {

namespace detail {

inline IntPolynomial one_minus_x_pow(std::size_t e) {
  return IntPolynomial{1} - IntPolynomial::monomial(e);
}

// -coefficient of x^(n+k-1)
inline BigInt signed_value_at(const TruncatedSeries& gf, int k, int n) {
  const long at = static_cast<long>(n) + k - 1;
  if (at > static_cast<long>(gf.order())) {
    throw std::out_of_range("series order " + std::to_string(gf.order()) +
                            " too small for n=" + std::to_string(n));
  }
  return -gf.coeff(at);
}

}  // namespace detail

// (1 - x) / (1 - x + x^k)
inline TruncatedSeries gf_thm2(int k, std::size_t order) {
  detail::require_k(k);
  const IntPolynomial numer = detail::one_minus_x_pow(1);
  return expand_rational(numer, numer + IntPolynomial::monomial(static_cast<std::size_t>(k)), order);
}

inline BigInt thm2_from_series(const TruncatedSeries& gf, int k, int n) {
  return detail::signed_value_at(gf, k, n);
}

// (1 - x^r) / (1 - x^r + x^(k+s))
inline TruncatedSeries gf_thm3(int k, int r, int s, std::size_t order) {
  detail::require_k(k);
  detail::require_rs(r, s);
  const IntPolynomial numer = detail::one_minus_x_pow(static_cast<std::size_t>(r));
  return expand_rational(numer, numer + IntPolynomial::monomial(static_cast<std::size_t>(k + s)),
                         order);
}

inline BigInt thm3_from_series(const TruncatedSeries& gf, int k, int n) {
  return detail::signed_value_at(gf, k, n);
}

// (1 - x^(2r)) / (1 + x^(3r))
inline TruncatedSeries gf_cor_period(int r, std::size_t order) {
  if (r < 1) detail::reject("r must be >= 1");
  const auto ur = static_cast<std::size_t>(r);
  return expand_rational(detail::one_minus_x_pow(2 * ur),
                         IntPolynomial{1} + IntPolynomial::monomial(3 * ur), order);
}

// sum_i (-1)^i x^(3ri) - sum_j (-1)^j x^(2r+3rj), built term by term.
inline TruncatedSeries cor_period_alternating_sums(int r, std::size_t order) {
  if (r < 1) detail::reject("r must be >= 1");
  const auto ur = static_cast<std::size_t>(r);
  TruncatedSeries s(order);
  for (std::size_t i = 0; 3 * ur * i <= order; ++i) s[3 * ur * i] += sign_pow(static_cast<long>(i));
  for (std::size_t j = 0; 2 * ur + 3 * ur * j <= order; ++j) {
    s[2 * ur + 3 * ur * j] -= sign_pow(static_cast<long>(j));
  }
  return s;
}

// T = (-xy + x^k y - x^k) * (1/(1-x)) as a truncated bivariate series.
inline BivariateSeries thm4bar_step_series(int k, std::size_t x_order, std::size_t y_order) {
  detail::require_k(k);
  const auto uk = static_cast<std::size_t>(k);
  BivariateSeries numer(x_order, y_order);
  if (y_order >= 1) {
    if (x_order >= 1) numer.at(1, 1) -= 1;
    if (x_order >= uk) numer.at(uk, 1) += 1;
  }
  if (x_order >= uk) numer.at(uk, 0) -= 1;
  BivariateSeries geometric(x_order, y_order);
  for (std::size_t t = 0; t <= x_order; ++t) geometric.at(t, 0) = 1;
  return numer * geometric;
}

// Sum over i >= 0 of T^i. Every monomial of T carries x, so T^i vanishes past
// i = x_order.
inline BivariateSeries gf_thm4bar(int k, std::size_t x_order, std::size_t y_order) {
  const BivariateSeries step = thm4bar_step_series(k, x_order, y_order);
  BivariateSeries total = BivariateSeries::one(x_order, y_order);
  BivariateSeries power = BivariateSeries::one(x_order, y_order);
  for (std::size_t i = 1; i <= x_order; ++i) {
    power = power * step;
    total = total + power;
  }
  return total;
}

inline BigInt thm4bar_from_series(const BivariateSeries& gf, int k, int n, int m) {
  const long at = static_cast<long>(n) + k - 1;
  if (at > static_cast<long>(gf.x_order()) || m > static_cast<long>(gf.y_order())) {
    throw std::out_of_range("bivariate series too small for n=" + std::to_string(n) +
                            ", m=" + std::to_string(m));
  }
  return -gf.coeff(at, m);
}

// prod_{n=1}^{order} (1 - x^n), truncated at x^order.
inline TruncatedSeries pentagonal_product(std::size_t order) {
  TruncatedSeries acc = TruncatedSeries::one(order);
  for (std::size_t n = 1; n <= order; ++n) {
    acc = acc * TruncatedSeries::from_polynomial(detail::one_minus_x_pow(n), order);
  }
  return acc;
}

// 1 + sum_{j>=1} (-1)^j (x^(j(3j+1)/2) + x^(j(3j-1)/2)), truncated.
inline TruncatedSeries pentagonal_rhs(std::size_t order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  for (std::size_t j = 1; j * (3 * j - 1) / 2 <= order; ++j) {
    const int sign = sign_pow(static_cast<long>(j));
    s[j * (3 * j - 1) / 2] += sign;
    if (j * (3 * j + 1) / 2 <= order) s[j * (3 * j + 1) / 2] += sign;
  }
  return s;
}

struct CyclotomicShiftReport {
  int r = 1;
  int s = 0;
  int k = 2;
  std::size_t order = 0;
  std::size_t window = 0;
  bool zero_before_start = false;  // b_n = 0 for n <= s
  bool inverts_trinomial = false;  // shifted series * (1 - x^r + x^2r) = 1
  std::optional<PeriodDescriptor> period;
  bool period_divides_6r = false;
  bool matches_cyclotomic = false;  // 1 - x^r + x^2r equals Phi_6r (informational)

  bool pass() const { return zero_before_start && inverts_trinomial && period_divides_6r; }
};

// For k = 2r - s: the signed sequence b_n (n >= 1) vanishes before n = s+1,
// and sum_{e>=0} b_(e+s+1) x^e is the inverse of 1 - x^r + x^(2r). The window
// of b_1..b_window is also checked for a period dividing 6r.
inline CyclotomicShiftReport cyclotomic_shift_check(int r, int s, std::size_t order,
                                                    std::size_t window = 0) {
  detail::require_rs(r, s);
  if (window == 0) window = order;
  CyclotomicShiftReport rep;
  rep.r = r;
  rep.s = s;
  rep.k = 2 * r - s;
  rep.order = order;
  rep.window = window;

  const std::size_t needed = std::max(window, order + static_cast<std::size_t>(s) + 1);
  std::vector<BigInt> b;
  b.reserve(needed);
  for (std::size_t n = 1; n <= needed; ++n) b.push_back(thm3_b(rep.k, static_cast<int>(n), r, s));

  rep.zero_before_start = true;
  for (int n = 1; n <= s; ++n) rep.zero_before_start &= (b[static_cast<std::size_t>(n - 1)] == 0);

  const auto ur = static_cast<std::size_t>(r);
  TruncatedSeries shifted(order);
  for (std::size_t e = 0; e <= order; ++e) shifted[e] = b[e + static_cast<std::size_t>(s)];
  const IntPolynomial trinomial =
      IntPolynomial{1} - IntPolynomial::monomial(ur) + IntPolynomial::monomial(2 * ur);
  rep.inverts_trinomial =
      shifted * TruncatedSeries::from_polynomial(trinomial, order) == TruncatedSeries::one(order);

  rep.period = detect_period(std::span<const BigInt>(b.data(), window));
  rep.period_divides_6r = rep.period && rep.period->preperiod == 0 && (6 * ur) % rep.period->period == 0;
  rep.matches_cyclotomic = cyclotomic(6 * ur) == trinomial;
  return rep;
}

}  // namespace evenodd

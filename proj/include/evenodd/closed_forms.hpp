#pragma once

// Exact evaluation of the signed and unsigned counting formulas for
// restricted compositions. Every sum is a direct iteration over the finite
// index ranges its constraint allows.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "composition.hpp"
#include "partition.hpp"

namespace evenodd {

// Combinatorial binomial: C(a,0) = 1 for every a (including a < 0), and 0
// whenever b < 0, b > a >= 0, or a < 0 < b. No generalized negative binomials.
inline BigInt binomial(std::int64_t a, std::int64_t b) {
  if (b == 0) return 1;
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt out = 1;
  for (std::int64_t t = 1; t <= b; ++t) {
    out *= (a - b + t);
    out /= t;
  }
  return out;
}

namespace detail {

inline void require_n(int n) {
  if (n < 1) reject("n must be >= 1 (got " + std::to_string(n) + ")");
}

}  // namespace detail

// Signed count of compositions of n+1 with parts > 1: (-1)^j on n = 3j+1 or
// 3j+2, zero otherwise.
inline BigInt thm1_b(int n) {
  detail::require_n(n);
  const int rem = n % 3;
  if (rem == 0) return 0;
  return sign_pow((n - rem) / 3);
}

// Odd minus even compositions of n+k-1 with every part >= k.
inline BigInt thm2_b(int k, int n) {
  detail::require_k(k);
  detail::require_n(n);
  BigInt sum = 0;
  for (std::int64_t j = 0; j * k <= n - 1; ++j) {
    const BigInt term = binomial(n - 1 - j * (k - 1), j);
    if (j % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

// b_1..b_N from b = 1 on the first k terms and b_n = b_{n-1} - b_{n-k} after.
inline std::vector<BigInt> thm2_recurrence(int k, int count) {
  detail::require_k(k);
  detail::require_n(count);
  std::vector<BigInt> b(static_cast<std::size_t>(count));
  for (int n = 1; n <= count; ++n) {
    const auto at = [&](int i) -> const BigInt& { return b[static_cast<std::size_t>(i - 1)]; };
    b[static_cast<std::size_t>(n - 1)] = (n <= k) ? BigInt(1) : at(n - 1) - at(n - k);
  }
  return b;
}

// Number of compositions of n+k-1 with every part >= k.
inline BigInt munagi_a(int k, int n) {
  detail::require_k(k);
  detail::require_n(n);
  BigInt sum = 0;
  for (std::int64_t j = 0; j * k <= n - 1; ++j) sum += binomial(n - 1 - j * (k - 1), j);
  return sum;
}

// Odd minus even compositions of n+k-1 with parts >= k and congruent to k+s
// modulo r. Summed over all i, j >= 0 with r*i + j*(k+s) = n-1-s.
inline BigInt thm3_b(int k, int n, int r, int s) {
  detail::require_k(k);
  detail::require_n(n);
  detail::require_rs(r, s);
  const std::int64_t target = static_cast<std::int64_t>(n) - 1 - s;
  BigInt sum = 0;
  if (target < 0) return sum;
  for (std::int64_t j = 0; j * (k + s) <= target; ++j) {
    const std::int64_t rest = target - j * (k + s);
    if (rest % r) continue;
    const std::int64_t i = rest / r;
    const BigInt term = binomial(i + j, i);
    if (j % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

// Value of thm3_b when k = r - s: 1 at n = s+1, 0 elsewhere.
inline BigInt cor_rs_indicator(int k, int n, int r, int s) {
  detail::require_rs(r, s);
  detail::require_n(n);
  if (k != r - s) {
    detail::reject("indicator form needs k = r - s (got k=" + std::to_string(k) +
                   ", r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")");
  }
  return n == s + 1 ? 1 : 0;
}

// Value of thm3_b when k = 2r - s: (-1)^j on n = 3rj+s+1 or 3rj+r+s+1.
inline BigInt cor_period_b(int k, int n, int r, int s) {
  detail::require_rs(r, s);
  detail::require_n(n);
  if (k != 2 * r - s) {
    detail::reject("periodic form needs k = 2r - s (got k=" + std::to_string(k) +
                   ", r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")");
  }
  const int shifted = n - s - 1;
  const int rem = shifted % (3 * r);
  const int j = shifted / (3 * r);
  if (rem == 0 || rem == r) return sign_pow(j);
  return 0;
}

// A partition inside the box of m rows and `width` columns, i.e. at most m
// parts, each <= width. Multiplicity m_0 counts the empty rows.
class BoxedPartition {
 public:
  BoxedPartition(Partition lambda, int rows, int width)
      : lambda_(std::move(lambda)), rows_(rows), width_(width) {
    if (rows < 0) detail::reject("box must have m >= 0 rows");
    if (width < 0) detail::reject("box width k-2 must be >= 0");
    if (static_cast<int>(lambda_.length()) > rows_) {
      detail::reject("partition " + to_string(lambda_) + " has more than m=" +
                     std::to_string(rows_) + " parts");
    }
    for (int p : lambda_.parts()) {
      if (p > width_) {
        detail::reject("partition " + to_string(lambda_) + " has a part above the box width " +
                       std::to_string(width_));
      }
    }
  }

  const Partition& lambda() const { return lambda_; }
  int rows() const { return rows_; }
  int width() const { return width_; }

  // m_0, ..., m_width; sums to rows().
  std::vector<int> multiplicity_vector() const {
    std::vector<int> mult(static_cast<std::size_t>(width_) + 1, 0);
    for (int p : lambda_.parts()) ++mult[static_cast<std::size_t>(p)];
    mult[0] = rows_ - static_cast<int>(lambda_.length());
    return mult;
  }

 private:
  Partition lambda_;
  int rows_;
  int width_;
};

// Every partition fitting in a rows x width box.
inline std::vector<BoxedPartition> boxed_partitions(int rows, int width) {
  std::vector<BoxedPartition> out;
  std::vector<int> parts;
  const auto extend = [&](auto&& self, int cap) -> void {
    out.emplace_back(Partition(parts), rows, width);
    if (static_cast<int>(parts.size()) == rows) return;
    for (int p = cap; p >= 1; --p) {
      parts.push_back(p);
      self(self, p);
      parts.pop_back();
    }
  };
  extend(extend, width);
  return out;
}

// m_lambda(1^m): the multinomial m! / (m_0! m_1! ... m_width!).
inline BigInt monomial_specialization(const BoxedPartition& lambda) {
  BigInt out = 1;
  int placed = 0;
  for (int mult : lambda.multiplicity_vector()) {
    placed += mult;
    out *= binomial(placed, mult);
  }
  return out;
}

namespace detail {

inline void require_thm4(int k, int n, int m) {
  require_k(k);
  require_n(n);
  require_m(m);
}

// Sum over partitions lambda in the (k-2)^m box and i, j >= 0 with
// i + (k+1)m + jk + |lambda| = n of C(i,m) C(i+j-1,j) m_lambda(1^m),
// optionally signed by (-1)^j.
inline BigInt thm4_lambda_form(int k, int n, int m, bool signed_sum) {
  require_thm4(k, n, m);
  if (k < 2) reject("lambda form needs k >= 2 (box width k-2 >= 0)");
  BigInt sum = 0;
  for (const auto& lambda : boxed_partitions(m, k - 2)) {
    const std::int64_t rest =
        static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k + 1) * m - lambda.lambda().size();
    if (rest < 0) continue;
    const BigInt weight = monomial_specialization(lambda);
    for (std::int64_t j = 0; j * k <= rest; ++j) {
      const std::int64_t i = rest - j * k;
      BigInt term = binomial(i, m) * binomial(i + j - 1, j) * weight;
      if (signed_sum && j % 2) term = -term;
      sum += term;
    }
  }
  return sum;
}

// Sum over i, j, l, h >= 0 with i + (k+1)m + jk + l(k-1) + h = n of
// (-1)^l C(i,m) C(i+j-1,j) C(m,l) C(m+h-1,h), with an extra (-1)^j when signed.
inline BigInt thm4_sum_form(int k, int n, int m, bool signed_sum) {
  require_thm4(k, n, m);
  BigInt sum = 0;
  const std::int64_t base = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k + 1) * m;
  for (std::int64_t j = 0; j * k <= base; ++j) {
    for (std::int64_t l = 0; l <= m; ++l) {
      const std::int64_t after_l = base - j * k - l * (k - 1);
      if (after_l < 0) break;
      for (std::int64_t h = 0; h <= after_l; ++h) {
        const std::int64_t i = after_l - h;
        if (i < m) break;
        BigInt term =
            binomial(i, m) * binomial(i + j - 1, j) * binomial(m, l) * binomial(m + h - 1, h);
        if ((l + (signed_sum ? j : 0)) % 2) term = -term;
        sum += term;
      }
    }
  }
  return sum;
}

}  // namespace detail

// Odd minus even compositions of n+k-1 with exactly m guarded parts below k.
inline BigInt thm4_b_lambda(int k, int n, int m) { return detail::thm4_lambda_form(k, n, m, true); }
inline BigInt thm4_b_sum(int k, int n, int m) { return detail::thm4_sum_form(k, n, m, true); }
inline BigInt thm4_b(int k, int n, int m) { return thm4_b_sum(k, n, m); }

// Unsigned counterparts: the common size of the first-kind class at n and the
// guarded class at n+k-1.
inline BigInt thm4_a_lambda(int k, int n, int m) { return detail::thm4_lambda_form(k, n, m, false); }
inline BigInt thm4_a_sum(int k, int n, int m) { return detail::thm4_sum_form(k, n, m, false); }
inline BigInt thm4_a(int k, int n, int m) { return thm4_a_sum(k, n, m); }

// Odd minus even compositions of n+k-1 with exactly m parts below k. Sum over
// i, j, l >= 0 with l <= m <= i and i + j + (k-1)(l+i-m-1) = n of
// (-1)^(i+l+1) C(i+j-1,j) C(i,m) C(m,l).
inline BigInt thm4bar_b(int k, int n, int m) {
  detail::require_thm4(k, n, m);
  const std::int64_t size = static_cast<std::int64_t>(n) + k - 1;
  BigInt sum = 0;
  for (std::int64_t i = m; i <= size; ++i) {
    for (std::int64_t l = 0; l <= m; ++l) {
      const std::int64_t j = size - i - static_cast<std::int64_t>(k - 1) * (l + i - m);
      if (j < 0) continue;
      BigInt term = binomial(i + j - 1, j) * binomial(i, m) * binomial(m, l);
      if ((i + l + 1) % 2) term = -term;
      sum += term;
    }
  }
  return sum;
}

}  // namespace evenodd

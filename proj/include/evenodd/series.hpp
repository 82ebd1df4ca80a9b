#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace evenodd {

// Exact integer polynomial. Trailing zero coefficients are trimmed, so the
// zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<int> coeffs) {
    for (int v : coeffs) c_.emplace_back(v);
    trim();
  }

  // c * x^e
  static IntPolynomial monomial(std::size_t e, const BigInt& c = 1) {
    std::vector<BigInt> v(e + 1);
    v[e] = c;
    return IntPolynomial(std::move(v));
  }

  // Parses "c0,c1,c2" (whitespace around entries allowed).
  static IntPolynomial parse(const std::string& text) {
    std::vector<BigInt> v;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto b = item.find_first_not_of(" \t");
      const auto e = item.find_last_not_of(" \t");
      if (b == std::string::npos) throw std::invalid_argument("empty coefficient in \"" + text + "\"");
      const std::string token = item.substr(b, e - b + 1);
      const std::size_t digits = (token[0] == '-' || token[0] == '+') ? 1 : 0;
      if (digits == token.size() ||
          token.find_first_not_of("0123456789", digits) != std::string::npos) {
        throw std::invalid_argument("bad coefficient \"" + token + "\"");
      }
      v.emplace_back(token[0] == '+' ? token.substr(1) : token);
    }
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt operator[](std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(v));
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Quotient and remainder by a divisor with leading coefficient +-1.
  std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    const BigInt& lead = divisor.c_.back();
    if (lead != 1 && lead != -1) {
      throw std::invalid_argument("divisor must have leading coefficient +-1");
    }
    std::vector<BigInt> rem = c_;
    const std::size_t dd = divisor.c_.size() - 1;
    if (rem.size() <= dd) return {IntPolynomial{}, *this};
    std::vector<BigInt> quot(rem.size() - dd);
    for (std::size_t t = quot.size(); t-- > 0;) {
      const BigInt q = rem[t + dd] * lead;
      quot[t] = q;
      if (q == 0) continue;
      for (std::size_t u = 0; u <= dd; ++u) rem[t + u] -= q * divisor.c_[u];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ',';
      out += c_[i].str();
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

// Power series known exactly through x^order. Arithmetic discards every term
// above the order; mixing orders truncates to the smaller one.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}

  TruncatedSeries(std::vector<BigInt> coeffs, std::size_t order) : c_(order + 1) {
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) c_[i] = std::move(coeffs[i]);
  }

  static TruncatedSeries from_polynomial(const IntPolynomial& p, std::size_t order) {
    return TruncatedSeries(p.coeffs(), order);
  }

  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = 1;
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return c_.at(i); }
  BigInt& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  // Coefficient with zero outside [0, order].
  BigInt coeff(long i) const {
    if (i < 0 || static_cast<std::size_t>(i) > order()) return 0;
    return c_[static_cast<std::size_t>(i)];
  }

  TruncatedSeries truncated(std::size_t order) const {
    return TruncatedSeries(c_, order);
  }

  // Multiply by x^t.
  TruncatedSeries shifted(std::size_t t) const {
    TruncatedSeries out(order());
    for (std::size_t i = 0; i + t <= order(); ++i) out.c_[i + t] = c_[i];
    return out;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    const std::size_t n = out.order();
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
  }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> c_;
};

// Series in x and y known through x^x_order y^y_order (rectangular
// truncation).
class BivariateSeries {
 public:
  BivariateSeries(std::size_t x_order, std::size_t y_order)
      : nx_(x_order), ny_(y_order), c_((x_order + 1) * (y_order + 1)) {}

  static BivariateSeries one(std::size_t x_order, std::size_t y_order) {
    BivariateSeries s(x_order, y_order);
    s.at(0, 0) = 1;
    return s;
  }

  std::size_t x_order() const { return nx_; }
  std::size_t y_order() const { return ny_; }

  BigInt& at(std::size_t a, std::size_t b) { return c_.at(a * (ny_ + 1) + b); }
  const BigInt& at(std::size_t a, std::size_t b) const { return c_.at(a * (ny_ + 1) + b); }

  // Coefficient of x^a y^b, zero outside the rectangle.
  BigInt coeff(long a, long b) const {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) > nx_ || static_cast<std::size_t>(b) > ny_) {
      return 0;
    }
    return at(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }

  // The coefficient series of y^b.
  TruncatedSeries y_slice(std::size_t b) const {
    TruncatedSeries s(nx_);
    for (std::size_t a = 0; a <= nx_; ++a) s[a] = at(a, b);
    return s;
  }

  // Multiply by x^tx y^ty.
  BivariateSeries shifted(std::size_t tx, std::size_t ty) const {
    BivariateSeries out(nx_, ny_);
    for (std::size_t a = 0; a + tx <= nx_; ++a) {
      for (std::size_t b = 0; b + ty <= ny_; ++b) out.at(a + tx, b + ty) = at(a, b);
    }
    return out;
  }

  friend BivariateSeries operator+(const BivariateSeries& p, const BivariateSeries& q) {
    BivariateSeries out(std::min(p.nx_, q.nx_), std::min(p.ny_, q.ny_));
    for (std::size_t a = 0; a <= out.nx_; ++a) {
      for (std::size_t b = 0; b <= out.ny_; ++b) out.at(a, b) = p.at(a, b) + q.at(a, b);
    }
    return out;
  }
  friend BivariateSeries operator-(const BivariateSeries& p, const BivariateSeries& q) {
    BivariateSeries out(std::min(p.nx_, q.nx_), std::min(p.ny_, q.ny_));
    for (std::size_t a = 0; a <= out.nx_; ++a) {
      for (std::size_t b = 0; b <= out.ny_; ++b) out.at(a, b) = p.at(a, b) - q.at(a, b);
    }
    return out;
  }
  friend BivariateSeries operator*(const BivariateSeries& p, const BivariateSeries& q) {
    BivariateSeries out(std::min(p.nx_, q.nx_), std::min(p.ny_, q.ny_));
    for (std::size_t a1 = 0; a1 <= out.nx_; ++a1) {
      for (std::size_t b1 = 0; b1 <= out.ny_; ++b1) {
        const BigInt& u = p.at(a1, b1);
        if (u == 0) continue;
        for (std::size_t a2 = 0; a1 + a2 <= out.nx_; ++a2) {
          for (std::size_t b2 = 0; b1 + b2 <= out.ny_; ++b2) {
            const BigInt& v = q.at(a2, b2);
            if (v != 0) out.at(a1 + a2, b1 + b2) += u * v;
          }
        }
      }
    }
    return out;
  }
  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  std::size_t nx_;
  std::size_t ny_;
  std::vector<BigInt> c_;
};

// S with S * denom = numer mod x^(order+1). The denominator's constant term
// must be a unit (+1 or -1).
inline TruncatedSeries expand_rational(const IntPolynomial& numer, const IntPolynomial& denom,
                                       std::size_t order) {
  const BigInt q0 = denom[0];
  if (q0 != 1 && q0 != -1) {
    throw std::invalid_argument("denominator constant term must be +1 or -1 (got " + q0.str() +
                                ")");
  }
  TruncatedSeries s(order);
  const std::size_t dd = denom.is_zero() ? 0 : static_cast<std::size_t>(denom.degree());
  for (std::size_t t = 0; t <= order; ++t) {
    BigInt acc = numer[t];
    for (std::size_t u = 1; u <= std::min(t, dd); ++u) acc -= denom[u] * s[t - u];
    s[t] = acc * q0;
  }
  return s;
}

// n-th cyclotomic polynomial, by dividing x^n - 1 by every Phi_d with d | n, d < n.
inline IntPolynomial cyclotomic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic index must be >= 1");
  IntPolynomial p = IntPolynomial::monomial(n) - IntPolynomial{1};
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    p = p.divmod(cyclotomic(d)).first;
  }
  return p;
}

}  // namespace evenodd

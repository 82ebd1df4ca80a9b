#pragma once

// Part-wise maps behind the counting formulas. Both maps keep the length, so
// signed counts transfer along them. Preconditions are checked eagerly and the
// first offending part is named in the error.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "closed_forms.hpp"
#include "composition.hpp"

namespace evenodd {

namespace detail {

[[noreturn]] inline void reject_part(const Composition& c, std::size_t i, const std::string& rule) {
  throw std::invalid_argument("part " + std::to_string(i) + " (= " + std::to_string(c[i]) +
                              ") of " + to_string(c) + " violates: " + rule);
}

}  // namespace detail

// Subtract k-1 from every part. Parts must be >= k.
inline Composition thm2_map(const Composition& c, int k) {
  detail::require_k(k);
  std::vector<int> out;
  out.reserve(c.length());
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (c[i] < k) detail::reject_part(c, i, "part >= " + std::to_string(k));
    out.push_back(c[i] - (k - 1));
  }
  return Composition(std::move(out));
}

inline Composition thm2_unmap(const Composition& c, int k) {
  detail::require_k(k);
  std::vector<int> out;
  out.reserve(c.length());
  for (int p : c.parts()) out.push_back(p + (k - 1));
  return Composition(std::move(out));
}

// p -> (p - (k+s-r)) / r. Parts must be >= k and congruent to k+s mod r.
inline Composition thm3_map(const Composition& c, int k, int r, int s) {
  detail::require_k(k);
  detail::require_rs(r, s);
  const int shift = k + s - r;
  std::vector<int> out;
  out.reserve(c.length());
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (c[i] < k || (c[i] - k - s) % r != 0) {
      detail::reject_part(c, i,
                          "part >= " + std::to_string(k) + " and congruent to " +
                              std::to_string(k + s) + " mod " + std::to_string(r));
    }
    out.push_back((c[i] - shift) / r);
  }
  return Composition(std::move(out));
}

inline Composition thm3_unmap(const Composition& c, int k, int r, int s) {
  detail::require_k(k);
  detail::require_rs(r, s);
  std::vector<int> out;
  out.reserve(c.length());
  for (int p : c.parts()) out.push_back(p * r + (k + s - r));
  return Composition(std::move(out));
}

// Compositions of n with the given length: C(n-1, length-1).
inline BigInt stars_and_bars_count(int n, int length) {
  if (n < 1 || length < 1) {
    detail::reject("stars and bars needs n >= 1 and length >= 1");
  }
  return binomial(n - 1, length - 1);
}

}  // namespace evenodd

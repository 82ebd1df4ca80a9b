#pragma once

// Partition identities checked by enumeration: each operation counts one or
// more partition classes and compares them with each other or with a closed
// form. Signed partition results are even minus odd.

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "bigint.hpp"
#include "partition.hpp"

namespace evenodd {

struct CountPair {
  BigInt first;
  BigInt second;
  bool equal = false;
};

struct DiffCheck {
  BigInt diff;    // by enumeration
  BigInt closed;  // by closed form
  bool equal = false;
};

namespace detail {

// (-1)^j if n = f(j) or g(j) for some j >= 0, else 0. f and g must be
// nondecreasing in j.
inline BigInt quadratic_indicator(int n, const std::function<long(long)>& f,
                                  const std::function<long(long)>& g) {
  for (long j = 0;; ++j) {
    const long a = f(j);
    const long b = g(j);
    if (a == n || b == n) return sign_pow(j);
    if (a > n && b > n) return 0;
  }
}

inline CountPair count_pair(int n, const PartitionClass& a, const PartitionClass& b) {
  CountPair out{count_partitions(n, a), count_partitions(n, b)};
  out.equal = out.first == out.second;
  return out;
}

inline DiffCheck diff_check(BigInt diff, BigInt closed) {
  DiffCheck out{std::move(diff), std::move(closed)};
  out.equal = out.diff == out.closed;
  return out;
}

}  // namespace detail

inline BigInt legendre_diff(int n) {
  return signed_partition_count(n, partition_classes::DistinctParts{}).even_minus_odd();
}

// (-1)^j when n = j(3j +- 1)/2, else 0.
inline BigInt legendre_closed(int n) {
  detail::require_size(n);
  return detail::quadratic_indicator(
      n, [](long j) { return j * (3 * j - 1) / 2; }, [](long j) { return j * (3 * j + 1) / 2; });
}

// first = distinct-part partitions, second = odd-part partitions
inline CountPair euler_distinct_odd(int n) {
  return detail::count_pair(n, partition_classes::DistinctParts{}, partition_classes::OddParts{});
}

inline BigInt odd_parts_signed(int n) {
  return signed_partition_count(n, partition_classes::OddParts{}).even_minus_odd();
}

// first = no part k or more times, second = no part divisible by k
inline CountPair glaisher_check(int n, int k) {
  return detail::count_pair(n, partition_classes::MaxMultiplicity{k},
                            partition_classes::NoPartDivisibleBy{k});
}

// first = exactly m values repeated k or more times, second = exactly m
// distinct values divisible by k
inline CountPair franklin_check(int n, int k, int m) {
  return detail::count_pair(n, partition_classes::FranklinRepeated{k, m},
                            partition_classes::FranklinDivisible{k, m});
}

// Distinct parts congruent to 0 or 2r+-1 mod 4r; closed form on n = j(2rj +- 1).
inline DiffCheck nyirenda_d(int n, int r) {
  detail::require_size(n);
  if (r < 1) detail::reject("r must be >= 1");
  const partition_classes::DistinctInResidues cls{4 * r, {0, 2 * r - 1, 2 * r + 1}};
  const long rr = r;
  return detail::diff_check(
      signed_partition_count(n, cls).even_minus_odd(),
      detail::quadratic_indicator(
          n, [rr](long j) { return j * (2 * rr * j - 1); },
          [rr](long j) { return j * (2 * rr * j + 1); }));
}

// Distinct parts congruent to 0 or +-r mod 2r+1; closed form on
// n = j((2r+1)j +- 1)/2.
inline DiffCheck nyirenda_c(int n, int r) {
  detail::require_size(n);
  if (r < 1) detail::reject("r must be >= 1");
  const partition_classes::DistinctInResidues cls{2 * r + 1, {0, r, r + 1}};
  const long rr = r;
  return detail::diff_check(
      signed_partition_count(n, cls).even_minus_odd(),
      detail::quadratic_indicator(
          n, [rr](long j) { return j * ((2 * rr + 1) * j - 1) / 2; },
          [rr](long j) { return j * ((2 * rr + 1) * j + 1) / 2; }));
}

struct AndrewsCounts {
  BigInt initial_reps;      // initial k-repetitions
  BigInt indivisible_2k;    // no part divisible by 2k
  BigInt multiplicity_2k;   // no part 2k or more times
  bool all_equal = false;
};

inline AndrewsCounts andrews_counts(int n, int k) {
  AndrewsCounts out{count_partitions(n, partition_classes::InitialKReps{k}),
                    count_partitions(n, partition_classes::NoPartDivisibleBy{2 * k}),
                    count_partitions(n, partition_classes::MaxMultiplicity{2 * k})};
  out.all_equal = out.initial_reps == out.indivisible_2k && out.indivisible_2k == out.multiplicity_2k;
  return out;
}

// Partitions of n with initial 2-repetitions and m distinct values, signed by
// the parity of the number of values of multiplicity one. Closed form:
// (-1)^m when n = m(m+1)/2, else 0.
inline DiffCheck andrews_D_diff(int n, int m) {
  std::int64_t even = 0;
  std::int64_t odd = 0;
  for_each_partition(n, partition_classes::InitialTwoRepsWithMarks{m},
                     [&](std::span<const int> parts) {
                       int singles = 0;
                       for (const auto& [value, mult] : multiplicities(parts)) singles += (mult == 1);
                       (singles % 2 ? odd : even) += 1;
                     });
  const BigInt closed = (2L * n == static_cast<long>(m) * (m + 1)) ? BigInt(sign_pow(m)) : BigInt(0);
  return detail::diff_check(BigInt(even - odd), closed);
}

}  // namespace evenodd

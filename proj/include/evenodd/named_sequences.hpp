#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "closed_forms.hpp"
#include "composition.hpp"
#include "partition_theorems.hpp"
#include "sequence.hpp"

namespace evenodd {

struct SequenceParams {
  int k = 2;
  int r = 1;
  int s = 0;
  int m = 0;
};

// A sequence defined for every index >= min_index.
struct NamedSequence {
  std::string name;
  long min_index = 1;
  std::function<BigInt(long)> term;

  IntegerSequence generate(long first, long last) const {
    if (first < min_index) {
      throw std::invalid_argument(name + " starts at index " + std::to_string(min_index) +
                                  " (requested offset " + std::to_string(first) + ")");
    }
    std::vector<BigInt> values;
    for (long i = first; i <= last; ++i) values.push_back(term(i));
    return IntegerSequence(first, std::move(values));
  }
};

namespace detail {

struct SequenceEntry {
  const char* summary;
  long min_index;
  std::function<BigInt(long, const SequenceParams&)> term;
};

inline const std::map<std::string, SequenceEntry>& sequence_table() {
  static const std::map<std::string, SequenceEntry> table{
      {"thm1", {"signed compositions of n+1 with parts > 1 (period 6)", 1,
                [](long n, const SequenceParams&) -> BigInt { return thm1_b(static_cast<int>(n)); }}},
      {"thm2", {"b(k,n), signed compositions of n+k-1 with parts >= k", 1,
                [](long n, const SequenceParams& p) -> BigInt { return thm2_b(p.k, static_cast<int>(n)); }}},
      {"munagi", {"a(k,n), compositions of n+k-1 with parts >= k", 1,
                  [](long n, const SequenceParams& p) -> BigInt { return munagi_a(p.k, static_cast<int>(n)); }}},
      {"thm3", {"b(k,n;r,s), parts >= k and = k+s (mod r)", 1,
                [](long n, const SequenceParams& p) -> BigInt {
                  return thm3_b(p.k, static_cast<int>(n), p.r, p.s);
                }}},
      {"cor-period", {"b(2r-s,n;r,s), periodic with period 6r", 1,
                      [](long n, const SequenceParams& p) -> BigInt {
                        return cor_period_b(2 * p.r - p.s, static_cast<int>(n), p.r, p.s);
                      }}},
      {"thm4", {"b(k,n;m), guarded small parts", 1,
                [](long n, const SequenceParams& p) -> BigInt { return thm4_b(p.k, static_cast<int>(n), p.m); }}},
      {"thm4a", {"a(k,n;m), unsigned guarded count", 1,
                 [](long n, const SequenceParams& p) -> BigInt { return thm4_a(p.k, static_cast<int>(n), p.m); }}},
      {"thm4bar", {"bbar(k,n;m), exactly m parts below k", 1,
                   [](long n, const SequenceParams& p) -> BigInt {
                     return thm4bar_b(p.k, static_cast<int>(n), p.m);
                   }}},
      {"thm4bar-signed", {"(-1)^n bbar(k,n;m)", 1,
                          [](long n, const SequenceParams& p) -> BigInt {
                            return sign_pow(n) * thm4bar_b(p.k, static_cast<int>(n), p.m);
                          }}},
      {"distinct-signed", {"even minus odd compositions of n with distinct parts", 0,
                           [](long n, const SequenceParams&) -> BigInt {
                             return signed_count_distinct(static_cast<int>(n)).even_minus_odd();
                           }}},
      {"odd-parts-signed", {"even minus odd partitions of n into odd parts", 0,
                            [](long n, const SequenceParams&) -> BigInt {
                              return odd_parts_signed(static_cast<int>(n));
                            }}},
      {"legendre", {"even minus odd partitions of n into distinct parts", 0,
                    [](long n, const SequenceParams&) -> BigInt { return legendre_diff(static_cast<int>(n)); }}},
  };
  return table;
}

}  // namespace detail

inline std::vector<std::string> sequence_names() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : detail::sequence_table()) names.push_back(name);
  return names;
}

inline NamedSequence named_sequence(const std::string& name, const SequenceParams& params) {
  const auto& table = detail::sequence_table();
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown sequence \"" + name + "\"");
  // Evaluate once so parameter violations surface here rather than mid-stream.
  it->second.term(it->second.min_index, params);
  auto term = it->second.term;
  return NamedSequence{name, it->second.min_index,
                       [term, params](long n) { return term(n, params); }};
}

}  // namespace evenodd

#pragma once

// Compositions, part-restriction classes, and exhaustive enumeration with
// length-parity (signed) counting. Everything else in the library is checked
// against the enumerators in this header.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "bigint.hpp"

namespace evenodd {

// An ordered sequence of positive parts. The empty composition has size 0
// and even length.
class Composition {
 public:
  Composition() = default;

  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) {
        throw std::invalid_argument("composition part " + std::to_string(i) +
                                    " is " + std::to_string(parts_[i]) +
                                    "; every part must be >= 1");
      }
      size_ += parts_[i];
    }
  }

  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool odd_length() const { return parts_.size() % 2 == 1; }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

inline std::string to_string(std::span<const int> parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

inline std::string to_string(const Composition& c) { return to_string(c.parts()); }

// Part-restriction families. Parameter names follow the counting results they
// feed: k is the part threshold, r/s the modulus and offset of the congruence
// condition, m the number of distinguished parts.
namespace classes {

struct All {};

// parts >= k
struct MinPart {
  int k = 1;
};

// parts >= k and congruent to k+s modulo r, i.e. parts in {k+s, k+s+r, ...}
struct MinPartCongruent {
  int k = 1;
  int r = 1;
  int s = 0;
};

struct DistinctParts {};

struct OddParts {};

// exactly m parts below k, anywhere
struct ExactSmall {
  int k = 1;
  int m = 0;
};

// Exactly m parts below k. Each small part is preceded by a part >= k and has
// a successor that is either the final part or is > k.
struct ExactSmallGuarded {
  int k = 1;
  int m = 0;
};

// exactly m parts not congruent to 1 mod k, each of them > k
struct FirstKind {
  int k = 1;
  int m = 0;
};

}  // namespace classes

using CompositionClass =
    std::variant<classes::All, classes::MinPart, classes::MinPartCongruent,
                 classes::DistinctParts, classes::OddParts, classes::ExactSmall,
                 classes::ExactSmallGuarded, classes::FirstKind>;

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] inline void reject(const std::string& what) {
  throw std::invalid_argument(what);
}

inline void require_k(int k) {
  if (k < 1) reject("k must be >= 1 (got " + std::to_string(k) + ")");
}

inline void require_m(int m) {
  if (m < 0) reject("m must be >= 0 (got " + std::to_string(m) + ")");
}

inline void require_rs(int r, int s) {
  if (r < 1) reject("r must be >= 1 (got " + std::to_string(r) + ")");
  if (s < 0 || s >= r) {
    reject("s must satisfy 0 <= s < r (got r=" + std::to_string(r) +
           ", s=" + std::to_string(s) + ")");
  }
}

inline void require_size(int n) {
  if (n < 0) reject("size must be >= 0 (got " + std::to_string(n) + ")");
}

}  // namespace detail

inline void validate(const CompositionClass& cls) {
  using namespace classes;
  std::visit(detail::overloaded{
                 [](const All&) {}, [](const DistinctParts&) {}, [](const OddParts&) {},
                 [](const MinPart& c) { detail::require_k(c.k); },
                 [](const MinPartCongruent& c) {
                   detail::require_k(c.k);
                   detail::require_rs(c.r, c.s);
                 },
                 [](const ExactSmall& c) {
                   detail::require_k(c.k);
                   detail::require_m(c.m);
                 },
                 [](const ExactSmallGuarded& c) {
                   detail::require_k(c.k);
                   detail::require_m(c.m);
                 },
                 [](const FirstKind& c) {
                   detail::require_k(c.k);
                   detail::require_m(c.m);
                 }},
             cls);
}

inline std::string describe(const CompositionClass& cls) {
  using namespace classes;
  return std::visit(
      detail::overloaded{
          [](const All&) -> std::string { return "all"; },
          [](const DistinctParts&) -> std::string { return "distinct"; },
          [](const OddParts&) -> std::string { return "odd"; },
          [](const MinPart& c) { return "minpart(k=" + std::to_string(c.k) + ")"; },
          [](const MinPartCongruent& c) {
            return "congruent(k=" + std::to_string(c.k) + ",r=" + std::to_string(c.r) +
                   ",s=" + std::to_string(c.s) + ")";
          },
          [](const ExactSmall& c) {
            return "exact-small(k=" + std::to_string(c.k) + ",m=" + std::to_string(c.m) + ")";
          },
          [](const ExactSmallGuarded& c) {
            return "guarded(k=" + std::to_string(c.k) + ",m=" + std::to_string(c.m) + ")";
          },
          [](const FirstKind& c) {
            return "first-kind(k=" + std::to_string(c.k) + ",m=" + std::to_string(c.m) + ")";
          }},
      cls);
}

// Full membership test on a finished part list.
inline bool admits(const CompositionClass& cls, std::span<const int> parts) {
  using namespace classes;
  return std::visit(
      detail::overloaded{
          [&](const All&) { return true; },
          [&](const MinPart& c) {
            return std::all_of(parts.begin(), parts.end(), [&](int p) { return p >= c.k; });
          },
          [&](const MinPartCongruent& c) {
            return std::all_of(parts.begin(), parts.end(), [&](int p) {
              return p >= c.k && (p - c.k - c.s) % c.r == 0;
            });
          },
          [&](const DistinctParts&) {
            std::vector<int> sorted(parts.begin(), parts.end());
            std::sort(sorted.begin(), sorted.end());
            return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
          },
          [&](const OddParts&) {
            return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 1; });
          },
          [&](const ExactSmall& c) {
            return std::count_if(parts.begin(), parts.end(), [&](int p) { return p < c.k; }) ==
                   c.m;
          },
          [&](const ExactSmallGuarded& c) {
            const std::size_t len = parts.size();
            int small = 0;
            for (std::size_t i = 0; i < len; ++i) {
              if (parts[i] >= c.k) continue;
              ++small;
              if (i == 0 || parts[i - 1] < c.k) return false;
              if (i + 1 >= len) return false;
              if (i + 1 != len - 1 && parts[i + 1] <= c.k) return false;
            }
            return small == c.m;
          },
          [&](const FirstKind& c) {
            int failing = 0;
            for (int p : parts) {
              if (p % c.k == 1 % c.k) continue;
              if (p <= c.k) return false;
              ++failing;
            }
            return failing == c.m;
          }},
      cls);
}

inline bool admits(const CompositionClass& cls, const Composition& c) {
  return admits(cls, c.parts());
}

namespace detail {

// Depth-first generator. Parts are tried in increasing order, so leaves come
// out in lexicographic order of their part lists. Prefixes are pruned with
// cheap local rules; the full membership test runs at each leaf.
template <class Visit>
class CompositionWalker {
 public:
  CompositionWalker(const CompositionClass& cls, int n, Visit& visit)
      : cls_(cls), n_(n), visit_(visit), used_(static_cast<std::size_t>(n) + 1, false) {
    using namespace classes;
    std::visit(overloaded{[&](const MinPart& c) { first_ = c.k; },
                          [&](const MinPartCongruent& c) {
                            first_ = c.k + c.s;
                            stride_ = c.r;
                          },
                          [&](const OddParts&) { stride_ = 2; },
                          [&](const ExactSmall& c) { mark_below_ = c.k; },
                          [&](const ExactSmallGuarded& c) { mark_below_ = c.k; },
                          [](const auto&) {}},
               cls_);
    distinct_ = std::holds_alternative<DistinctParts>(cls_);
    guarded_ = std::holds_alternative<ExactSmallGuarded>(cls_);
    if (auto* fk = std::get_if<FirstKind>(&cls_)) first_kind_ = *fk;
    if (auto* es = std::get_if<ExactSmall>(&cls_)) budget_ = es->m;
    if (auto* eg = std::get_if<ExactSmallGuarded>(&cls_)) budget_ = eg->m;
    if (first_kind_) budget_ = first_kind_->m;
    prefix_.reserve(static_cast<std::size_t>(n));
  }

  void run() { step(n_); }

 private:
  bool marked(int p) const {
    if (first_kind_) return p % first_kind_->k != 1 % first_kind_->k;
    return p < mark_below_;
  }

  bool accept(int p) const {
    if (distinct_ && used_[static_cast<std::size_t>(p)]) return false;
    if (first_kind_ && marked(p) && p <= first_kind_->k) return false;
    if (marked(p) && marks_ + 1 > budget_) return false;
    if (guarded_) {
      const int k = mark_below_;
      if (p < k && (prefix_.empty() || prefix_.back() < k)) return false;
    }
    return true;
  }

  void step(int remaining) {
    if (remaining == 0) {
      if (admits(cls_, std::span<const int>(prefix_))) visit_(std::span<const int>(prefix_));
      return;
    }
    for (int p = first_; p <= remaining; p += stride_) {
      if (!accept(p)) continue;
      prefix_.push_back(p);
      const bool m = marked(p);
      marks_ += m;
      if (distinct_) used_[static_cast<std::size_t>(p)] = true;
      step(remaining - p);
      if (distinct_) used_[static_cast<std::size_t>(p)] = false;
      marks_ -= m;
      prefix_.pop_back();
    }
  }

  const CompositionClass& cls_;
  int n_;
  Visit& visit_;
  std::vector<int> prefix_;
  std::vector<bool> used_;
  int first_ = 1;
  int stride_ = 1;
  int mark_below_ = 0;  // parts below this count toward the budget
  int budget_ = 0;
  int marks_ = 0;
  bool distinct_ = false;
  bool guarded_ = false;
  std::optional<classes::FirstKind> first_kind_;
};

}  // namespace detail

// Calls visit(std::span<const int>) once per member composition of n, in
// lexicographic order. The span is only valid for the duration of the call.
template <class Visit>
void for_each_composition(int n, const CompositionClass& cls, Visit&& visit) {
  detail::require_size(n);
  validate(cls);
  detail::CompositionWalker<std::remove_reference_t<Visit>> walker(cls, n, visit);
  walker.run();
}

inline std::vector<Composition> enumerate_compositions(int n, const CompositionClass& cls) {
  std::vector<Composition> out;
  for_each_composition(n, cls, [&](std::span<const int> parts) {
    out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
  });
  return out;
}

inline BigInt count_compositions(int n, const CompositionClass& cls) {
  std::uint64_t total = 0;
  for_each_composition(n, cls, [&](std::span<const int>) { ++total; });
  return BigInt(total);
}

// Odd-length and even-length counts of a class at one size. diff() is
// odd - even, the orientation used for every composition result;
// even_minus_odd() is the partition-side orientation.
class SignedCount {
 public:
  SignedCount() = default;
  SignedCount(BigInt odd, BigInt even)
      : odd_(std::move(odd)), even_(std::move(even)), diff_(odd_ - even_) {}

  const BigInt& odd_count() const { return odd_; }
  const BigInt& even_count() const { return even_; }
  const BigInt& diff() const { return diff_; }
  BigInt even_minus_odd() const { return -diff_; }
  BigInt total() const { return odd_ + even_; }

  friend bool operator==(const SignedCount&, const SignedCount&) = default;

 private:
  BigInt odd_ = 0;
  BigInt even_ = 0;
  BigInt diff_ = 0;
};

inline SignedCount signed_count(int n, const CompositionClass& cls) {
  // Machine-word tallies: no enumeration that finishes can overflow them.
  std::uint64_t odd = 0;
  std::uint64_t even = 0;
  for_each_composition(n, cls, [&](std::span<const int> parts) {
    (parts.size() % 2 ? odd : even) += 1;
  });
  return SignedCount(BigInt(odd), BigInt(even));
}

// Distinct-part compositions of n; read the result with even_minus_odd().
inline SignedCount signed_count_distinct(int n) {
  return signed_count(n, classes::DistinctParts{});
}

}  // namespace evenodd

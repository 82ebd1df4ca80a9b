#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "bigint.hpp"
#include "composition.hpp"

namespace evenodd {

// A weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) {
        throw std::invalid_argument("partition part " + std::to_string(i) + " must be >= 1");
      }
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw std::invalid_argument("partition parts must be weakly decreasing (part " +
                                    std::to_string(i) + ")");
      }
      size_ += parts_[i];
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

inline std::string to_string(const Partition& p) { return to_string(p.parts()); }

// (value, multiplicity) runs of a weakly decreasing part list.
inline std::vector<std::pair<int, int>> multiplicities(std::span<const int> parts) {
  std::vector<std::pair<int, int>> runs;
  for (int p : parts) {
    if (!runs.empty() && runs.back().first == p) {
      ++runs.back().second;
    } else {
      runs.emplace_back(p, 1);
    }
  }
  return runs;
}

namespace partition_classes {

struct All {};
struct DistinctParts {};
struct OddParts {};

// distinct parts, each congruent mod `modulus` to a member of `residues`
struct DistinctInResidues {
  int modulus = 1;
  std::vector<int> residues;
};

// no part value occurs `bound` or more times
struct MaxMultiplicity {
  int bound = 1;
};

struct NoPartDivisibleBy {
  int k = 1;
};

// exactly m distinct part values occur k or more times
struct FranklinRepeated {
  int k = 1;
  int m = 0;
};

// exactly m distinct part values are divisible by k
struct FranklinDivisible {
  int k = 1;
  int m = 0;
};

// Whenever some value j occurs >= k times, every integer 1..j-1 occurs >= k
// times as well.
struct InitialKReps {
  int k = 1;
};

// initial 2-repetitions with exactly m distinct part values
struct InitialTwoRepsWithMarks {
  int m = 0;
};

}  // namespace partition_classes

using PartitionClass =
    std::variant<partition_classes::All, partition_classes::DistinctParts,
                 partition_classes::OddParts, partition_classes::DistinctInResidues,
                 partition_classes::MaxMultiplicity, partition_classes::NoPartDivisibleBy,
                 partition_classes::FranklinRepeated, partition_classes::FranklinDivisible,
                 partition_classes::InitialKReps, partition_classes::InitialTwoRepsWithMarks>;

inline void validate(const PartitionClass& cls) {
  using namespace partition_classes;
  std::visit(detail::overloaded{
                 [](const DistinctInResidues& c) {
                   if (c.modulus < 1) detail::reject("modulus must be >= 1");
                 },
                 [](const MaxMultiplicity& c) {
                   if (c.bound < 1) detail::reject("multiplicity bound must be >= 1");
                 },
                 [](const NoPartDivisibleBy& c) { detail::require_k(c.k); },
                 [](const FranklinRepeated& c) {
                   detail::require_k(c.k);
                   detail::require_m(c.m);
                 },
                 [](const FranklinDivisible& c) {
                   detail::require_k(c.k);
                   detail::require_m(c.m);
                 },
                 [](const InitialKReps& c) { detail::require_k(c.k); },
                 [](const InitialTwoRepsWithMarks& c) { detail::require_m(c.m); },
                 [](const auto&) {}},
             cls);
}

inline bool has_initial_k_repetitions(std::span<const int> parts, int k) {
  const int largest = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
  std::vector<int> mult(static_cast<std::size_t>(largest) + 1, 0);
  for (int p : parts) ++mult[static_cast<std::size_t>(p)];
  int top = 0;  // largest value repeated k or more times
  for (std::size_t v = 1; v < mult.size(); ++v) {
    if (mult[v] >= k) top = static_cast<int>(v);
  }
  for (int v = 1; v < top; ++v) {
    if (mult[static_cast<std::size_t>(v)] < k) return false;
  }
  return true;
}

inline bool admits(const PartitionClass& cls, std::span<const int> parts) {
  using namespace partition_classes;
  const auto runs = multiplicities(parts);
  return std::visit(
      detail::overloaded{
          [&](const All&) { return true; },
          [&](const DistinctParts&) { return runs.size() == parts.size(); },
          [&](const OddParts&) {
            return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 1; });
          },
          [&](const DistinctInResidues& c) {
            if (runs.size() != parts.size()) return false;
            return std::all_of(parts.begin(), parts.end(), [&](int p) {
              return std::find(c.residues.begin(), c.residues.end(), p % c.modulus) !=
                     c.residues.end();
            });
          },
          [&](const MaxMultiplicity& c) {
            return std::all_of(runs.begin(), runs.end(),
                               [&](const auto& run) { return run.second < c.bound; });
          },
          [&](const NoPartDivisibleBy& c) {
            return std::none_of(parts.begin(), parts.end(), [&](int p) { return p % c.k == 0; });
          },
          [&](const FranklinRepeated& c) {
            return std::count_if(runs.begin(), runs.end(), [&](const auto& run) {
                     return run.second >= c.k;
                   }) == c.m;
          },
          [&](const FranklinDivisible& c) {
            return std::count_if(runs.begin(), runs.end(), [&](const auto& run) {
                     return run.first % c.k == 0;
                   }) == c.m;
          },
          [&](const InitialKReps& c) { return has_initial_k_repetitions(parts, c.k); },
          [&](const InitialTwoRepsWithMarks& c) {
            return static_cast<int>(runs.size()) == c.m && has_initial_k_repetitions(parts, 2);
          }},
      cls);
}

namespace detail {

// Parts are tried from largest to smallest, giving lexicographically
// descending output.
template <class Visit>
class PartitionWalker {
 public:
  PartitionWalker(const PartitionClass& cls, int n, Visit& visit)
      : cls_(cls), n_(n), visit_(visit) {
    using namespace partition_classes;
    distinct_ = std::holds_alternative<DistinctParts>(cls_) ||
                std::holds_alternative<DistinctInResidues>(cls_);
    odd_ = std::holds_alternative<OddParts>(cls_);
    if (auto* r = std::get_if<DistinctInResidues>(&cls_)) residues_ = r;
    if (auto* d = std::get_if<NoPartDivisibleBy>(&cls_)) forbidden_divisor_ = d->k;
    if (auto* mm = std::get_if<MaxMultiplicity>(&cls_)) run_bound_ = mm->bound;
    prefix_.reserve(static_cast<std::size_t>(n));
  }

  void run() { step(n_, n_, 0); }

 private:
  bool accept(int p, int new_run) const {
    if (distinct_ && new_run > 1) return false;
    if (odd_ && p % 2 == 0) return false;
    if (forbidden_divisor_ && p % forbidden_divisor_ == 0) return false;
    if (run_bound_ && new_run >= run_bound_) return false;
    if (residues_ && std::find(residues_->residues.begin(), residues_->residues.end(),
                               p % residues_->modulus) == residues_->residues.end()) {
      return false;
    }
    return true;
  }

  // `cap` bounds the next part; `run` counts trailing copies of the last part.
  void step(int remaining, int cap, int run) {
    if (remaining == 0) {
      if (admits(cls_, std::span<const int>(prefix_))) visit_(std::span<const int>(prefix_));
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      const int new_run = (!prefix_.empty() && prefix_.back() == p) ? run + 1 : 1;
      if (!accept(p, new_run)) continue;
      prefix_.push_back(p);
      step(remaining - p, p, new_run);
      prefix_.pop_back();
    }
  }

  const PartitionClass& cls_;
  int n_;
  Visit& visit_;
  std::vector<int> prefix_;
  bool distinct_ = false;
  bool odd_ = false;
  const partition_classes::DistinctInResidues* residues_ = nullptr;
  int forbidden_divisor_ = 0;
  int run_bound_ = 0;
};

}  // namespace detail

template <class Visit>
void for_each_partition(int n, const PartitionClass& cls, Visit&& visit) {
  detail::require_size(n);
  validate(cls);
  detail::PartitionWalker<std::remove_reference_t<Visit>> walker(cls, n, visit);
  walker.run();
}

inline std::vector<Partition> enumerate_partitions(int n, const PartitionClass& cls) {
  std::vector<Partition> out;
  for_each_partition(n, cls, [&](std::span<const int> parts) {
    out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
  });
  return out;
}

inline BigInt count_partitions(int n, const PartitionClass& cls) {
  std::uint64_t total = 0;
  for_each_partition(n, cls, [&](std::span<const int>) { ++total; });
  return BigInt(total);
}

// Length-parity counts of a partition class; partition results read
// even_minus_odd().
inline SignedCount signed_partition_count(int n, const PartitionClass& cls) {
  std::uint64_t odd = 0;
  std::uint64_t even = 0;
  for_each_partition(n, cls, [&](std::span<const int> parts) {
    (parts.size() % 2 ? odd : even) += 1;
  });
  return SignedCount(BigInt(odd), BigInt(even));
}

}  // namespace evenodd

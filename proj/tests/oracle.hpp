#pragma once

// Brute-force reference used only by the tests. Nothing here calls into the
// library: compositions come from cut-point bitmasks, partitions from a plain
// recursion, and every class predicate is restated from its definition.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;
using Pred = std::function<bool(const Parts&)>;

// All compositions of n. Bit i of the mask set means "cut after unit i+1".
inline std::vector<Parts> compositions(int n) {
  if (n == 0) return {Parts{}};
  std::vector<Parts> out;
  const std::uint32_t limit = 1u << (n - 1);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    Parts c;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        c.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.push_back(run);
    out.push_back(std::move(c));
  }
  return out;
}

inline void partitions_rec(int n, int cap, Parts& cur, std::vector<Parts>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, cap); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Parts> partitions(int n) {
  std::vector<Parts> out;
  Parts cur;
  partitions_rec(n, n, cur, out);
  return out;
}

struct Tally {
  long odd = 0;
  long even = 0;
  long total() const { return odd + even; }
  long odd_minus_even() const { return odd - even; }
  long even_minus_odd() const { return even - odd; }
};

inline Tally tally(const std::vector<Parts>& items, const Pred& keep) {
  Tally t;
  for (const auto& c : items) {
    if (!keep(c)) continue;
    (c.size() % 2 ? t.odd : t.even) += 1;
  }
  return t;
}

inline Tally comp_tally(int n, const Pred& keep) { return tally(compositions(n), keep); }
inline Tally part_tally(int n, const Pred& keep) { return tally(partitions(n), keep); }

inline std::vector<Parts> comp_filter(int n, const Pred& keep) {
  std::vector<Parts> out;
  for (auto& c : compositions(n)) {
    if (keep(c)) out.push_back(c);
  }
  return out;
}

// composition predicates

inline Pred any() {
  return [](const Parts&) { return true; };
}

inline Pred min_part(int k) {
  return [k](const Parts& c) {
    for (int p : c) {
      if (p < k) return false;
    }
    return true;
  };
}

inline Pred congruent(int k, int r, int s) {
  return [=](const Parts& c) {
    for (int p : c) {
      bool hit = false;
      for (int q = k + s; q <= p; q += r) hit = hit || q == p;
      if (!hit) return false;
    }
    return true;
  };
}

inline Pred distinct() {
  return [](const Parts& c) { return std::set<int>(c.begin(), c.end()).size() == c.size(); };
}

inline Pred odd_parts() {
  return [](const Parts& c) {
    for (int p : c) {
      if (p % 2 == 0) return false;
    }
    return true;
  };
}

inline int small_count(const Parts& c, int k) {
  int n = 0;
  for (int p : c) n += p < k;
  return n;
}

inline Pred exact_small(int k, int m) {
  return [=](const Parts& c) { return small_count(c, k) == m; };
}

// Small parts (< k) sit strictly inside: a big part (>= k) before, and after
// them either the last part or a part larger than k.
inline Pred guarded(int k, int m) {
  return [=](const Parts& c) {
    if (small_count(c, k) != m) return false;
    const int len = static_cast<int>(c.size());
    for (int i = 0; i < len; ++i) {
      if (c[i] >= k) continue;
      const bool before = i >= 1 && c[i - 1] >= k;
      const bool after = i + 1 < len && (i + 1 == len - 1 || c[i + 1] > k);
      if (!before || !after) return false;
    }
    return true;
  };
}

// Parts congruent to 1 mod k are free; every other part exceeds k and there
// are exactly m of them.
inline Pred first_kind(int k, int m) {
  return [=](const Parts& c) {
    int other = 0;
    for (int p : c) {
      if ((p - 1) % k == 0) continue;
      if (p <= k) return false;
      ++other;
    }
    return other == m;
  };
}

// partition predicates (parts in any order)

inline std::map<int, int> mults(const Parts& p) {
  std::map<int, int> m;
  for (int x : p) ++m[x];
  return m;
}

inline Pred in_residues(int modulus, std::vector<int> residues) {
  return [=](const Parts& p) {
    if (!distinct()(p)) return false;
    for (int x : p) {
      if (std::find(residues.begin(), residues.end(), x % modulus) == residues.end()) return false;
    }
    return true;
  };
}

inline Pred mult_below(int bound) {
  return [=](const Parts& p) {
    for (auto [v, m] : mults(p)) {
      if (m >= bound) return false;
    }
    return true;
  };
}

inline Pred none_divisible(int k) {
  return [=](const Parts& p) {
    for (int x : p) {
      if (x % k == 0) return false;
    }
    return true;
  };
}

inline Pred values_repeated(int k, int m) {
  return [=](const Parts& p) {
    int hits = 0;
    for (auto [v, c] : mults(p)) hits += c >= k;
    return hits == m;
  };
}

inline Pred values_divisible(int k, int m) {
  return [=](const Parts& p) {
    int hits = 0;
    for (auto [v, c] : mults(p)) hits += v % k == 0;
    return hits == m;
  };
}

// If some value appears k or more times, so does every smaller positive value.
inline Pred initial_reps(int k) {
  return [=](const Parts& p) {
    const auto m = mults(p);
    for (auto [v, c] : m) {
      if (c < k) continue;
      for (int u = 1; u < v; ++u) {
        auto it = m.find(u);
        if (it == m.end() || it->second < k) return false;
      }
    }
    return true;
  };
}

}  // namespace oracle

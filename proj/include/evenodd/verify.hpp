#pragma once

// Verification sweeps: each theorem expands into a list of instances in
// lexicographic parameter order, every instance compares several independent
// routes to the same number, and the report names the first failing instance.
// Instances may run on several threads; results are merged by index, so the
// report does not depend on scheduling.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "closed_forms.hpp"
#include "composition.hpp"
#include "generating_functions.hpp"
#include "partition.hpp"
#include "partition_theorems.hpp"
#include "sequence.hpp"
#include "series.hpp"

namespace evenodd {

struct Counterexample {
  std::string params;
  std::string expected;
  std::string actual;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string theorem;
  std::string ranges;
  std::size_t instances = 0;
  bool pass = true;
  std::optional<Counterexample> counterexample;

  std::string render_plain() const {
    std::ostringstream out;
    out << "theorem: " << theorem << '\n'
        << "ranges: " << ranges << '\n'
        << "instances: " << instances << '\n'
        << "status: " << (pass ? "pass" : "fail") << '\n';
    if (counterexample) {
      out << "counterexample: " << counterexample->params << '\n'
          << "expected: " << counterexample->expected << '\n'
          << "actual: " << counterexample->actual << '\n';
    }
    return out.str();
  }

  std::string render_csv() const {
    std::ostringstream out;
    out << "theorem,ranges,instances,status,params,expected,actual\n"
        << theorem << ",\"" << ranges << "\"," << instances << ',' << (pass ? "pass" : "fail");
    if (counterexample) {
      out << ",\"" << counterexample->params << "\",\"" << counterexample->expected << "\",\""
          << counterexample->actual << '"';
    } else {
      out << ",,,";
    }
    out << '\n';
    return out.str();
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Upper ends of the parameter ranges; 0 picks the theorem's default.
struct SweepOptions {
  int max_n = 0;
  int max_k = 0;
  int max_r = 0;
  int max_m = 0;
  unsigned jobs = 1;
};

namespace detail {

struct Mismatch {
  std::string expected;
  std::string actual;
};

// One named route to a value.
struct Route {
  std::string name;
  BigInt value;
};

// The first route is the reference; the first disagreeing route is reported.
inline std::optional<Mismatch> agree(const std::vector<Route>& routes) {
  for (std::size_t i = 1; i < routes.size(); ++i) {
    if (routes[i].value != routes[0].value) {
      return Mismatch{routes[0].name + "=" + routes[0].value.str(),
                      routes[i].name + "=" + routes[i].value.str()};
    }
  }
  return std::nullopt;
}

inline std::optional<Mismatch> expect_true(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return Mismatch{what, "false"};
}

struct Instance {
  std::string params;
  std::function<std::optional<Mismatch>()> check;
};

struct Sweep {
  std::string ranges;
  std::vector<Instance> instances;
};

inline std::string kv(std::initializer_list<std::pair<const char*, long>> items) {
  std::string out;
  for (const auto& [key, value] : items) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

inline int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }

// Enumeration routes are skipped above this theorem-n: the class sizes grow
// exponentially while the formulas stay cheap.
inline constexpr int kEnumerationCap = 24;

inline VerificationReport run_sweep(const std::string& theorem, Sweep sweep, unsigned jobs) {
  const std::size_t count = sweep.instances.size();
  std::vector<std::optional<Mismatch>> results(count);
  const auto work = [&](std::size_t i) {
    try {
      results[i] = sweep.instances[i].check();
    } catch (const std::exception& e) {
      results[i] = Mismatch{"no exception", std::string("exception: ") + e.what()};
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  VerificationReport report;
  report.theorem = theorem;
  report.ranges = std::move(sweep.ranges);
  report.instances = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (results[i]) {
      report.pass = false;
      report.counterexample =
          Counterexample{sweep.instances[i].params, results[i]->expected, results[i]->actual};
      break;
    }
  }
  return report;
}

// ---- composition-side sweeps ----

inline Sweep sweep_thm1(const SweepOptions& o) {
  const int max_n = pick(o.max_n, 60);
  Sweep sw{"k=2 n=1.." + std::to_string(max_n) + " (enumeration n<=" +
           std::to_string(kEnumerationCap) + ")", {}};
  for (int n = 1; n <= max_n; ++n) {
    sw.instances.push_back({kv({{"n", n}}), [n] {
                              std::vector<Route> routes{{"periodic", thm1_b(n)},
                                                        {"formula", thm2_b(2, n)}};
                              if (n <= kEnumerationCap) {
                                routes.push_back(
                                    {"enumeration", signed_count(n + 1, classes::MinPart{2}).diff()});
                              }
                              return agree(routes);
                            }});
  }
  return sw;
}

inline Sweep sweep_thm2(const SweepOptions& o) {
  const int max_k = pick(o.max_k, 6);
  const int max_n = pick(o.max_n, 20);
  Sweep sw{"k=1.." + std::to_string(max_k) + " n=1.." + std::to_string(max_n), {}};
  for (int k = 1; k <= max_k; ++k) {
    auto gf = std::make_shared<const TruncatedSeries>(
        gf_thm2(k, static_cast<std::size_t>(max_n + k - 1)));
    auto rec = std::make_shared<const std::vector<BigInt>>(thm2_recurrence(k, max_n));
    for (int n = 1; n <= max_n; ++n) {
      sw.instances.push_back({kv({{"k", k}, {"n", n}}), [k, n, gf, rec] {
                                const SignedCount sc = signed_count(n + k - 1, classes::MinPart{k});
                                if (auto bad = agree({{"enumeration", sc.diff()},
                                                      {"formula", thm2_b(k, n)},
                                                      {"recurrence", (*rec)[static_cast<std::size_t>(n - 1)]},
                                                      {"series", thm2_from_series(*gf, k, n)}})) {
                                  return bad;
                                }
                                return agree({{"enumeration-total", sc.total()},
                                              {"munagi", munagi_a(k, n)}});
                              }});
    }
  }
  return sw;
}

inline Sweep sweep_thm3(const SweepOptions& o) {
  const int max_r = pick(o.max_r, 5);
  const int max_k = pick(o.max_k, 6);
  const int max_n = pick(o.max_n, 18);
  Sweep sw{"r=1.." + std::to_string(max_r) + " s=0..r-1 k=1.." + std::to_string(max_k) +
               " n=1.." + std::to_string(max_n),
           {}};
  for (int r = 1; r <= max_r; ++r) {
    for (int s = 0; s < r; ++s) {
      for (int k = 1; k <= max_k; ++k) {
        auto gf = std::make_shared<const TruncatedSeries>(
            gf_thm3(k, r, s, static_cast<std::size_t>(max_n + k - 1)));
        for (int n = 1; n <= max_n; ++n) {
          sw.instances.push_back(
              {kv({{"r", r}, {"s", s}, {"k", k}, {"n", n}}), [r, s, k, n, gf] {
                 std::vector<Route> routes{
                     {"enumeration", signed_count(n + k - 1, classes::MinPartCongruent{k, r, s}).diff()},
                     {"formula", thm3_b(k, n, r, s)},
                     {"series", thm3_from_series(*gf, k, n)}};
                 if (k == r - s) routes.push_back({"indicator", cor_rs_indicator(k, n, r, s)});
                 if (k == 2 * r - s) routes.push_back({"periodic", cor_period_b(k, n, r, s)});
                 return agree(routes);
               }});
        }
      }
    }
  }
  return sw;
}

inline Sweep sweep_cor_rs(const SweepOptions& o) {
  const int max_r = pick(o.max_r, 5);
  const int max_n = pick(o.max_n, 18);
  Sweep sw{"r=1.." + std::to_string(max_r) + " s=0..r-1 k=r-s n=1.." + std::to_string(max_n), {}};
  for (int r = 1; r <= max_r; ++r) {
    for (int s = 0; s < r; ++s) {
      const int k = r - s;
      sw.instances.push_back({kv({{"r", r}, {"s", s}, {"k", k}}) + " series", [r, s, k, max_n] {
                                const auto order = static_cast<std::size_t>(max_n + k - 1);
                                const TruncatedSeries expected = TruncatedSeries::from_polynomial(
                                    IntPolynomial{1} - IntPolynomial::monomial(static_cast<std::size_t>(r)),
                                    order);
                                return expect_true(gf_thm3(k, r, s, order) == expected,
                                                   "generating function equals 1 - x^r");
                              }});
      for (int n = 1; n <= max_n; ++n) {
        sw.instances.push_back(
            {kv({{"r", r}, {"s", s}, {"k", k}, {"n", n}}), [r, s, k, n] {
               std::vector<Route> routes{{"indicator", cor_rs_indicator(k, n, r, s)},
                                         {"formula", thm3_b(k, n, r, s)}};
               if (n <= kEnumerationCap) {
                 routes.push_back(
                     {"enumeration", signed_count(n + k - 1, classes::MinPartCongruent{k, r, s}).diff()});
               }
               // n-1-s = r t turns the sum into sum_j (-1)^j C(t, j)
               const int rest = n - 1 - s;
               if (rest >= 0 && rest % r == 0) {
                 const int t = rest / r;
                 BigInt alt = 0;
                 for (int j = 0; j <= t; ++j) alt += sign_pow(j) * binomial(t, j);
                 routes.push_back({"alternating-binomial", alt});
               }
               return agree(routes);
             }});
      }
    }
  }
  return sw;
}

inline Sweep sweep_cor_period(const SweepOptions& o) {
  const int max_r = pick(o.max_r, 5);
  const int max_n = pick(o.max_n, 18);
  constexpr std::size_t kShiftOrder = 60;
  Sweep sw{"r=1.." + std::to_string(max_r) + " s=0..r-1 k=2r-s n=1.." + std::to_string(max_n) +
               " (shift order " + std::to_string(kShiftOrder) + ", period window 36r)",
           {}};
  for (int r = 1; r <= max_r; ++r) {
    const auto order = static_cast<std::size_t>(max_n + 2 * r - 1);
    auto gf = std::make_shared<const TruncatedSeries>(gf_cor_period(r, order));
    sw.instances.push_back({kv({{"r", r}}) + " series", [r, gf, order] {
                              return expect_true(*gf == cor_period_alternating_sums(r, order),
                                                 "(1-x^2r)/(1+x^3r) equals the alternating sums");
                            }});
    for (int s = 0; s < r; ++s) {
      const int k = 2 * r - s;
      sw.instances.push_back({kv({{"r", r}, {"s", s}}) + " shift", [r, s] {
                                const auto rep = cyclotomic_shift_check(
                                    r, s, kShiftOrder, static_cast<std::size_t>(36 * r));
                                if (!rep.zero_before_start)
                                  return expect_true(false, "b_n = 0 for n <= s");
                                if (!rep.inverts_trinomial)
                                  return expect_true(false, "shifted series * (1 - x^r + x^2r) = 1");
                                return expect_true(rep.period_divides_6r, "period divides 6r");
                              }});
      for (int n = 1; n <= max_n; ++n) {
        sw.instances.push_back(
            {kv({{"r", r}, {"s", s}, {"k", k}, {"n", n}}), [r, s, k, n, gf] {
               std::vector<Route> routes{{"periodic", cor_period_b(k, n, r, s)},
                                         {"formula", thm3_b(k, n, r, s)},
                                         {"series", thm3_from_series(*gf, k, n)}};
               if (n <= kEnumerationCap) {
                 routes.push_back(
                     {"enumeration", signed_count(n + k - 1, classes::MinPartCongruent{k, r, s}).diff()});
               }
               return agree(routes);
             }});
      }
    }
  }
  return sw;
}

inline Sweep sweep_thm4(const SweepOptions& o) {
  const int max_k = pick(o.max_k, 4);
  const int max_m = pick(o.max_m, 3);
  const int max_n = pick(o.max_n, 16);
  Sweep sw{"k=2.." + std::to_string(max_k) + " m=0.." + std::to_string(max_m) + " n=1.." +
               std::to_string(max_n),
           {}};
  for (int k = 2; k <= max_k; ++k) {
    for (int m = 0; m <= max_m; ++m) {
      for (int n = 1; n <= max_n; ++n) {
        sw.instances.push_back(
            {kv({{"k", k}, {"m", m}, {"n", n}}), [k, m, n] {
               const SignedCount guarded = signed_count(n + k - 1, classes::ExactSmallGuarded{k, m});
               std::vector<Route> signed_routes{{"enumeration", guarded.diff()},
                                                {"lambda-form", thm4_b_lambda(k, n, m)},
                                                {"sum-form", thm4_b_sum(k, n, m)}};
               if (m == 0) signed_routes.push_back({"thm2", thm2_b(k, n)});
               if (auto bad = agree(signed_routes)) return bad;
               return agree({{"guarded-count", guarded.total()},
                             {"first-kind-count", count_compositions(n, classes::FirstKind{k, m})},
                             {"lambda-form", thm4_a_lambda(k, n, m)},
                             {"sum-form", thm4_a_sum(k, n, m)}});
             }});
      }
    }
  }
  return sw;
}

inline Sweep sweep_thm4bar(const SweepOptions& o) {
  const int max_k = pick(o.max_k, 4);
  const int max_m = pick(o.max_m, 3);
  const int max_n = pick(o.max_n, 16);
  Sweep sw{"k=1.." + std::to_string(max_k) + " m=0.." + std::to_string(max_m) + " n=1.." +
               std::to_string(max_n),
           {}};
  for (int k = 1; k <= max_k; ++k) {
    auto gf = std::make_shared<const BivariateSeries>(
        gf_thm4bar(k, static_cast<std::size_t>(max_n + k - 1), static_cast<std::size_t>(max_m)));
    for (int m = 0; m <= max_m; ++m) {
      for (int n = 1; n <= max_n; ++n) {
        sw.instances.push_back({kv({{"k", k}, {"m", m}, {"n", n}}), [k, m, n, gf] {
                                  std::vector<Route> routes{
                                      {"enumeration",
                                       signed_count(n + k - 1, classes::ExactSmall{k, m}).diff()},
                                      {"formula", thm4bar_b(k, n, m)},
                                      {"series", thm4bar_from_series(*gf, k, n, m)}};
                                  if (m == 0) routes.push_back({"thm2", thm2_b(k, n)});
                                  return agree(routes);
                                }});
      }
    }
  }
  return sw;
}

inline Sweep sweep_comp1(const SweepOptions& o) {
  const int max_n = pick(o.max_n, 22);
  Sweep sw{"n=1.." + std::to_string(max_n), {}};
  for (int n = 1; n <= max_n; ++n) {
    sw.instances.push_back({kv({{"n", n}}), [n] {
                              const BigInt odd = count_compositions(n, classes::OddParts{});
                              std::vector<Route> routes{
                                  {"odd-parts", odd},
                                  {"parts>1", count_compositions(n + 1, classes::MinPart{2})},
                                  {"munagi", munagi_a(2, n)}};
                              if (n >= 3) {
                                routes.push_back({"fibonacci-step", count_compositions(n - 1, classes::OddParts{}) +
                                                                        count_compositions(n - 2, classes::OddParts{})});
                              }
                              return agree(routes);
                            }});
  }
  return sw;
}

inline Sweep sweep_comp2(const SweepOptions& o) {
  const int max_k = pick(o.max_k, 5);
  const int max_n = pick(o.max_n, 20);
  Sweep sw{"k=1.." + std::to_string(max_k) + " n=1.." + std::to_string(max_n), {}};
  for (int k = 1; k <= max_k; ++k) {
    for (int n = 1; n <= max_n; ++n) {
      sw.instances.push_back({kv({{"k", k}, {"n", n}}), [k, n] {
                                std::vector<Route> routes{
                                    {"parts=1(mod k)", count_compositions(n, classes::FirstKind{k, 0})},
                                    {"congruent-class", count_compositions(n, classes::MinPartCongruent{1, k, 0})},
                                    {"parts>=k", count_compositions(n + k - 1, classes::MinPart{k})},
                                    {"munagi", munagi_a(k, n)}};
                                if (n > k) routes.push_back({"recurrence", munagi_a(k, n - 1) + munagi_a(k, n - k)});
                                return agree(routes);
                              }});
    }
  }
  return sw;
}

inline Sweep sweep_comp3(const SweepOptions& o) {
  const int max_k = pick(o.max_k, 4);
  const int max_m = pick(o.max_m, 3);
  const int max_n = pick(o.max_n, 16);
  Sweep sw{"k=1.." + std::to_string(max_k) + " m=0.." + std::to_string(max_m) + " n=1.." +
               std::to_string(max_n),
           {}};
  for (int k = 1; k <= max_k; ++k) {
    for (int m = 0; m <= max_m; ++m) {
      for (int n = 1; n <= max_n; ++n) {
        sw.instances.push_back(
            {kv({{"k", k}, {"m", m}, {"n", n}}), [k, m, n] {
               std::vector<Route> routes{
                   {"first-kind", count_compositions(n, classes::FirstKind{k, m})},
                   {"guarded", count_compositions(n + k - 1, classes::ExactSmallGuarded{k, m})},
                   {"sum-form", thm4_a_sum(k, n, m)}};
               if (k >= 2) routes.push_back({"lambda-form", thm4_a_lambda(k, n, m)});
               if (m == 0) routes.push_back({"munagi", munagi_a(k, n)});
               return agree(routes);
             }});
      }
    }
  }
  return sw;
}

// ---- partition-side sweeps ----

inline Sweep sweep_legendre(const SweepOptions& o) {
  const int max_n = pick(o.max_n, 50);
  auto product = std::make_shared<const TruncatedSeries>(
      pentagonal_product(static_cast<std::size_t>(max_n)));
  Sweep sw{"n=0.." + std::to_string(max_n), {}};
  for (int n = 0; n <= max_n; ++n) {
    sw.instances.push_back({kv({{"n", n}}), [n, product] {
                              return agree({{"enumeration", legendre_diff(n)},
                                            {"closed", legendre_closed(n)},
                                            {"pentagonal", (*product)[static_cast<std::size_t>(n)]}});
                            }});
  }
  return sw;
}

inline Sweep sweep_pentagonal(const SweepOptions& o) {
  const int order = pick(o.max_n, 100);
  auto lhs = std::make_shared<const TruncatedSeries>(pentagonal_product(static_cast<std::size_t>(order)));
  auto rhs = std::make_shared<const TruncatedSeries>(pentagonal_rhs(static_cast<std::size_t>(order)));
  Sweep sw{"order " + std::to_string(order), {}};
  for (int n = 0; n <= order; ++n) {
    sw.instances.push_back({kv({{"n", n}}), [n, lhs, rhs] {
                              const auto i = static_cast<std::size_t>(n);
                              return agree({{"product", (*lhs)[i]}, {"pentagonal-sum", (*rhs)[i]}});
                            }});
  }
  return sw;
}

inline Sweep sweep_euler(const SweepOptions& o) {
  const int max_n = pick(o.max_n, 30);
  Sweep sw{"n=0.." + std::to_string(max_n), {}};
  for (int n = 0; n <= max_n; ++n) {
    sw.instances.push_back({kv({{"n", n}}), [n] {
                              const CountPair c = euler_distinct_odd(n);
                              if (auto bad = agree({{"distinct", c.first}, {"odd", c.second}})) return bad;
                              // odd-part partitions have length of the same parity as n
                              return agree({{"signed-odd-parts", odd_parts_signed(n)},
                                            {"(-1)^n*count", sign_pow(n) * c.second}});
                            }});
  }
  return sw;
}

inline Sweep sweep_glaisher(const SweepOptions& o) {
  const int max_k = pick(o.max_k, 4);
  const int max_n = pick(o.max_n, 30);
  Sweep sw{"k=1.." + std::to_string(max_k) + " n=0.." + std::to_string(max_n), {}};
  for (int k = 1; k <= max_k; ++k) {
    for (int n = 0; n <= max_n; ++n) {
      sw.instances.push_back({kv({{"k", k}, {"n", n}}), [k, n] {
                                const CountPair c = glaisher_check(n, k);
                                return agree({{"multiplicity<k", c.first}, {"indivisible-by-k", c.second}});
                              }});
    }
  }
  return sw;
}

inline Sweep sweep_franklin(const SweepOptions& o) {
  const int max_k = pick(o.max_k, 3);
  const int max_m = pick(o.max_m, 3);
  const int max_n = pick(o.max_n, 25);
  Sweep sw{"k=1.." + std::to_string(max_k) + " m=0.." + std::to_string(max_m) + " n=0.." +
               std::to_string(max_n),
           {}};
  for (int k = 1; k <= max_k; ++k) {
    for (int m = 0; m <= max_m; ++m) {
      for (int n = 0; n <= max_n; ++n) {
        sw.instances.push_back({kv({{"k", k}, {"m", m}, {"n", n}}), [k, m, n] {
                                  const CountPair c = franklin_check(n, k, m);
                                  std::vector<Route> routes{{"repeated", c.first}, {"divisible", c.second}};
                                  if (m == 0) routes.push_back({"glaisher", glaisher_check(n, k).first});
                                  return agree(routes);
                                }});
      }
    }
  }
  return sw;
}

inline Sweep sweep_nyirenda(const SweepOptions& o, bool c_family) {
  const int max_r = pick(o.max_r, 3);
  const int max_n = pick(o.max_n, 40);
  Sweep sw{"r=1.." + std::to_string(max_r) + " n=0.." + std::to_string(max_n), {}};
  for (int r = 1; r <= max_r; ++r) {
    for (int n = 0; n <= max_n; ++n) {
      sw.instances.push_back({kv({{"r", r}, {"n", n}}), [r, n, c_family] {
                                const DiffCheck d = c_family ? nyirenda_c(n, r) : nyirenda_d(n, r);
                                std::vector<Route> routes{{"enumeration", d.diff}, {"closed", d.closed}};
                                if (c_family && r == 1) routes.push_back({"legendre", legendre_diff(n)});
                                return agree(routes);
                              }});
    }
  }
  return sw;
}

inline Sweep sweep_andrews(const SweepOptions& o) {
  const int max_k = pick(o.max_k, 3);
  const int max_n = pick(o.max_n, 30);
  Sweep sw{"k=1.." + std::to_string(max_k) + " n=0.." + std::to_string(max_n), {}};
  for (int k = 1; k <= max_k; ++k) {
    for (int n = 0; n <= max_n; ++n) {
      sw.instances.push_back({kv({{"k", k}, {"n", n}}), [k, n] {
                                const AndrewsCounts c = andrews_counts(n, k);
                                return agree({{"initial-reps", c.initial_reps},
                                              {"indivisible-by-2k", c.indivisible_2k},
                                              {"multiplicity<2k", c.multiplicity_2k}});
                              }});
    }
  }
  return sw;
}

inline Sweep sweep_andrews_d(const SweepOptions& o) {
  const int max_n = pick(o.max_n, 30);
  const int max_m = pick(o.max_m, 7);
  Sweep sw{"n=0.." + std::to_string(max_n) + " m=0.." + std::to_string(max_m), {}};
  for (int n = 0; n <= max_n; ++n) {
    for (int m = 0; m <= max_m; ++m) {
      sw.instances.push_back({kv({{"n", n}, {"m", m}}), [n, m] {
                                const DiffCheck d = andrews_D_diff(n, m);
                                return agree({{"enumeration", d.diff}, {"closed", d.closed}});
                              }});
    }
  }
  return sw;
}

using SweepBuilder = std::function<Sweep(const SweepOptions&)>;

inline const std::map<std::string, SweepBuilder>& sweep_registry() {
  static const std::map<std::string, SweepBuilder> registry{
      {"thm1", sweep_thm1},
      {"thm2", sweep_thm2},
      {"thm3", sweep_thm3},
      {"cor-rs", sweep_cor_rs},
      {"cor-period", sweep_cor_period},
      {"thm4", sweep_thm4},
      {"thm4bar", sweep_thm4bar},
      {"comp1", sweep_comp1},
      {"comp2", sweep_comp2},
      {"comp3", sweep_comp3},
      {"legendre", sweep_legendre},
      {"pentagonal", sweep_pentagonal},
      {"euler", sweep_euler},
      {"glaisher", sweep_glaisher},
      {"franklin", sweep_franklin},
      {"nyirenda-d", [](const SweepOptions& o) { return sweep_nyirenda(o, false); }},
      {"nyirenda-c", [](const SweepOptions& o) { return sweep_nyirenda(o, true); }},
      {"andrews", sweep_andrews},
      {"andrews-d", sweep_andrews_d},
  };
  return registry;
}

}  // namespace detail

inline std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, builder] : detail::sweep_registry()) ids.push_back(id);
  return ids;
}

// Runs the named sweep; throws std::invalid_argument for an unknown id.
inline VerificationReport verify(const std::string& theorem, const SweepOptions& options = {}) {
  const auto& registry = detail::sweep_registry();
  const auto it = registry.find(theorem);
  if (it == registry.end()) throw std::invalid_argument("unknown theorem \"" + theorem + "\"");
  return detail::run_sweep(theorem, it->second(options), std::max(1u, options.jobs));
}

}  // namespace evenodd

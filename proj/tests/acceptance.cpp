// Acceptance run: one PASS/FAIL line per criterion, each against its time
// budget. Exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <evenodd/evenodd.hpp>

#include "oracle.hpp"

using namespace evenodd;

namespace {

const std::string kFixtures = EVENODD_FIXTURE_DIR;

struct Check {
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void sweep(const std::string& id, SweepOptions o = {}) {
    const auto rep = verify(id, o);
    if (!rep.pass) failures.push_back(rep.render_plain());
  }
};

double run_criterion(const std::string& label, const std::string& title, double budget_s,
                     const std::function<void(Check&)>& body, bool& all_ok) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = c.failures.empty() && secs < budget_s;
  all_ok = all_ok && ok;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, budget_s);
  std::cout << label << ' ' << (ok ? "PASS" : "FAIL") << "  " << title << "  [" << timing << "]\n";
  for (const auto& f : c.failures) std::cout << "    " << f << '\n';
  if (secs >= budget_s) std::cout << "    over time budget\n";
  return secs;
}

void ac1(Check& c) {
  c.sweep("thm2");  // enumeration, formula, recurrence, series, k<=6 n<=20
  c.sweep("thm1");  // period-6 closed form, k=2 n<=60
  for (int k = 1; k <= 6; ++k) {
    for (int n = 1; n + k - 1 <= 18; ++n) {
      c.require(thm2_b(k, n) == oracle::comp_tally(n + k - 1, oracle::min_part(k)).odd_minus_even(),
                "oracle thm2 k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
}

void ac2(Check& c) {
  c.sweep("comp1");
  c.sweep("comp2");
  for (int n = 1; n <= 18; ++n) {
    c.require(oracle::comp_tally(n, oracle::odd_parts()).total() ==
                  oracle::comp_tally(n + 1, oracle::min_part(2)).total(),
              "oracle odd parts vs parts>=2 at n=" + std::to_string(n));
  }
  for (int k = 1; k <= 5; ++k) {
    for (int n = 1; n + k - 1 <= 18; ++n) {
      c.require(munagi_a(k, n) == oracle::comp_tally(n + k - 1, oracle::min_part(k)).total(),
                "oracle munagi k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
}

void ac3(Check& c) {
  c.sweep("thm3");
  c.sweep("cor-rs");
  c.sweep("cor-period");  // includes the shifted-series inverse at order 60 and the 36r window
  for (int r = 1; r <= 5; ++r) {
    for (int s = 0; s < r; ++s) {
      const auto rep = cyclotomic_shift_check(r, s, 60, static_cast<std::size_t>(36 * r));
      c.require(rep.pass(), "shift check r=" + std::to_string(r) + " s=" + std::to_string(s));
      for (int k = 1; k <= 4; ++k) {
        for (int n = 1; n + k - 1 <= 16; ++n) {
          c.require(thm3_b(k, n, r, s) ==
                        oracle::comp_tally(n + k - 1, oracle::congruent(k, r, s)).odd_minus_even(),
                    "oracle thm3");
        }
      }
    }
  }
}

void ac4(Check& c) {
  c.sweep("thm4");
  c.sweep("comp3");
  c.require(thm4_b(2, 5, 1) == 2, "b(2,5;1) = 2");
  c.require(thm4_b(2, 8, 2) == 1, "b(2,8;2) = 1");
  c.require(thm4_b(2, 6, 2) == 0, "b(2,6;2) = 0");
  for (int k = 2; k <= 4; ++k) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 1; n + k - 1 <= 15; ++n) {
        const auto g = oracle::comp_tally(n + k - 1, oracle::guarded(k, m));
        c.require(thm4_b_lambda(k, n, m) == g.odd_minus_even() && thm4_b_sum(k, n, m) == g.odd_minus_even(),
                  "oracle guarded signed");
        c.require(thm4_a(k, n, m) == g.total() &&
                      thm4_a(k, n, m) == oracle::comp_tally(n, oracle::first_kind(k, m)).total(),
                  "oracle guarded / first-kind counts");
      }
    }
  }
}

void ac5(Check& c) {
  c.sweep("thm4bar");
  c.require(thm4bar_b(2, 2, 1) == -2, "bbar(2,2;1) = -2");
  const auto gf = gf_thm4bar(2, 12, 3);
  c.require(thm4bar_from_series(gf, 2, 2, 1) == -2, "series bbar(2,2;1) = -2");
  for (int k = 1; k <= 4; ++k) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 1; n + k - 1 <= 15; ++n) {
        c.require(thm4bar_b(k, n, m) == oracle::comp_tally(n + k - 1, oracle::exact_small(k, m)).odd_minus_even(),
                  "oracle exact-small");
      }
    }
  }
}

void ac6(Check& c) {
  for (const char* id : {"legendre", "pentagonal", "euler", "glaisher", "franklin", "nyirenda-d", "nyirenda-c",
                         "andrews", "andrews-d"}) {
    c.sweep(id);
  }
  const auto product = pentagonal_product(100);
  for (int n = 0; n <= 50; ++n) {
    c.require(legendre_diff(n) == product[static_cast<std::size_t>(n)], "legendre vs product");
    c.require(nyirenda_c(n, 1).diff == legendre_diff(n), "c-family r=1 equals Legendre");
  }
  for (int n = 0; n <= 20; ++n) {
    c.require(legendre_diff(n) == oracle::part_tally(n, oracle::distinct()).even_minus_odd(), "oracle legendre");
    for (int k = 1; k <= 3; ++k) {
      c.require(andrews_counts(n, k).initial_reps == oracle::part_tally(n, oracle::initial_reps(k)).total(),
                "oracle initial repetitions");
    }
  }
}

void ac7(Check& c) {
  const auto distinct = named_sequence("distinct-signed", {}).generate(0, 17);
  const auto odd = named_sequence("odd-parts-signed", {}).generate(0, 17);
  const auto period6 = named_sequence("thm2", {2, 1, 0, 0}).generate(1, 60);
  c.require(compare(distinct, load_bfile(kFixtures + "/a339435.txt")).matched(), "distinct-part prefix");
  c.require(compare(odd, load_bfile(kFixtures + "/a081360.txt")).matched(), "odd-part prefix");
  c.require(compare(period6, load_bfile(kFixtures + "/a010892.txt")).matched(), "period-6 fixture");
  for (const auto* s : {&distinct, &odd, &period6}) {
    const std::string text = emit_bfile(*s);
    c.require(parse_bfile(text).to_sequence() == *s && emit_bfile(parse_bfile(text).to_sequence()) == text,
              "b-file round trip");
  }
  const auto head = named_sequence("thm2", {2, 1, 0, 0}).generate(1, 6);
  c.require(emit_bfile(head) == "1 1\n2 1\n3 0\n4 -1\n5 -1\n6 0\n", "exact b-file bytes");
}

void ac8_parallel(Check& c) {
  for (const auto& id : theorem_ids()) {
    SweepOptions seq;
    SweepOptions par;
    par.jobs = 4;
    const auto a = verify(id, seq);
    const auto b = verify(id, par);
    c.require(a.render_plain() == b.render_plain() && a.render_csv() == b.render_csv(),
              "parallel report differs for " + id);
  }
}

}  // namespace

int main() {
  bool ok = true;
  double total = 0;
  total += run_criterion("AC1", "signed counts, parts >= k: formula = enumeration = recurrence = series", 5, ac1, ok);
  total += run_criterion("AC2", "odd-part / parts >= k count equalities and unsigned formula", 10, ac2, ok);
  total += run_criterion("AC3", "congruence-restricted formula, indicator and periodic forms, shifted inverse", 30,
                         ac3, ok);
  total += run_criterion("AC4", "guarded small parts: both signed forms, unsigned forms, first-kind equality", 30,
                         ac4, ok);
  total += run_criterion("AC5", "exactly m small parts: formula = enumeration = bivariate series", 20, ac5, ok);
  total += run_criterion("AC6", "partition identities", 60, ac6, ok);
  total += run_criterion("AC7", "sequence fixtures and b-file round trip", 5, ac7, ok);
  total += run_criterion("AC8", "parallel sweeps give byte-identical reports; suite under 180s", 180 - total,
                         ac8_parallel, ok);
  char summary[64];
  std::snprintf(summary, sizeof summary, "%.2fs", total);
  std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << " in " << summary << '\n';
  return ok ? 0 : 1;
}

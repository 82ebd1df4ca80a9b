#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes to the given streams, so it can be driven from tests.
//
// Exit codes: 0 success, 1 verification failure or b-file mismatch,
// 2 usage or parameter error.

#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bigint.hpp"
#include "closed_forms.hpp"
#include "composition.hpp"
#include "generating_functions.hpp"
#include "named_sequences.hpp"
#include "sequence.hpp"
#include "series.hpp"
#include "verify.hpp"

namespace evenodd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Params {
  std::optional<int> n;
  std::optional<int> size;
  std::optional<int> k;
  int r = 1;
  int s = 0;
  int m = 0;

  int need_k() const {
    if (!k) throw UsageError("--k is required here");
    return *k;
  }
  int need_n() const {
    if (!n) throw UsageError("--n is required here");
    return *n;
  }
};

namespace detail {

struct ResolvedClass {
  CompositionClass cls;
  int size_shift = 0;  // composition size = n + size_shift
};

inline ResolvedClass resolve_class(const std::string& name, const Params& p) {
  if (name == "all") return {classes::All{}, 0};
  if (name == "distinct") return {classes::DistinctParts{}, 0};
  if (name == "odd") return {classes::OddParts{}, 0};
  const int k = p.need_k();
  if (name == "minpart") return {classes::MinPart{k}, k - 1};
  if (name == "congruent") return {classes::MinPartCongruent{k, p.r, p.s}, k - 1};
  if (name == "exact-small") return {classes::ExactSmall{k, p.m}, k - 1};
  if (name == "guarded") return {classes::ExactSmallGuarded{k, p.m}, k - 1};
  if (name == "first-kind") return {classes::FirstKind{k, p.m}, 0};
  throw UsageError("unknown class \"" + name + "\"");
}

// Composition size addressed by --n (theorem index) or --size (raw size).
inline int composition_size(const ResolvedClass& rc, const Params& p) {
  if (p.size && p.n) throw UsageError("give either --n or --size, not both");
  if (p.size) return *p.size;
  if (!p.n) throw UsageError("one of --n or --size is required");
  return *p.n + rc.size_shift;
}

inline BigInt evaluate_formula(const std::string& name, const Params& p) {
  const int n = p.need_n();
  if (name == "thm1") return thm1_b(n);
  if (name == "thm2") return thm2_b(p.need_k(), n);
  if (name == "munagi") return munagi_a(p.need_k(), n);
  if (name == "thm3") return thm3_b(p.need_k(), n, p.r, p.s);
  if (name == "cor-rs") return cor_rs_indicator(p.k.value_or(p.r - p.s), n, p.r, p.s);
  if (name == "cor-period") return cor_period_b(p.k.value_or(2 * p.r - p.s), n, p.r, p.s);
  if (name == "thm4") return thm4_b(p.need_k(), n, p.m);
  if (name == "thm4a") return thm4_a(p.need_k(), n, p.m);
  if (name == "thm4bar") return thm4bar_b(p.need_k(), n, p.m);
  throw UsageError("unknown formula \"" + name + "\"");
}

inline void print_series(std::ostream& out, const TruncatedSeries& s, const std::string& format) {
  if (format == "csv") {
    out << "power,coefficient\n";
    for (std::size_t i = 0; i <= s.order(); ++i) out << i << ',' << s[i] << '\n';
  } else if (format == "bfile") {
    out << emit_bfile(std::span<const BigInt>(s.coeffs()), 0);
  } else {
    for (std::size_t i = 0; i <= s.order(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
}

inline void print_series(std::ostream& out, const BivariateSeries& s, const std::string& format) {
  if (format == "bfile") throw UsageError("bivariate series have no b-file rendering");
  if (format == "csv") {
    out << "x_power,y_power,coefficient\n";
    for (std::size_t b = 0; b <= s.y_order(); ++b) {
      for (std::size_t a = 0; a <= s.x_order(); ++a) out << a << ',' << b << ',' << s.at(a, b) << '\n';
    }
    return;
  }
  for (std::size_t b = 0; b <= s.y_order(); ++b) {
    out << "y^" << b << ':';
    for (std::size_t a = 0; a <= s.x_order(); ++a) out << ' ' << s.at(a, b);
    out << '\n';
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Even/odd compositions with restricted parts: counting, formulas, series, verification"};
  app.name("evenodd");
  app.require_subcommand(1);

  std::string format = "plain";
  Params p;
  const auto add_format = [&](CLI::App* sub, bool bfile_ok) {
    if (bfile_ok) {
      sub->add_option("--format", format, "plain, csv or bfile")->check(CLI::IsMember({"plain", "csv", "bfile"}));
    } else {
      sub->add_option("--format", format, "plain or csv")->check(CLI::IsMember({"plain", "csv"}));
    }
  };
  const auto add_params = [&](CLI::App* sub) {
    sub->add_option("--k", p.k, "part threshold k >= 1");
    sub->add_option("--r", p.r, "modulus r >= 1");
    sub->add_option("--s", p.s, "offset 0 <= s < r");
    sub->add_option("--m", p.m, "number of distinguished parts m >= 0");
  };

  std::string class_name;
  auto* count = app.add_subcommand("count", "number of compositions in a class");
  auto* signed_cmd = app.add_subcommand("signed", "odd-length, even-length and odd minus even counts");
  for (auto* sub : {count, signed_cmd}) {
    sub->add_option("--class", class_name,
                    "all, minpart, congruent, distinct, odd, exact-small, guarded, first-kind")
        ->required();
    sub->add_option("--n", p.n, "theorem index n (size n+k-1 for minpart/congruent/exact-small/guarded)");
    sub->add_option("--size", p.size, "raw composition size");
    add_params(sub);
    add_format(sub, false);
  }

  std::string formula_name;
  auto* formula = app.add_subcommand("formula", "evaluate a closed formula");
  formula->add_option("name", formula_name, "thm1, thm2, munagi, thm3, cor-rs, cor-period, thm4, thm4a, thm4bar")
      ->required();
  formula->add_option("--n", p.n, "index n >= 1");
  add_params(formula);
  add_format(formula, false);

  std::string series_name;
  int order = 0;
  int y_order = 3;
  std::string num_text;
  std::string den_text;
  auto* series = app.add_subcommand("series", "expand a generating function");
  series->add_option("name", series_name, "thm2, thm3, cor-period, thm4bar, pentagonal, rational")
      ->required();
  series->add_option("--order", order, "truncation order in x")->required()->check(CLI::NonNegativeNumber);
  series->add_option("--y-order", y_order, "truncation order in y (thm4bar)")->check(CLI::NonNegativeNumber);
  series->add_option("--num", num_text, "numerator coefficients c0,c1,...");
  series->add_option("--den", den_text, "denominator coefficients c0,c1,...");
  add_params(series);
  add_format(series, true);

  std::string theorem;
  SweepOptions sweep;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
  verify_cmd->add_option("theorem", theorem)->required()->check(CLI::IsMember(theorem_ids()));
  verify_cmd->add_option("--max-n", sweep.max_n, "upper end of the n range");
  verify_cmd->add_option("--max-k", sweep.max_k, "upper end of the k range");
  verify_cmd->add_option("--max-r", sweep.max_r, "upper end of the r range");
  verify_cmd->add_option("--max-m", sweep.max_m, "upper end of the m range");
  verify_cmd->add_option("--jobs", sweep.jobs, "worker threads")->check(CLI::PositiveNumber);
  add_format(verify_cmd, false);

  std::string seq_name;
  std::optional<long> offset;
  std::optional<long> max_n;
  auto* period = app.add_subcommand("period", "detect the period of a sequence");
  auto* bfile = app.add_subcommand("bfile", "emit or check OEIS b-files");
  std::string bfile_action;
  std::string file_path;
  bfile->add_option("action", bfile_action, "emit or check")->required()->check(CLI::IsMember({"emit", "check"}));
  bfile->add_option("--file", file_path, "b-file path");
  for (auto* sub : {period, bfile}) {
    sub->add_option("--seq", seq_name, "sequence name")->required()->check(CLI::IsMember(sequence_names()));
    sub->add_option("--offset", offset, "first index");
    sub->add_option("--max-n", max_n, "last index");
    add_params(sub);
  }
  add_format(period, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (count->parsed() || signed_cmd->parsed()) {
      const auto rc = detail::resolve_class(class_name, p);
      const int size = detail::composition_size(rc, p);
      if (count->parsed()) {
        const BigInt c = count_compositions(size, rc.cls);
        if (format == "csv") {
          out << "class,size,count\n\"" << describe(rc.cls) << "\"," << size << ',' << c << '\n';
        } else {
          out << "count=" << c << " size=" << size << '\n';
        }
      } else {
        const SignedCount sc = signed_count(size, rc.cls);
        if (format == "csv") {
          out << "class,size,odd,even,diff\n\"" << describe(rc.cls) << "\"," << size << ','
              << sc.odd_count() << ',' << sc.even_count() << ',' << sc.diff() << '\n';
        } else {
          out << "odd=" << sc.odd_count() << " even=" << sc.even_count() << " diff=" << sc.diff()
              << " size=" << size << '\n';
        }
      }
      return kExitOk;
    }

    if (formula->parsed()) {
      const BigInt v = detail::evaluate_formula(formula_name, p);
      if (format == "csv") {
        out << "formula,n,value\n" << formula_name << ',' << *p.n << ',' << v << '\n';
      } else {
        out << v << '\n';
      }
      return kExitOk;
    }

    if (series->parsed()) {
      const auto uorder = static_cast<std::size_t>(order);
      if (series_name == "thm2") {
        detail::print_series(out, gf_thm2(p.need_k(), uorder), format);
      } else if (series_name == "thm3") {
        detail::print_series(out, gf_thm3(p.need_k(), p.r, p.s, uorder), format);
      } else if (series_name == "cor-period") {
        detail::print_series(out, gf_cor_period(p.r, uorder), format);
      } else if (series_name == "thm4bar") {
        detail::print_series(out, gf_thm4bar(p.need_k(), uorder, static_cast<std::size_t>(y_order)), format);
      } else if (series_name == "pentagonal") {
        detail::print_series(out, pentagonal_product(uorder), format);
      } else if (series_name == "rational") {
        if (num_text.empty() || den_text.empty()) throw UsageError("rational needs --num and --den");
        detail::print_series(out,
                             expand_rational(IntPolynomial::parse(num_text), IntPolynomial::parse(den_text), uorder),
                             format);
      } else {
        throw UsageError("unknown series \"" + series_name + "\"");
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const VerificationReport report = verify(theorem, sweep);
      out << (format == "csv" ? report.render_csv() : report.render_plain());
      return report.pass ? kExitOk : kExitFailure;
    }

    if (period->parsed()) {
      const NamedSequence seq = named_sequence(seq_name, SequenceParams{p.k.value_or(2), p.r, p.s, p.m});
      if (!max_n) throw UsageError("--max-n is required");
      const long first = offset.value_or(seq.min_index);
      const IntegerSequence values = seq.generate(first, *max_n);
      if (values.empty()) throw UsageError("empty window");
      const auto found = detect_period(values);
      if (format == "csv") {
        out << "sequence,first,last,preperiod,period\n"
            << seq_name << ',' << first << ',' << *max_n << ',';
        if (found) {
          out << found->preperiod << ',' << found->period << '\n';
        } else {
          out << ",\n";
        }
      } else if (found) {
        out << "preperiod=" << found->preperiod << " period=" << found->period << " window=" << first
            << ".." << *max_n << '\n';
      } else {
        out << "aperiodic within window " << first << ".." << *max_n << '\n';
      }
      return kExitOk;
    }

    if (bfile->parsed()) {
      const NamedSequence seq = named_sequence(seq_name, SequenceParams{p.k.value_or(2), p.r, p.s, p.m});
      if (bfile_action == "emit") {
        if (!max_n) throw UsageError("--max-n is required for emit");
        const std::string text = emit_bfile(seq.generate(offset.value_or(seq.min_index), *max_n));
        if (file_path.empty()) {
          out << text;
        } else {
          std::ofstream file(file_path, std::ios::binary);
          if (!file) throw std::runtime_error("cannot write " + file_path);
          file << text;
        }
        return kExitOk;
      }
      if (file_path.empty()) throw UsageError("check needs --file");
      const BFileRecord record = load_bfile(file_path);
      if (record.empty()) throw UsageError("b-file " + file_path + " has no entries");
      const long first = std::max(offset.value_or(record.first_index()), seq.min_index);
      const long last = std::min(max_n.value_or(record.last_index()), record.last_index());
      if (first > last) throw UsageError("no overlap between the sequence and the b-file");
      const MatchReport rep = compare(seq.generate(first, last), record);
      if (rep.matched()) {
        out << "match: indices " << rep.first_index << ".." << rep.last_index << '\n';
        return kExitOk;
      }
      out << "mismatch at index " << *rep.mismatch_index << ": b-file=" << rep.expected
          << " computed=" << rep.actual << '\n';
      return kExitFailure;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace evenodd::cli

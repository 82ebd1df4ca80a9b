#pragma once

// Offset-indexed integer sequences: period detection, OEIS b-file reading and
// writing, and comparison against a b-file.

#include <cstddef>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace evenodd {

struct PeriodDescriptor {
  std::size_t preperiod = 0;
  std::size_t period = 1;

  friend bool operator==(const PeriodDescriptor&, const PeriodDescriptor&) = default;
};

// True when values[i] == values[i + period] for every i >= preperiod inside
// the window.
inline bool fits_period(std::span<const BigInt> values, PeriodDescriptor d) {
  if (d.period == 0) return false;
  for (std::size_t i = d.preperiod; i + d.period < values.size(); ++i) {
    if (values[i] != values[i + d.period]) return false;
  }
  return true;
}

class IntegerSequence {
 public:
  IntegerSequence(long offset, std::vector<BigInt> values,
                  std::optional<PeriodDescriptor> period = std::nullopt)
      : offset_(offset), values_(std::move(values)), period_(period) {
    if (period_ && !fits_period(values_, *period_)) {
      throw std::invalid_argument("period descriptor (preperiod " +
                                  std::to_string(period_->preperiod) + ", period " +
                                  std::to_string(period_->period) + ") does not fit the values");
    }
  }

  long offset() const { return offset_; }
  long last_index() const { return offset_ + static_cast<long>(values_.size()) - 1; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<BigInt>& values() const { return values_; }
  const BigInt& at(long index) const {
    if (index < offset_ || index > last_index()) {
      throw std::out_of_range("index " + std::to_string(index) + " outside the sequence");
    }
    return values_[static_cast<std::size_t>(index - offset_)];
  }
  const std::optional<PeriodDescriptor>& period() const { return period_; }

  friend bool operator==(const IntegerSequence&, const IntegerSequence&) = default;

 private:
  long offset_;
  std::vector<BigInt> values_;
  std::optional<PeriodDescriptor> period_;
};

// Smallest period p <= len/2 whose periodic tail starts no later than the
// middle of the window and spans at least two full periods; the reported
// preperiod is the earliest start for that p. nullopt means aperiodic within
// the window.
inline std::optional<PeriodDescriptor> detect_period(std::span<const BigInt> values) {
  if (values.empty()) throw std::invalid_argument("period detection needs a nonempty sequence");
  const std::size_t len = values.size();
  for (std::size_t p = 1; p <= len / 2; ++p) {
    std::size_t start = 0;
    for (std::size_t i = len - p; i-- > 0;) {
      if (values[i] != values[i + p]) {
        start = i + 1;
        break;
      }
    }
    if (start <= len / 2 && len - start >= 2 * p) return PeriodDescriptor{start, p};
  }
  return std::nullopt;
}

inline std::optional<PeriodDescriptor> detect_period(const IntegerSequence& seq) {
  return detect_period(std::span<const BigInt>(seq.values()));
}

struct BFileEntry {
  long index = 0;
  BigInt value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

struct BFileRecord {
  std::vector<BFileEntry> entries;

  bool empty() const { return entries.empty(); }
  long first_index() const { return entries.front().index; }
  long last_index() const { return entries.back().index; }

  IntegerSequence to_sequence() const {
    std::vector<BigInt> values;
    values.reserve(entries.size());
    for (const auto& e : entries) values.push_back(e.value);
    return IntegerSequence(entries.empty() ? 0 : first_index(), std::move(values));
  }

  friend bool operator==(const BFileRecord&, const BFileRecord&) = default;
};

class BFileError : public std::runtime_error {
 public:
  BFileError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline bool is_integer_token(std::string_view t) {
  const std::size_t first = (!t.empty() && t[0] == '-') ? 1 : 0;
  if (first == t.size()) return false;
  return t.find_first_not_of("0123456789", first) == std::string_view::npos;
}

}  // namespace detail

// Lines hold "index value"; '#' lines are comments and blank lines are
// skipped. Indices must increase by exactly one.
inline BFileRecord parse_bfile(std::string_view text) {
  BFileRecord out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::istringstream fields(line);
    std::string index_tok;
    if (!(fields >> index_tok)) continue;
    if (index_tok[0] == '#') continue;
    std::string value_tok;
    std::string extra;
    if (!(fields >> value_tok) || (fields >> extra)) {
      throw BFileError(line_no, "expected \"index value\", got \"" + line + "\"");
    }
    if (!detail::is_integer_token(index_tok) || !detail::is_integer_token(value_tok)) {
      throw BFileError(line_no, "non-integer field in \"" + line + "\"");
    }
    const long index = std::stol(index_tok);
    if (!out.entries.empty() && index != out.entries.back().index + 1) {
      throw BFileError(line_no, "index " + std::to_string(index) + " does not follow " +
                                    std::to_string(out.entries.back().index));
    }
    out.entries.push_back({index, BigInt(value_tok)});
  }
  return out;
}

inline BFileRecord load_bfile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open b-file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bfile(buf.str());
}

// One "index value" line per term, LF endings, indices consecutive from offset.
inline std::string emit_bfile(std::span<const BigInt> values, long offset) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(offset + static_cast<long>(i));
    out += ' ';
    out += values[i].str();
    out += '\n';
  }
  return out;
}

inline std::string emit_bfile(const IntegerSequence& seq) {
  return emit_bfile(std::span<const BigInt>(seq.values()), seq.offset());
}

struct MatchReport {
  long first_index = 0;  // overlap compared
  long last_index = 0;
  std::optional<long> mismatch_index;
  BigInt expected;  // b-file value at the mismatch
  BigInt actual;    // sequence value at the mismatch

  bool matched() const { return !mismatch_index.has_value(); }
};

// Compares over the overlapping index range and reports the first mismatch.
inline MatchReport compare(const IntegerSequence& seq, const BFileRecord& bfile) {
  if (seq.empty() || bfile.empty()) throw std::invalid_argument("nothing to compare: empty input");
  MatchReport report;
  report.first_index = std::max(seq.offset(), bfile.first_index());
  report.last_index = std::min(seq.last_index(), bfile.last_index());
  if (report.first_index > report.last_index) {
    throw std::invalid_argument("sequence indices " + std::to_string(seq.offset()) + ".." +
                                std::to_string(seq.last_index()) + " do not overlap b-file indices " +
                                std::to_string(bfile.first_index()) + ".." +
                                std::to_string(bfile.last_index()));
  }
  for (long i = report.first_index; i <= report.last_index; ++i) {
    const BigInt& want = bfile.entries[static_cast<std::size_t>(i - bfile.first_index())].value;
    const BigInt& got = seq.at(i);
    if (want != got) {
      report.mismatch_index = i;
      report.expected = want;
      report.actual = got;
      break;
    }
  }
  return report;
}

}  // namespace evenodd

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include <evenodd/composition.hpp>

#include "oracle.hpp"

using namespace evenodd;
namespace cl = evenodd::classes;

namespace {

std::vector<oracle::Parts> as_parts(const std::vector<Composition>& cs) {
  std::vector<oracle::Parts> out;
  for (const auto& c : cs) out.emplace_back(c.parts().begin(), c.parts().end());
  return out;
}

// Library enumeration must equal the oracle's filtered set, element for element.
void expect_same_set(int n, const CompositionClass& cls, const oracle::Pred& pred) {
  auto got = as_parts(enumerate_compositions(n, cls));
  auto want = oracle::comp_filter(n, pred);
  std::sort(want.begin(), want.end());
  ASSERT_TRUE(std::is_sorted(got.begin(), got.end())) << describe(cls) << " n=" << n;
  EXPECT_EQ(got, want) << describe(cls) << " n=" << n;
}

}  // namespace

TEST(Composition, RejectsNonPositiveParts) {
  EXPECT_THROW(Composition({2, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Composition({-1}), std::invalid_argument);
  const Composition c{3, 1, 2};
  EXPECT_EQ(c.size(), 6);
  EXPECT_EQ(c.length(), 3u);
  EXPECT_TRUE(c.odd_length());
  EXPECT_EQ(to_string(c), "(3,1,2)");
  EXPECT_EQ(to_string(Composition{}), "()");
}

TEST(Enumerate, AllOfFourHasEight) {
  EXPECT_EQ(enumerate_compositions(4, cl::All{}).size(), 8u);
}

TEST(Enumerate, MinPartTwoOfFive) {
  const std::vector<Composition> want{{2, 3}, {3, 2}, {5}};
  EXPECT_EQ(enumerate_compositions(5, cl::MinPart{2}), want);
}

TEST(Enumerate, EmptyCompositionOfZero) {
  const auto all = enumerate_compositions(0, cl::All{});
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].length(), 0u);
  // Every class without marked parts contains the empty composition.
  EXPECT_EQ(count_compositions(0, cl::MinPart{3}), 1);
  EXPECT_EQ(count_compositions(0, cl::DistinctParts{}), 1);
  EXPECT_EQ(count_compositions(0, cl::ExactSmall{2, 0}), 1);
  EXPECT_EQ(count_compositions(0, cl::ExactSmall{2, 1}), 0);
  EXPECT_EQ(count_compositions(0, cl::ExactSmallGuarded{2, 1}), 0);
}

TEST(Enumerate, DistinctPartsOfSix) {
  const auto got = enumerate_compositions(6, cl::DistinctParts{});
  EXPECT_EQ(got.size(), 11u);
  EXPECT_EQ(std::count_if(got.begin(), got.end(), [](const Composition& c) { return c.length() == 3; }), 6);
}

TEST(Enumerate, RejectsBadParameters) {
  EXPECT_THROW(enumerate_compositions(5, cl::MinPartCongruent{2, 3, 3}), std::invalid_argument);
  EXPECT_THROW(enumerate_compositions(5, cl::MinPartCongruent{2, 0, 0}), std::invalid_argument);
  EXPECT_THROW(enumerate_compositions(5, cl::MinPart{0}), std::invalid_argument);
  EXPECT_THROW(enumerate_compositions(5, cl::ExactSmall{2, -1}), std::invalid_argument);
  EXPECT_THROW(enumerate_compositions(-1, cl::All{}), std::invalid_argument);
}

TEST(Enumerate, MatchesOracleForEveryClass) {
  for (int n = 0; n <= 12; ++n) {
    expect_same_set(n, cl::All{}, oracle::any());
    expect_same_set(n, cl::DistinctParts{}, oracle::distinct());
    expect_same_set(n, cl::OddParts{}, oracle::odd_parts());
    for (int k = 1; k <= 4; ++k) {
      expect_same_set(n, cl::MinPart{k}, oracle::min_part(k));
      for (int r = 1; r <= 3; ++r) {
        for (int s = 0; s < r; ++s) expect_same_set(n, cl::MinPartCongruent{k, r, s}, oracle::congruent(k, r, s));
      }
      for (int m = 0; m <= 3; ++m) {
        expect_same_set(n, cl::ExactSmall{k, m}, oracle::exact_small(k, m));
        expect_same_set(n, cl::ExactSmallGuarded{k, m}, oracle::guarded(k, m));
        expect_same_set(n, cl::FirstKind{k, m}, oracle::first_kind(k, m));
      }
    }
  }
}

TEST(Enumerate, AdmitsAgreesWithGeneration) {
  const std::vector<CompositionClass> classes{cl::MinPart{2}, cl::ExactSmallGuarded{3, 2},
                                              cl::FirstKind{3, 1}, cl::MinPartCongruent{2, 3, 1}};
  for (const auto& cls : classes) {
    for (int n = 0; n <= 11; ++n) {
      const auto members = enumerate_compositions(n, cls);
      const std::set<Composition> in(members.begin(), members.end());
      for (const auto& parts : oracle::compositions(n)) {
        EXPECT_EQ(admits(cls, std::span<const int>(parts)), in.count(Composition(parts)) == 1)
            << describe(cls) << ' ' << to_string(std::span<const int>(parts));
      }
    }
  }
}

TEST(Signed, MinPartTwoOfFive) {
  const auto sc = signed_count(5, cl::MinPart{2});
  EXPECT_EQ(sc.odd_count(), 1);
  EXPECT_EQ(sc.even_count(), 2);
  EXPECT_EQ(sc.diff(), -1);
}

TEST(Signed, EmptyCompositionIsEven) {
  const auto sc = signed_count(0, cl::All{});
  EXPECT_EQ(sc.odd_count(), 0);
  EXPECT_EQ(sc.even_count(), 1);
  EXPECT_EQ(sc.diff(), -1);
  EXPECT_EQ(sc.even_minus_odd(), 1);
}

TEST(Signed, MinPartThreeOfEight) {
  const auto sc = signed_count(8, cl::MinPart{3});
  EXPECT_EQ(sc.odd_count(), 1);
  EXPECT_EQ(sc.even_count(), 3);
  EXPECT_EQ(sc.diff(), -2);
}

TEST(Signed, DistinctQuotedValues) {
  EXPECT_EQ(signed_count_distinct(0).even_minus_odd(), 1);
  EXPECT_EQ(signed_count_distinct(5).even_minus_odd(), 3);
  EXPECT_EQ(signed_count_distinct(6).even_minus_odd(), -3);
}

TEST(Signed, MatchesOracleTallies) {
  for (int n = 0; n <= 14; ++n) {
    for (int k = 1; k <= 4; ++k) {
      const auto t = oracle::comp_tally(n, oracle::min_part(k));
      const auto sc = signed_count(n, cl::MinPart{k});
      EXPECT_EQ(sc.odd_count(), t.odd);
      EXPECT_EQ(sc.even_count(), t.even);
      EXPECT_EQ(sc.total(), count_compositions(n, cl::MinPart{k}));
    }
    const auto d = oracle::comp_tally(n, oracle::distinct());
    EXPECT_EQ(signed_count_distinct(n).even_minus_odd(), d.even_minus_odd()) << n;
  }
}

TEST(Describe, NamesParameters) {
  EXPECT_EQ(describe(cl::MinPartCongruent{4, 2, 0}), "congruent(k=4,r=2,s=0)");
  EXPECT_EQ(describe(cl::ExactSmallGuarded{2, 1}), "guarded(k=2,m=1)");
}

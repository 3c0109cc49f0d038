#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "thickmix/error.hpp"
#include "thickmix/random.hpp"
#include "thickmix/zsets.hpp"

using namespace thickmix;
using namespace thickmix::zsets;

namespace {

std::set<std::int64_t> as_set(const ZSet& s) {
  std::set<std::int64_t> out;
  for (const auto& x : s.elements()) out.insert(to_i64(x));
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(ZSet, NormalizesAndChecksRange) {
  ZSet s(Interval{-5, 5}, ints({3, -2, 3, 0}));
  EXPECT_EQ(s.elements(), ints({-2, 0, 3}));
  EXPECT_TRUE(s.contains(0));
  EXPECT_FALSE(s.contains(1));
  EXPECT_THROW(ZSet(Interval{0, 2}, ints({3})), Error);
}

TEST(ZSet, ShiftAndClip) {
  ZSet s(Interval{-5, 5}, ints({-5, 0, 5}), Interval{-2, 2});
  const ZSet t = s.shifted(10);
  EXPECT_EQ(t.range(), (Interval{5, 15}));
  EXPECT_EQ(t.certified(), (Interval{8, 12}));
  EXPECT_EQ(t.elements(), ints({5, 10, 15}));
  const ZSet c = s.clipped(Interval{0, 100});
  EXPECT_EQ(c.elements(), ints({0, 5}));
  EXPECT_EQ(c.certified(), (Interval{0, 2}));
}

TEST(ZSet, CompareOutsideCertifiedRangeIsAnError) {
  ZSet a(Interval{-10, 10}, {}, Interval{-3, 3});
  ZSet b(Interval{-10, 10});
  EXPECT_NO_THROW(compare_on(a, b, Interval{-3, 3}));
  try {
    compare_on(a, b, Interval{-4, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::uncertified_compare);
  }
}

TEST(HSet, Values) {
  EXPECT_EQ(h_set(1).elements(), ints({-9, -5, -4, 0, 4, 5, 9}));
  EXPECT_EQ(h_set(2).elements(), ints({-27, -14, -13, 0, 13, 14, 27}));
  for (unsigned m = 1; m <= 6; ++m) EXPECT_EQ(as_set(h_set(m)), oracle::naive_h_set(m)) << m;
}

TEST(HSet, Symmetric) {
  for (unsigned m = 1; m <= 8; ++m) {
    const ZSet h = h_set(m);
    EXPECT_EQ(h.size(), 7u);
    for (const auto& x : h.elements()) EXPECT_TRUE(h.contains(-x));
  }
}

TEST(Minkowski, AgreesWithNaiveSumset) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<std::int64_t> a, b;
    std::vector<Integer> va, vb;
    for (int i = 0; i < 8; ++i) {
      a.insert(rng.between(-20, 20));
      b.insert(rng.between(-20, 20));
    }
    for (auto x : a) va.emplace_back(x);
    for (auto x : b) vb.emplace_back(x);
    const auto s = minkowski_sum(ZSet(Interval{-20, 20}, va), ZSet(Interval{-20, 20}, vb),
                                 Interval{-40, 40});
    EXPECT_FALSE(s.possibly_incomplete);
    EXPECT_EQ(as_set(s.set), oracle::naive_sumset(a, b));
  }
}

TEST(Minkowski, FlagsIncompleteRange) {
  const auto s = minkowski_sum(ZSet(Interval{0, 2}, ints({0, 1})), ZSet(Interval{0, 2}, ints({0})),
                               Interval{-5, 5});
  EXPECT_TRUE(s.possibly_incomplete);
  EXPECT_TRUE(s.set.certified().empty());
}

TEST(TruncatedSum, EmptySumIsZero) {
  const ZSet s = truncated_h_sum(3, 3, Interval{-100, 100});
  EXPECT_EQ(s.elements(), ints({0}));
}

TEST(TruncatedSum, AgreesWithNaiveIteratedSum) {
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned K = k; K <= k + 4; ++K) {
      std::set<std::int64_t> naive{0};
      for (unsigned i = k; i < K; ++i) naive = oracle::naive_sumset(naive, oracle::naive_h_set(i));
      const std::int64_t span = *naive.rbegin();
      const ZSet s = truncated_h_sum(k, K, Interval::symmetric(span));
      EXPECT_EQ(as_set(s), naive) << k << " " << K;
      // Clipping before summing loses nothing inside the requested range.
      const ZSet part = truncated_h_sum(k, K, Interval{span / 3, span / 2});
      std::set<std::int64_t> expect;
      for (auto x : naive)
        if (x >= span / 3 && x <= span / 2) expect.insert(x);
      EXPECT_EQ(as_set(part), expect);
    }
}

TEST(TruncatedSum, CertifiedRadiusIsStableUnderMoreLevels) {
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned K = k; K <= 7; ++K) {
      const Interval r = Interval::symmetric(h_sum_certified_radius(k, K));
      const ZSet a = truncated_h_sum(k, K, r);
      const ZSet b = truncated_h_sum(k, K + 3, r);
      EXPECT_TRUE(compare_on(a, b, r).equal()) << k << " " << K;
    }
}

TEST(TruncatedSum, LevelOrder) {
  EXPECT_THROW(truncated_h_sum(3, 2, Interval{0, 1}), Error);
}

TEST(TruncatedSum, LargeLevelsUseBigIntegers) {
  const Interval r{pow3(45), pow3(45) + 1000};
  const ZSet s = truncated_h_sum(40, 44, r);
  for (const auto& x : s.elements()) EXPECT_TRUE(r.contains(x));
}

TEST(IntervalRun, SingleRunOfLengthM) {
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned m = 2; m <= 7; ++m) {
      const auto st = interval_stats(interval_run(k, m));
      ASSERT_EQ(st.runs.size(), 1u);
      EXPECT_EQ(st.max_run_length, m);
    }
}

TEST(IntervalRun, StartsAtSumOfLengths) {
  EXPECT_EQ(interval_run(1, 2).elements(), ints({4, 5}));
  EXPECT_EQ(interval_run(1, 3).elements(), ints({17, 18, 19}));
  EXPECT_EQ(interval_run(2, 3).elements().front(), Integer(13 + 40));
}

TEST(IntervalRun, InsideTruncatedSum) {
  for (unsigned m = 2; m <= 6; ++m) {
    const ZSet run = interval_run(1, m);
    const ZSet sum = truncated_h_sum(1, m, run.range());
    for (const auto& x : run.elements()) EXPECT_TRUE(sum.contains(x));
  }
}

TEST(IntervalStats, Runs) {
  const auto st = interval_stats(ZSet(Interval{0, 20}, ints({1, 2, 3, 7, 9, 10})));
  ASSERT_EQ(st.runs.size(), 3u);
  EXPECT_EQ(st.runs[0], (zsets::Run{1, 3}));
  EXPECT_EQ(st.runs[2], (zsets::Run{9, 2}));
  EXPECT_EQ(st.max_run_length, 3u);
}

TEST(ThickWitness, SmallestAbsoluteValuePositiveFirst) {
  const ZSet s(Interval{-10, 10}, ints({-6, -5, -4, 4, 5, 6}));
  const std::vector<Integer> shifts{1};
  const auto t = thick_witness(s, shifts);
  ASSERT_TRUE(t.witness);
  EXPECT_EQ(*t.witness, -4);
  const std::vector<Integer> far{3};
  EXPECT_FALSE(thick_witness(s, far).witness);
}

TEST(ThickWitness, FiniteSetsFailForLongShiftFamilies) {
  const ZSet s(Interval{-50, 50}, ints({-3, 0, 7, 8, 20}));
  std::vector<Integer> shifts;
  for (int i = 0; i <= 6; ++i) shifts.emplace_back(i);
  EXPECT_FALSE(thick_witness(s, shifts).witness);
}

TEST(GapElement, Values) {
  EXPECT_EQ(gap_element(1), 3);
  EXPECT_EQ(gap_element(2), 12);
  EXPECT_EQ(gap_element(3), 39);
  EXPECT_EQ(gap_element(4), 120);
}

TEST(GapElement, OutsideEveryTruncation) {
  for (unsigned m = 1; m <= 4; ++m) {
    const Integer g = gap_element(m);
    EXPECT_FALSE(truncated_h_sum(1, 8, Interval{g, g}).contains(g));
  }
}

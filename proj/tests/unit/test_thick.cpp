#include <gtest/gtest.h>

#include "thickmix/error.hpp"
#include "thickmix/returnsets.hpp"

using namespace thickmix;
using namespace thickmix::returnsets;
using zsets::Interval;
using zsets::ZSet;

TEST(Gamma, Enumeration) {
  const std::vector<long> expected{0, 1, -1, 2, -2, 3, -3};
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(gamma_at(i), expected[i]);
}

TEST(Basis, OrderAndNonemptiness) {
  std::vector<std::string> got;
  for (const auto& b : cylinder_basis(3, 5)) got.push_back(b.letters());
  const std::vector<std::string> expected{"0",   "1",   "00",  "01",  "10",
                                          "000", "001", "010", "100", "101"};
  EXPECT_EQ(got, expected);
}

TEST(ThickChacon, SingleLevel) {
  const auto c = build_thick_n_chacon(1, 4);
  ASSERT_EQ(c.pieces.size(), 1u);
  EXPECT_EQ(c.pieces[0].elements.size(), 1u);
  const Integer x = c.pieces[0].elements.elements()[0];
  EXPECT_TRUE(script_m_membership(x, 1, 4, c).member);
}

TEST(ThickChacon, ThreeLevelsAtDepthSix) {
  const auto c = build_thick_n_chacon(3, 6);
  ASSERT_EQ(c.pieces.size(), 3u);
  for (unsigned i = 1; i <= 3; ++i) {
    const auto& p = c.pieces[i - 1];
    EXPECT_EQ(p.level, i);
    EXPECT_EQ(zsets::interval_stats(p.elements).max_run_length, i);
    // Nested: every element of piece i is in M_{i'} for i' <= i.
    for (unsigned lv = 1; lv <= i; ++lv)
      for (const auto& x : p.elements.elements()) {
        const auto m = script_m_membership(x, lv, 6, c);
        EXPECT_TRUE(m.member) << "piece " << i << " level " << lv;
        EXPECT_NE(m.how, Evidence::undecided);
      }
  }
  EXPECT_EQ(c.pieces[0].source, PieceSource::certified_search);
  EXPECT_EQ(c.pieces[0].run.start, 61);
  EXPECT_GE(zsets::interval_stats(c.union_set).max_run_length, 3u);
  EXPECT_TRUE(c.overlaps.empty());
  EXPECT_EQ(c.union_set.size(), 6u);
}

TEST(ThickChacon, ClosedFormPiecesSitInTheirRuns) {
  const auto c = build_thick_n_chacon(3, 6);
  for (const auto& p : c.pieces) {
    if (p.source != PieceSource::closed_form_run) continue;
    ASSERT_TRUE(p.container);
    const Integer l = chacon_length(p.level);
    EXPECT_EQ(p.container->length, 2 * static_cast<std::uint64_t>(words::block_length(p.level)) + p.level);
    EXPECT_EQ(p.run.start, p.container->start + l);
    // The container is exactly interval_run(level, length).
    const ZSet run = zsets::interval_run(p.level, static_cast<unsigned>(p.container->length));
    EXPECT_EQ(run.elements().front(), p.container->start);
  }
}

TEST(ThickChacon, MixingDefectWithinBound) {
  const auto c = build_thick_n_chacon(3, 6);
  const auto d = mixing_defect(c, 1);
  EXPECT_LE(d.outside.size(), 3u);
  EXPECT_EQ(d.undecided, 0u);
  EXPECT_EQ(d.brute_checked + d.certified, c.union_set.size());
}

TEST(ThickChacon, Preconditions) {
  EXPECT_THROW(build_thick_n_chacon(0, 4), Error);
  EXPECT_THROW(build_thick_n_chacon(3, 4), Error);
}

TEST(ThickGeneric, FirstLevel) {
  const auto g = build_thick_n_generic(1, 1, 4);
  ASSERT_EQ(g.pieces.size(), 1u);
  const auto& p = g.pieces[0];
  ASSERT_TRUE(p.delta);
  EXPECT_EQ(*p.delta, 0);
  EXPECT_EQ(p.elements.elements(), (std::vector<Integer>{*p.delta - 1, *p.delta}));
  EXPECT_EQ(g.basis[0].letters(), "0");
}

TEST(ThickGeneric, DeltaSolvesThicknessEquation) {
  const unsigned K = 6, depth = 3, m_max = 4;
  const auto g = build_thick_n_generic(depth, m_max, K);
  const Interval range = Interval::symmetric(window_reach(K) - depth);
  for (const auto& p : g.pieces) {
    std::vector<Integer> shifts(p.gammas.begin() + 1, p.gammas.end());
    const auto tw = zsets::thick_witness(p.elements, shifts);
    ASSERT_TRUE(tw.witness);
    EXPECT_EQ(*tw.witness, *p.delta);
  }
  // Pieces from level n on lie in every N(U_i, U_j), i, j <= n.
  for (std::size_t i = 0; i < m_max; ++i)
    for (std::size_t j = 0; j < m_max; ++j) {
      const ZSet n = return_set_bruteforce({g.basis[i], 0}, {g.basis[j], 0}, K, range).set;
      for (const auto& p : g.pieces)
        if (p.level > std::max(i, j))
          for (const auto& x : p.elements.elements()) EXPECT_TRUE(n.contains(x));
    }
}

TEST(ThickGeneric, DeltaIsMinimal) {
  const unsigned K = 6;
  const auto g = build_thick_n_generic(2, 3, K);
  const Interval range = Interval::symmetric(window_reach(K) - 2);
  for (const auto& p : g.pieces) {
    ZSet mm(range);
    bool first = true;
    for (std::size_t i = 0; i < p.level; ++i)
      for (std::size_t j = 0; j < p.level; ++j) {
        const ZSet n = return_set_bruteforce({g.basis[i], 0}, {g.basis[j], 0}, K, range).set;
        mm = first ? n : zsets::intersect(mm, n);
        first = false;
      }
    // No candidate of smaller |x| works.
    for (const auto& x : mm.elements()) {
      if (abs(x) >= abs(*p.delta)) continue;
      bool all = true;
      for (std::size_t i = 1; i < p.gammas.size(); ++i) all = all && mm.contains(x - p.gammas[i]);
      EXPECT_FALSE(all) << x;
    }
  }
}

TEST(ThickGeneric, TooManyLevels) {
  EXPECT_THROW(build_thick_n_generic(1, 3, 4), Error);
}

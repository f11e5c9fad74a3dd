#include <gtest/gtest.h>

#include <sstream>

#include "dedekind/diophantine.hpp"
#include "oracles.hpp"

using namespace dedekind;

TEST(Dirichlet, Examples) {
  EXPECT_EQ(dirichlet_approx(Rational::of(1, 2), Rational(3)), (Approximant{1, 2}));
  EXPECT_EQ(dirichlet_approx(Rational::of(5, 7), Rational(2)), (Approximant{1, 1}));
  EXPECT_EQ(dirichlet_approx(Rational(0), Rational(2)), (Approximant{0, 1}));
  EXPECT_THROW(dirichlet_approx(Rational::of(1, 2), Rational(1)), precondition_error);
  EXPECT_THROW(dirichlet_approx(Rational::of(3, 2), Rational(5)), precondition_error);
}

TEST(Dirichlet, ExactWhenQAtLeastDenominator) {
  for (std::int64_t k = 2; k <= 60; ++k) {
    for (std::int64_t h = 0; h <= k; ++h) {
      if (gcd(h, k) != 1) continue;
      for (std::int64_t Q : {k, k + 1, 3 * k}) {
        ASSERT_EQ(dirichlet_approx(Rational::of(h, k), Rational(Q)), (Approximant{h, k}));
        ASSERT_EQ(dirichlet_approx_convergents(Rational::of(h, k), Rational(Q)), (Approximant{h, k}));
      }
    }
  }
}

TEST(Dirichlet, RoutesAgreeWithBruteForce) {
  for (std::int64_t k = 1; k <= 200; ++k) {
    for (std::int64_t h = 0; h <= k; ++h) {
      if (gcd(h, k) != 1) continue;
      const Rational alpha = Rational::of(h, k);
      for (std::int64_t Q = 2; Q <= 50; ++Q) {
        const Approximant ex = dirichlet_approx_exhaustive(alpha, Rational(Q));
        ASSERT_EQ(dirichlet_approx_convergents(alpha, Rational(Q)), ex) << alpha << " Q=" << Q;
        if (k <= 40) ASSERT_EQ(oracle::dirichlet(alpha, Q), ex) << alpha << " Q=" << Q;
        // Posted inequality, exactly.
        ASSERT_LT((alpha - Rational::of(ex.a, ex.q)).abs() * Rational(ex.q * Q), Rational(1));
        ASSERT_LE(ex.q, Q);
      }
      // A non-integer Q as well.
      const Rational Q = Rational::of(37, 3);
      ASSERT_EQ(dirichlet_approx_convergents(alpha, Q), dirichlet_approx_exhaustive(alpha, Q));
    }
  }
}

TEST(Dirichlet, LargeQUsesConvergents) {
  const Rational alpha = Rational::of(355, 1131);
  const Approximant r = dirichlet_approx(alpha, Rational(1000));
  EXPECT_EQ(r, dirichlet_approx_exhaustive(alpha, Rational(1000)));
  EXPECT_LT((alpha - Rational::of(r.a, r.q)).abs() * Rational(r.q * 1000), Rational(1));
}

TEST(Approx, EpsAndMainTerm) {
  EXPECT_EQ(approx_eps(1, 7, 0, 1), 1);
  EXPECT_EQ(approx_eps(3, 7, 1, 2), -1);
  EXPECT_EQ(approx_eps(3, 7, 3, 7), 0);
  EXPECT_EQ(lemma_main_term(11, 3, 0), Rational(0));
  EXPECT_EQ(lemma_main_term(7, 2, -1), Rational::of(-7, 24));
  EXPECT_EQ(lemma_main_term(97, 1, 1), Rational::of(97, 12));
}

TEST(Approx, ErrorExamples) {
  EXPECT_EQ(approx_error(3, 7, 3, 7), dedekind_fast(3, 7));
  EXPECT_EQ(approx_error(3, 7, 1, 2), Rational::of(37, 168));
  for (std::int64_t k = 2; k <= 300; ++k) EXPECT_EQ(approx_error(1, k, 0, 1), Rational::of(-(3 * k - 2), 12 * k));
  EXPECT_THROW(approx_error(3, 7, 2, 3), precondition_error);  // |eps| = 5 > 7/3
  EXPECT_THROW(approx_error(2, 4, 1, 2), precondition_error);
  EXPECT_THROW(approx_error(3, 7, 2, 4), precondition_error);
}

TEST(Approx, BoundCheckExamples) {
  EXPECT_TRUE(lemma8_bound_check(3, 7, 1, 2, Rational(1)));
  EXPECT_TRUE(lemma8_bound_check(5, 11, 5, 11, Rational(1)));
  EXPECT_EQ(approx_bound_ratio(3, 7, 1, 2), Rational::of(37, 336));
  EXPECT_FALSE(lemma8_bound_check(3, 7, 1, 2, Rational::of(1, 10)));
}

TEST(Dissection, Parameter) {
  EXPECT_EQ(dissection_parameter(1), 2);
  EXPECT_EQ(dissection_parameter(32), 8);   // 32^(3/5) = 8 exactly
  EXPECT_EQ(dissection_parameter(31), 7);
  EXPECT_EQ(dissection_parameter(100000), 1000);
  EXPECT_EQ(dissection_parameter(99999), 999);
  for (std::int64_t k = 1; k <= 20000; ++k) {
    const auto q = static_cast<int128>(dissection_parameter(k));
    const int128 cube = static_cast<int128>(k) * k * k;
    if (q > 2) ASSERT_LE(q * q * q * q * q, cube);
    ASSERT_GT((q + 1) * (q + 1) * (q + 1) * (q + 1) * (q + 1), cube);
  }
}

TEST(Dissection, SmallFamilies) {
  const Dissection d2 = build_dissection(2);
  ASSERT_EQ(d2.intervals.size(), 3u);
  EXPECT_EQ(d2.intervals[0].center(), Rational(0));
  EXPECT_EQ(d2.intervals[1].center(), Rational::of(1, 2));
  EXPECT_EQ(d2.intervals[2].center(), Rational(1));
  EXPECT_EQ(d2.intervals[1].lo, Rational::of(1, 4));
  EXPECT_EQ(d2.intervals[1].hi, Rational::of(3, 4));
  const Dissection d3 = build_dissection(3);
  ASSERT_EQ(d3.intervals.size(), 5u);
  EXPECT_EQ(d3.intervals[1].center(), Rational::of(1, 3));
  EXPECT_EQ(d3.intervals[3].center(), Rational::of(2, 3));
  for (std::int64_t Q1 = 2; Q1 <= 80; ++Q1) {
    std::int64_t expected = 1;
    for (std::int64_t q = 1; q <= Q1; ++q) expected += euler_phi(q);
    ASSERT_EQ(static_cast<std::int64_t>(build_dissection(Q1).intervals.size()), expected);
  }
  EXPECT_THROW(build_dissection(1), precondition_error);
}

TEST(Dissection, CoverMatchesBruteForce) {
  for (std::int64_t Q1 : {2, 3, 5, 8, 13}) {
    const Dissection d = build_dissection(Q1);
    for (std::int64_t k = 1; k <= 120; ++k) {
      for (std::int64_t h = 0; h <= k; ++h) {
        if (gcd(h, k) != 1) continue;
        auto got = dissection_cover(d, h, k);
        auto want = oracle::cover(Q1, h, k);
        auto key = [](const Approximant& x, const Approximant& y) { return x.a * y.q < y.a * x.q; };
        std::sort(got.begin(), got.end(), key);
        std::sort(want.begin(), want.end(), key);
        ASSERT_EQ(got, want) << h << "/" << k << " Q1=" << Q1;
      }
    }
  }
}

TEST(Dissection, CoverExamples) {
  const Dissection d = build_dissection(10);
  const auto own = dissection_cover(d, 3, 7);
  EXPECT_NE(std::find(own.begin(), own.end(), Approximant{3, 7}), own.end());
  EXPECT_EQ(dissection_cover(d, 1, 1009), (std::vector<Approximant>{{0, 1}}));
  for (std::int64_t k = 11; k <= 400; ++k) {
    for (std::int64_t h = 0; h <= k; ++h) {
      if (gcd(h, k) != 1) continue;
      const auto c = dissection_cover(d, h, k);
      ASSERT_GE(c.size(), 1u);
      ASSERT_LE(c.size(), 2u);
    }
  }
}

TEST(Dissection, InvariantsForPrimesUpTo1000) {
  for (std::int64_t k : oracle::primes_up_to(1000)) {
    const DissectionCheck c = check_dissection(build_dissection(dissection_parameter(k)), k, 2);
    ASSERT_TRUE(c.ok()) << "k=" << k << " uncovered=" << c.uncovered << " mult=" << c.max_multiplicity;
    ASSERT_EQ(c.fractions, k - 1);
  }
}

TEST(Dissection, DisjointnessFailsForTheFullFamily) {
  // Only the q <= Q1/2 sub-family is promised to be disjoint.
  const Dissection d = build_dissection(20);
  EXPECT_TRUE(subfamily_disjoint(d, 10));
  EXPECT_FALSE(subfamily_disjoint(d, 20));
}

TEST(Dissection, Csv) {
  std::ostringstream os;
  write_dissection_csv(os, build_dissection(2));
  EXPECT_EQ(os.str(), "a,q,lo,hi\n0,1,-1/2,1/2\n1,2,1/4,3/4\n1,1,1/2,3/2\n");
}

TEST(ApproxBound, SweepGoldenUpTo300) {
  const ApproxBoundSweep s = approx_bound_sweep(300, 1);
  EXPECT_EQ(s.max_ratio, Rational::parse("244471/422532"));
  EXPECT_EQ(s.h, 10);
  EXPECT_EQ(s.k, 291);
  EXPECT_EQ(s.a, 1);
  EXPECT_EQ(s.q, 29);
  EXPECT_EQ(s.pairs, 34003);
  const ApproxBoundSweep s3 = approx_bound_sweep(300, 3);
  EXPECT_EQ(s3.max_ratio, s.max_ratio);
  EXPECT_EQ(s3.pairs, s.pairs);
  EXPECT_EQ(s3.k, s.k);
}

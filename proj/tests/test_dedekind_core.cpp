#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "dedekind/dedekind_core.hpp"
#include "oracles.hpp"

using namespace dedekind;

TEST(Sawtooth, Examples) {
  EXPECT_EQ(sawtooth(Rational(3)), Rational(0));
  EXPECT_EQ(sawtooth(Rational::of(1, 2)), Rational(0));
  EXPECT_EQ(sawtooth(Rational::of(1, 4)), Rational::of(-1, 4));
  EXPECT_EQ(sawtooth(Rational::of(-1, 4)), Rational::of(1, 4));
  EXPECT_EQ(sawtooth(Rational::of(9, 4)), Rational::of(-1, 4));
}

TEST(Naive, Examples) {
  EXPECT_EQ(dedekind_naive(1, 2), Rational(0));
  EXPECT_EQ(dedekind_naive(1, 3), Rational::of(1, 18));
  EXPECT_EQ(dedekind_naive(3, 7), Rational::of(-1, 14));
  EXPECT_EQ(dedekind_naive(2, 5), Rational(0));
  EXPECT_EQ(dedekind_naive(0, 1), Rational(0));
  EXPECT_EQ(dedekind_naive(-3, 7), Rational::of(1, 14));
  EXPECT_THROW(dedekind_naive(1, 0), precondition_error);
  EXPECT_THROW(dedekind_naive(1, -3), precondition_error);
}

TEST(Naive, AgreesWithRationalOracle) {
  for (std::int64_t k = 1; k <= 60; ++k) {
    for (std::int64_t h = -3; h <= k + 3; ++h) ASSERT_EQ(dedekind_naive(h, k), oracle::dedekind(h, k)) << h << "/" << k;
  }
}

TEST(Fast, Examples) {
  EXPECT_EQ(dedekind_fast(3, 7), Rational::of(-1, 14));
  EXPECT_EQ(dedekind_fast(0, 1), Rational(0));
  EXPECT_EQ(dedekind_fast(1, 3), Rational::of(1, 18));
  EXPECT_EQ(dedekind_fast(10, 14), dedekind_fast(5, 7));
  EXPECT_THROW(dedekind_fast(1, 0), precondition_error);
}

TEST(Fast, EqualsNaiveOnEveryPairUpTo200) {
  for (std::int64_t k = 2; k <= 200; ++k) {
    for (std::int64_t h = 1; h < k; ++h) ASSERT_EQ(dedekind_fast(h, k), dedekind_naive(h, k)) << h << "/" << k;
  }
}

TEST(Fast, FirstArgumentClosedForm) {
  for (std::int64_t k = 1; k <= 1000; ++k) {
    ASSERT_EQ(dedekind_fast(1, k), Rational::of((k - 1) * (k - 2), 12 * k)) << k;
  }
}

TEST(Fast, HandlesLargeModuli) {
  // 2^61 - 1 is prime; s(1, k) has a closed form to compare against.
  const std::int64_t k = (std::int64_t{1} << 61) - 1;
  const int128 K = k;
  EXPECT_EQ(dedekind_fast(1, k), Rational::of((K - 1) * (K - 2), 12 * K));
  EXPECT_EQ(dedekind_fast(k - 1, k), -Rational::of((K - 1) * (K - 2), 12 * K));
  EXPECT_EQ(reciprocity_residual(1'000'000'007, k), Rational(0));
}

TEST(Fast, IntegralityAntisymmetryAndScaling) {
  for (std::int64_t k = 2; k <= 300; ++k) {
    for (std::int64_t h = 1; h < k; ++h) {
      const Rational s = dedekind_fast(h, k);
      ASSERT_TRUE((s * Rational(6 * k)).is_integer());
      ASSERT_LE(s.abs(), Rational::of(k, 12) + Rational(1));
      if (gcd(h, k) == 1) ASSERT_EQ(dedekind_fast(k - h, k), -s);
    }
  }
  for (std::int64_t k = 1; k <= 100; ++k) {
    for (std::int64_t h = 0; h <= k; ++h) {
      if (gcd(h, k) != 1) continue;
      for (std::int64_t g = 2; g <= 5; ++g) ASSERT_EQ(dedekind_naive(g * h, g * k), dedekind_naive(h, k));
    }
  }
}

TEST(Signed, Examples) {
  EXPECT_EQ(dedekind_signed(3, -7), Rational::of(-3, 7));
  EXPECT_EQ(dedekind_signed(1, -2), Rational::of(-1, 2));
  EXPECT_EQ(dedekind_signed(1, 3), Rational::of(1, 18));
  EXPECT_THROW(dedekind_signed(1, 0), precondition_error);
}

TEST(Reciprocity, ExamplesAndErrors) {
  EXPECT_EQ(reciprocity_residual(1, 1), Rational(0));
  EXPECT_EQ(reciprocity_residual(3, 7), Rational(0));
  EXPECT_THROW(reciprocity_residual(4, 6), precondition_error);
}

TEST(Reciprocity, RandomPairs) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000);
  for (int done = 0; done < 2000;) {
    const std::int64_t h = dist(rng), k = dist(rng);
    if (gcd(h, k) != 1) continue;
    ASSERT_EQ(reciprocity_residual(h, k), Rational(0)) << h << "," << k;
    ++done;
  }
}

TEST(Rademacher, ExamplesAndErrors) {
  EXPECT_EQ(rademacher_residual(1, 1, 1), Rational(0));
  EXPECT_EQ(rademacher_residual(2, 3, 5), Rational(0));
  for (std::int64_t x = 1; x <= 40; ++x) {
    for (std::int64_t y = 1; y <= 40; ++y) {
      if (gcd(x, y) == 1) ASSERT_EQ(rademacher_residual(x, y, 1), Rational(0));
    }
  }
  EXPECT_THROW(rademacher_residual(2, 4, 5), precondition_error);
  EXPECT_THROW(rademacher_residual(6, 5, 9), precondition_error);
}

TEST(Rademacher, ExhaustiveSmallTriples) {
  for (std::int64_t x = 1; x <= 25; ++x) {
    for (std::int64_t y = 1; y <= 25; ++y) {
      for (std::int64_t z = 1; z <= 25; ++z) {
        if (gcd(x, y) != 1 || gcd(y, z) != 1 || gcd(z, x) != 1) continue;
        ASSERT_EQ(rademacher_residual(x, y, z), Rational(0)) << x << "," << y << "," << z;
      }
    }
  }
}

TEST(HallHuxley, ExamplesAndErrors) {
  EXPECT_EQ(hall_huxley_residual(1, 1, 1, 2, 1, 2), Rational(0));
  EXPECT_EQ(hall_huxley_residual(2, 1, 1, 1, 1, 3), Rational(0));
  EXPECT_THROW(hall_huxley_residual(1, 1, 1, 1, 1, 2), precondition_error);
  EXPECT_THROW(hall_huxley_residual(1, 1, 1, 2, 2, 4), precondition_error);
}

TEST(HallHuxley, AgainstRationalOracle) {
  // s(a,c) + s(h,k) - s(x,y) evaluated by the definition for small matrices.
  for (std::int64_t a = 1; a <= 6; ++a) {
    for (std::int64_t c = 1; c <= 6; ++c) {
      if (gcd(a, c) != 1) continue;
      // Solve a d - b c = 1 with b, d >= 1.
      std::int64_t d = 1;
      while ((a * d - 1) % c != 0 || (a * d - 1) / c < 1) ++d;
      const std::int64_t b = (a * d - 1) / c;
      for (std::int64_t k = 1; k <= 6; ++k) {
        for (std::int64_t h = 1; h <= 6; ++h) {
          if (gcd(h, k) != 1) continue;
          const std::int64_t x = a * h + b * k, y = c * h + d * k;
          const Rational expected = oracle::dedekind(a, c) + oracle::dedekind(h, k) - oracle::dedekind(x, y) -
                                    Rational::of(c * c + k * k + y * y, 12 * c * k * y) + Rational::of(1, 4);
          ASSERT_EQ(expected, Rational(0));
          ASSERT_EQ(hall_huxley_residual(a, b, c, d, h, k), Rational(0));
        }
      }
    }
  }
}

TEST(Table, ExamplesAndCsv) {
  const auto t3 = dedekind_table(3, 1);
  ASSERT_EQ(t3.size(), 2u);
  EXPECT_EQ(t3[0].h, 1);
  EXPECT_EQ(t3[0].s, Rational::of(1, 18));
  EXPECT_EQ(t3[1].s, Rational::of(-1, 18));
  const auto t2 = dedekind_table(2);
  ASSERT_EQ(t2.size(), 1u);
  EXPECT_EQ(t2[0].s, Rational(0));
  std::ostringstream csv;
  write_table_csv(csv, dedekind_table(5, 3));
  EXPECT_EQ(csv.str(), "h,s\n1,1/5\n2,0\n3,0\n4,-1/5\n");
  EXPECT_THROW(dedekind_table(1), precondition_error);
}

TEST(Table, IndependentOfThreadCount) {
  const auto base = dedekind_table(997, 1);
  for (unsigned t : {2u, 3u, 8u}) {
    const auto other = dedekind_table(997, t);
    ASSERT_EQ(other.size(), base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      ASSERT_EQ(other[i].h, base[i].h);
      ASSERT_EQ(other[i].s, base[i].s);
    }
  }
}

#pragma once

// Exact 2m-th moments of Dedekind sums over reduced residues, their
// asymptotic main terms, the coefficient f_m(k) for composite moduli, and
// the empirical distribution and growth harnesses.

#include <cmath>
#include <cstdint>
#include <ostream>
#include <vector>

#include "dedekind/constants.hpp"
#include "dedekind/dedekind_core.hpp"
#include "dedekind/error.hpp"
#include "dedekind/exact_arith.hpp"
#include "dedekind/parallel.hpp"

namespace dedekind {

/// sum over 1 <= h <= k, gcd(h, k) = 1 of s(h, k)^(2m).
///
/// Every term shares the denominator (12k)^(2m), so the numerators are
/// summed as integers and the sum is exact for any worker count.
inline Rational moment(std::int64_t k, int m, unsigned threads = 0) {
  require(k >= 2, "moment: k must be >= 2");
  require(m >= 1, "moment: m must be >= 1");
  const auto power = static_cast<unsigned>(2 * m);
  BigInt total = parallel_reduce(
      1, k, threads, BigInt(0),
      [k, power](std::int64_t lo, std::int64_t hi) {
        BigInt part = 0;
        for (std::int64_t h = lo; h < hi; ++h) {
          if (gcd(h, k) != 1) continue;
          part += boost::multiprecision::pow(to_big(detail::scaled_dedekind(h, k).numerator), power);
        }
        return part;
      },
      [](BigInt x, const BigInt& y) { return x += y; });
  return Rational(std::move(total), boost::multiprecision::pow(BigInt(12 * k), power));
}

/// 2 zeta(2m)^2 / zeta(4m) * (k/12)^(2m).
inline Rational main_term_prime(std::int64_t k, int m) {
  require(k >= 2, "main_term_prime: k must be >= 2");
  return moment_constant(m) * pow(Rational::of(k, 12), static_cast<unsigned>(2 * m));
}

/// Local factor at p^e of the multiplicative g_m with Dirichlet series
/// zeta(s) zeta(s + 4m - 1) / zeta(s + 2m)^2:
///   g_m(p^e) = sum_{l=0}^{min(e,2)} c_l p^(-2ml) sum_{j=0}^{e-l} p^(j(1-4m)),
/// with (c_0, c_1, c_2) = (1, -2, 1) from (1 - p^(-2m) x)^2.
inline Rational fm_local_factor(std::int64_t p, int e, int m) {
  static constexpr int kSquareCoeffs[3] = {1, -2, 1};
  const BigInt p2m = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(2 * m));
  const BigInt p4m1 = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(4 * m - 1));
  Rational total;
  Rational square_weight(1);  // p^(-2ml)
  for (int l = 0; l <= std::min(e, 2); ++l) {
    Rational geometric;
    Rational term(1);  // p^(j(1-4m))
    for (int j = 0; j <= e - l; ++j) {
      geometric += term;
      term /= Rational(p4m1);
    }
    total += Rational(kSquareCoeffs[l]) * square_weight * geometric;
    square_weight /= Rational(p2m);
  }
  return total;
}

/// f_m(k) = moment_constant(m) * g_m(k).
inline Rational fm(std::int64_t k, int m) {
  require(k >= 1 && m >= 1, "fm: need k >= 1 and m >= 1");
  Rational value = moment_constant(m);
  for (const auto& [p, e] : factorize(k)) value *= fm_local_factor(p, e, m);
  return value;
}

struct FmOracle {
  Real value;
  Real tail_bound;  // value <= f_m(k) <= value + tail_bound
};

/// Truncation of
///   f_m(k) = sum_q q^(-2m) sum_{(a,q)=1} sum_{h in Z, (h,k)=1} (hq - ak)^(-2m)
/// to q <= qmax, |h| <= hmax. The single term with hq = ak (h = a, q = k) is
/// excluded. Every term is positive, so the truncation is a lower bound and
/// the omitted part is at most
///   2 zeta(2m) qmax^(1-2m) / (2m-1) + 2 zeta(3) (hmax - k)^(1-2m) / (2m-1).
inline FmOracle fm_oracle(std::int64_t k, int m, std::int64_t qmax, std::int64_t hmax) {
  require(k >= 1 && m >= 1, "fm_oracle: need k >= 1 and m >= 1");
  require(qmax >= 1, "fm_oracle: qmax must be >= 1");
  require(hmax > k, "fm_oracle: hmax must exceed k");
  std::vector<char> coprime(static_cast<std::size_t>(k));
  for (std::int64_t r = 0; r < k; ++r) coprime[static_cast<std::size_t>(r)] = gcd(r, k) == 1;
  const int power = 2 * m;
  Real total = 0;
  for (std::int64_t q = 1; q <= qmax; ++q) {
    Real inner = 0;
    for (std::int64_t a = 1; a <= q; ++a) {
      if (gcd(a, q) != 1) continue;
      const std::int64_t ak = a * k;
      for (std::int64_t h = -hmax; h <= hmax; ++h) {
        if (!coprime[static_cast<std::size_t>(floor_mod(h, k))]) continue;
        const std::int64_t n = h * q - ak;
        if (n == 0) {
          if (h == a && q == k) continue;
          throw contract_error("fm_oracle: singular term outside h/k = a/q");
        }
        inner += std::pow(static_cast<Real>(n), -power);
      }
    }
    total += inner * std::pow(static_cast<Real>(q), -power);
  }
  const Real zeta_2m = zeta_even(m).to_real();
  const Real zeta_3_upper = 1.2021L;
  const Real tail = 2 * zeta_2m * std::pow(static_cast<Real>(qmax), 1 - power) / (power - 1) +
                    2 * zeta_3_upper * std::pow(static_cast<Real>(hmax - k), 1 - power) / (power - 1);
  return {total, tail};
}

struct MomentReport {
  std::int64_t k;
  int m;
  bool prime;
  Rational moment;
  Rational main_term;
  Real ratio;
};

/// Moment against its main term: moment_constant(m) (k/12)^(2m) for prime k,
/// f_m(k) (k/12)^(2m) otherwise.
inline MomentReport moment_report(std::int64_t k, int m, unsigned threads = 0) {
  require(k >= 2 && m >= 1, "moment_report: need k >= 2 and m >= 1");
  const bool prime = is_prime(k);
  Rational s = moment(k, m, threads);
  Rational main = prime ? main_term_prime(k, m) : fm(k, m) * pow(Rational::of(k, 12), static_cast<unsigned>(2 * m));
  const Real ratio = to_real(s / main);
  return {k, m, prime, std::move(s), std::move(main), ratio};
}

// ---------------------------------------------------------------------------
// Distribution of s(h, k) / log k

struct VardiHistogram {
  Rational bound;
  int bins = 0;
  std::vector<Rational> edges;       // bins + 1 edges from -bound to bound
  std::vector<std::int64_t> counts;  // one per bin
  std::int64_t below = 0;            // < -bound
  std::int64_t above = 0;            // > bound
  std::int64_t total = 0;

  /// Fraction of samples with |value| beyond the outer edge of the j-th bin
  /// right of center, j = 0 .. bins/2; the last entry is the overflow share.
  std::vector<Real> tail_fractions() const {
    const int center = bins / 2;
    std::vector<Real> out;
    std::int64_t beyond = below + above;
    std::vector<std::int64_t> cumulative(static_cast<std::size_t>(center) + 1);
    for (int j = center; j >= 0; --j) {
      cumulative[static_cast<std::size_t>(j)] = beyond;
      if (j > 0) beyond += counts[static_cast<std::size_t>(center + j)] + counts[static_cast<std::size_t>(center - j)];
    }
    for (auto c : cumulative) out.push_back(static_cast<Real>(c) / static_cast<Real>(total));
    return out;
  }
};

/// Histogram of s(h, k) / log k over reduced 1 <= h < k, 2 <= k <= K, with
/// `bins` equal bins on [-bound, bound] (bins odd, so one bin is centered at
/// 0). Bin placement uses |s| and the sign, so the counts are exactly
/// mirror-symmetric.
inline VardiHistogram vardi_histogram(std::int64_t K, int bins, const Rational& bound, unsigned threads = 0) {
  require(K >= 2, "vardi_histogram: K must be >= 2");
  require(bins >= 3 && bins % 2 == 1, "vardi_histogram: bins must be odd and >= 3");
  require(bound.sign() > 0, "vardi_histogram: bound must be positive");
  VardiHistogram out;
  out.bound = bound;
  out.bins = bins;
  const Rational width = Rational(2) * bound / Rational(bins);
  for (int i = 0; i <= bins; ++i) out.edges.push_back(-bound + width * Rational(i));
  const Real w = to_real(width);
  const int center = bins / 2;

  struct Tally {
    std::vector<std::int64_t> counts;
    std::int64_t below = 0, above = 0, total = 0;
  };
  const auto n_bins = static_cast<std::size_t>(bins);
  Tally t = parallel_reduce(
      2, K + 1, threads, Tally{std::vector<std::int64_t>(n_bins)},
      [&](std::int64_t lo, std::int64_t hi) {
        Tally part{std::vector<std::int64_t>(n_bins)};
        for (std::int64_t k = lo; k < hi; ++k) {
          const Real scale = 12 * static_cast<Real>(k) * std::log(static_cast<Real>(k));
          for (std::int64_t h = 1; h < k; ++h) {
            if (gcd(h, k) != 1) continue;
            const int128 num = detail::scaled_dedekind(h, k).numerator;
            const Real v = static_cast<Real>(num < 0 ? -num : num) / scale;
            const auto offset = static_cast<std::int64_t>(std::floor(v / w + 0.5L));
            ++part.total;
            if (offset > center) {
              ++(num < 0 ? part.below : part.above);
            } else {
              const std::int64_t idx = num < 0 ? center - offset : center + offset;
              ++part.counts[static_cast<std::size_t>(idx)];
            }
          }
        }
        return part;
      },
      [](Tally x, const Tally& y) {
        for (std::size_t i = 0; i < x.counts.size(); ++i) x.counts[i] += y.counts[i];
        x.below += y.below;
        x.above += y.above;
        x.total += y.total;
        return x;
      });
  out.counts = std::move(t.counts);
  out.below = t.below;
  out.above = t.above;
  out.total = t.total;
  return out;
}

inline void write_histogram_csv(std::ostream& os, const VardiHistogram& hist) {
  os << "bin_lo,bin_hi,count\n";
  os << "-inf," << hist.edges.front() << ',' << hist.below << '\n';
  for (int i = 0; i < hist.bins; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    os << hist.edges[idx] << ',' << hist.edges[idx + 1] << ',' << hist.counts[idx] << '\n';
  }
  os << hist.edges.back() << ",inf," << hist.above << '\n';
}

// ---------------------------------------------------------------------------
// Growth of partial-quotient sums and of |s(a, q)|

struct GrowthRow {
  std::int64_t q;
  std::int64_t quotient_sum;  // sum of N(a, q)
  Rational abs_sum;           // sum of |s(a, q)|
  Real comparator;            // q log^2 q

  Real quotient_ratio() const { return static_cast<Real>(quotient_sum) / comparator; }
  Real abs_ratio() const { return to_real(abs_sum) / comparator; }
};

/// Powers of two from 4 up to qmax.
inline std::vector<std::int64_t> growth_ladder(std::int64_t qmax) {
  require(qmax >= 4, "growth_check: qmax must be >= 4");
  std::vector<std::int64_t> out;
  for (std::int64_t q = 4; q <= qmax; q *= 2) out.push_back(q);
  return out;
}

inline GrowthRow growth_row(std::int64_t q, unsigned threads = 0) {
  struct Sums {
    std::int64_t quotients = 0;
    BigInt scaled_abs = 0;  // sum of |12 q s(a, q)|
  };
  const Sums s = parallel_reduce(
      1, q + 1, threads, Sums{},
      [q](std::int64_t lo, std::int64_t hi) {
        Sums part;
        for (std::int64_t a = lo; a < hi; ++a) {
          if (gcd(a, q) != 1) continue;
          part.quotients += cf_partial_quotient_sum(cf_expand(a, q));
          const int128 num = detail::scaled_dedekind(a, q).numerator;
          part.scaled_abs += to_big(num < 0 ? -num : num);
        }
        return part;
      },
      [](Sums x, const Sums& y) {
        x.quotients += y.quotients;
        x.scaled_abs += y.scaled_abs;
        return x;
      });
  const Real lq = std::log(static_cast<Real>(q));
  return {q, s.quotients, Rational(s.scaled_abs, BigInt(12 * q)), static_cast<Real>(q) * lq * lq};
}

inline std::vector<GrowthRow> growth_check(std::int64_t qmax, unsigned threads = 0) {
  std::vector<GrowthRow> rows;
  for (std::int64_t q : growth_ladder(qmax)) rows.push_back(growth_row(q, threads));
  return rows;
}

}  // namespace dedekind

#pragma once

// Dirichlet approximation, the Farey interval dissection of [0, 1], and the
// approximation s(h, k) ~ k / (12 q eps) near a rational a/q.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "dedekind/dedekind_core.hpp"
#include "dedekind/error.hpp"
#include "dedekind/exact_arith.hpp"
#include "dedekind/parallel.hpp"

namespace dedekind {

/// (a, q, eps) with eps = h q - a k for the (h, k) it was built from.
struct ApproxTriple {
  std::int64_t a;
  std::int64_t q;
  std::int64_t eps;
  friend bool operator==(const ApproxTriple&, const ApproxTriple&) = default;
};

struct Approximant {
  std::int64_t a;
  std::int64_t q;
  friend bool operator==(const Approximant&, const Approximant&) = default;
};

// ---------------------------------------------------------------------------
// Dirichlet approximation

namespace detail {

// Best a for denominator q when |alpha - a/q| < 1/(q Q). Between floor and
// ceiling the closer one wins; an exact tie goes to the smaller a.
inline std::optional<std::int64_t> dirichlet_numerator(const Rational& alpha, std::int64_t q, const Rational& Q) {
  const Rational scaled = alpha * Rational(q);
  const BigInt lo = scaled.floor();
  const Rational bound = Rational(1) / Q;
  std::optional<std::int64_t> best;
  Rational best_err;
  for (const BigInt& cand : {lo, BigInt(lo + 1)}) {
    const Rational err = (scaled - Rational(cand)).abs();
    if (err >= bound) continue;
    if (!best || err < best_err) {
      best = cand.convert_to<std::int64_t>();
      best_err = err;
    }
  }
  return best;
}

inline void check_dirichlet_args(const Rational& alpha, const Rational& Q) {
  require(alpha.sign() >= 0 && alpha <= Rational(1), "dirichlet_approx: alpha must lie in [0, 1]");
  require(Q > Rational(1), "dirichlet_approx: Q must exceed 1");
}

}  // namespace detail

/// Smallest-q approximant with |alpha - a/q| < 1/(qQ), scanning every q <= Q.
inline Approximant dirichlet_approx_exhaustive(const Rational& alpha, const Rational& Q) {
  detail::check_dirichlet_args(alpha, Q);
  const auto qmax = Q.floor().convert_to<std::int64_t>();
  for (std::int64_t q = 1; q <= qmax; ++q) {
    if (auto a = detail::dirichlet_numerator(alpha, q, Q)) return {*a, q};
  }
  throw contract_error("dirichlet_approx: no approximant for alpha = " + alpha.to_string());
}

/// Same answer as the exhaustive scan, visiting only convergent
/// denominators: the first q with ||q alpha|| < 1/Q is a record minimum of
/// ||q alpha|| and therefore a convergent denominator.
inline Approximant dirichlet_approx_convergents(const Rational& alpha, const Rational& Q) {
  detail::check_dirichlet_args(alpha, Q);
  const BigInt qmax = Q.floor();
  BigInt num = alpha.num(), den = alpha.den();
  BigInt q_prev = 0, q_cur = 1;  // q_{-1}, q_0
  bool first = true;
  while (q_cur <= qmax) {
    if (auto a = detail::dirichlet_numerator(alpha, q_cur.convert_to<std::int64_t>(), Q)) {
      return {*a, q_cur.convert_to<std::int64_t>()};
    }
    if (den == 0) break;
    if (first) {
      // Skip the integer part d0; it does not move the denominator.
      num = std::exchange(den, BigInt(num % den));
      first = false;
      if (den == 0) break;
    }
    const BigInt d = num / den;
    num = std::exchange(den, BigInt(num % den));
    q_prev = std::exchange(q_cur, BigInt(d * q_cur + q_prev));
  }
  throw contract_error("dirichlet_approx: no approximant for alpha = " + alpha.to_string());
}

/// Smallest-q Dirichlet approximant; ties on q broken by the smaller error.
inline Approximant dirichlet_approx(const Rational& alpha, const Rational& Q) {
  if (Q <= Rational(256)) return dirichlet_approx_exhaustive(alpha, Q);
  return dirichlet_approx_convergents(alpha, Q);
}

// ---------------------------------------------------------------------------
// Approximation of s(h, k) near a/q

inline std::int64_t approx_eps(std::int64_t h, std::int64_t k, std::int64_t a, std::int64_t q) {
  return static_cast<std::int64_t>(static_cast<int128>(h) * q - static_cast<int128>(a) * k);
}

/// k / (12 q eps), or 0 when eps = 0.
inline Rational lemma_main_term(std::int64_t k, std::int64_t q, std::int64_t eps) {
  if (eps == 0) return Rational(0);
  return Rational::of(k, 12 * static_cast<int128>(q) * eps);
}

namespace detail {

inline void check_approx_args(std::int64_t h, std::int64_t k, std::int64_t a, std::int64_t q) {
  require(k > 0 && q > 0, "approx_error: k and q must be positive");
  require(gcd(h, k) == 1, "approx_error: h and k must be coprime");
  require(gcd(a, q) == 1, "approx_error: a and q must be coprime");
  const int128 eps = static_cast<int128>(h) * q - static_cast<int128>(a) * k;
  require((eps < 0 ? -eps : eps) * q <= k, "approx_error: need |eps| <= k/q");
}

}  // namespace detail

/// s(h, k) - k/(12 q eps); requires |eps| <= k/q.
inline Rational approx_error(std::int64_t h, std::int64_t k, std::int64_t a, std::int64_t q) {
  detail::check_approx_args(h, k, a, q);
  return dedekind_fast(h, k) - lemma_main_term(k, q, approx_eps(h, k, a, q));
}

/// |approx_error| / (|s(a, q)| + |eps| + 1).
inline Rational approx_bound_ratio(std::int64_t h, std::int64_t k, std::int64_t a, std::int64_t q) {
  const Rational err = approx_error(h, k, a, q);
  const std::int64_t eps = approx_eps(h, k, a, q);
  return err.abs() / (dedekind_fast(a, q).abs() + Rational(eps < 0 ? -eps : eps) + Rational(1));
}

inline bool lemma8_bound_check(std::int64_t h, std::int64_t k, std::int64_t a, std::int64_t q, const Rational& C) {
  return approx_bound_ratio(h, k, a, q) <= C;
}

// ---------------------------------------------------------------------------
// Farey dissection

/// Open interval (a/q - 1/(q Q1), a/q + 1/(q Q1)).
struct Interval {
  std::int64_t a;
  std::int64_t q;
  Rational lo;
  Rational hi;

  Rational center() const { return Rational::of(a, q); }
};

struct Dissection {
  std::int64_t Q1;
  std::vector<Interval> intervals;  // sorted by center

  /// h/k strictly inside the interval of (a, q), in integer arithmetic.
  bool contains(const Interval& iv, std::int64_t h, std::int64_t k) const {
    int128 diff = static_cast<int128>(h) * iv.q - static_cast<int128>(iv.a) * k;
    if (diff < 0) diff = -diff;
    return diff * Q1 < k;
  }
};

/// floor(k^(3/5)), at least 2.
inline std::int64_t dissection_parameter(std::int64_t k) {
  require(k >= 1 && k <= 100'000'000, "dissection_parameter: k out of range");
  const int128 cube = static_cast<int128>(k) * k * k;
  auto q = static_cast<std::int64_t>(std::pow(static_cast<long double>(k), 0.6L));
  auto fifth = [](int128 x) { return x * x * x * x * x; };
  while (q > 0 && fifth(q) > cube) --q;
  while (fifth(q + 1) <= cube) ++q;
  return std::max<std::int64_t>(2, q);
}

inline Dissection build_dissection(std::int64_t Q1) {
  require(Q1 >= 2, "build_dissection: Q1 must be >= 2");
  Dissection d{Q1, {}};
  for (std::int64_t q = 1; q <= Q1; ++q) {
    for (std::int64_t a = 0; a <= q; ++a) {
      if (gcd(a, q) != 1) continue;
      const Rational center = Rational::of(a, q);
      const Rational radius = Rational::of(1, static_cast<int128>(q) * Q1);
      d.intervals.push_back({a, q, center - radius, center + radius});
    }
  }
  std::sort(d.intervals.begin(), d.intervals.end(), [](const Interval& x, const Interval& y) {
    return static_cast<int128>(x.a) * y.q < static_cast<int128>(y.a) * x.q;
  });
  return d;
}

/// Every (a, q) in the dissection whose open interval contains h/k.
inline std::vector<Approximant> dissection_cover(const Dissection& d, std::int64_t h, std::int64_t k) {
  require(k >= 1 && h >= 0 && h <= k, "dissection_cover: need 0 <= h <= k");
  require(gcd(h, k) == 1, "dissection_cover: h and k must be coprime");
  const auto& ivs = d.intervals;
  // First center >= h/k.
  const auto pivot = std::partition_point(ivs.begin(), ivs.end(), [h, k](const Interval& iv) {
    return static_cast<int128>(iv.a) * k < static_cast<int128>(h) * iv.q;
  });
  // Centers farther than 1/Q1 from h/k cannot reach it.
  auto near = [&](const Interval& iv) {
    int128 diff = static_cast<int128>(h) * iv.q - static_cast<int128>(iv.a) * k;
    if (diff < 0) diff = -diff;
    return diff * d.Q1 < static_cast<int128>(k) * iv.q;
  };
  auto first = pivot;
  while (first != ivs.begin() && near(*(first - 1))) --first;
  std::vector<Approximant> out;
  for (auto it = first; it != ivs.end() && (it < pivot || near(*it)); ++it) {
    if (d.contains(*it, h, k)) out.push_back({it->a, it->q});
  }
  return out;
}

/// The intervals with q <= Q are pairwise disjoint.
inline bool subfamily_disjoint(const Dissection& d, std::int64_t Q) {
  const Interval* prev = nullptr;
  for (const auto& iv : d.intervals) {
    if (iv.q > Q) continue;
    if (prev && prev->hi > iv.lo) return false;
    prev = &iv;
  }
  return true;
}

/// No center of the dissection lies strictly inside another interval.
/// Neighbours in center order are the closest centers, so checking adjacent
/// pairs suffices.
inline bool center_exclusion(const Dissection& d) {
  const auto& ivs = d.intervals;
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
    if (d.contains(ivs[i], ivs[i + 1].a, ivs[i + 1].q)) return false;
    if (d.contains(ivs[i + 1], ivs[i].a, ivs[i].q)) return false;
  }
  return true;
}

struct DissectionCheck {
  std::int64_t k;
  std::int64_t Q1;
  std::int64_t fractions = 0;
  std::int64_t uncovered = 0;
  std::size_t max_multiplicity = 0;
  bool disjoint = false;
  bool centers_excluded = false;

  bool ok() const { return uncovered == 0 && max_multiplicity <= 2 && disjoint && centers_excluded; }
};

/// Coverage and multiplicity of every reduced h/k in [0, 1], plus the
/// structural invariants of the dissection itself.
inline DissectionCheck check_dissection(const Dissection& d, std::int64_t k, unsigned threads = 0) {
  require(k >= 1, "check_dissection: k must be positive");
  struct Tally {
    std::int64_t fractions = 0;
    std::int64_t uncovered = 0;
    std::size_t max_multiplicity = 0;
  };
  const Tally t = parallel_reduce(
      0, k + 1, threads, Tally{},
      [&](std::int64_t lo, std::int64_t hi) {
        Tally part;
        for (std::int64_t h = lo; h < hi; ++h) {
          if (gcd(h, k) != 1) continue;
          const auto cover = dissection_cover(d, h, k);
          ++part.fractions;
          if (cover.empty()) ++part.uncovered;
          part.max_multiplicity = std::max(part.max_multiplicity, cover.size());
        }
        return part;
      },
      [](Tally x, const Tally& y) {
        x.fractions += y.fractions;
        x.uncovered += y.uncovered;
        x.max_multiplicity = std::max(x.max_multiplicity, y.max_multiplicity);
        return x;
      });
  DissectionCheck out{k, d.Q1};
  out.fractions = t.fractions;
  out.uncovered = t.uncovered;
  out.max_multiplicity = t.max_multiplicity;
  out.disjoint = subfamily_disjoint(d, d.Q1 / 2);
  out.centers_excluded = center_exclusion(d);
  return out;
}

inline void write_dissection_csv(std::ostream& os, const Dissection& d) {
  os << "a,q,lo,hi\n";
  for (const auto& iv : d.intervals) os << iv.a << ',' << iv.q << ',' << iv.lo << ',' << iv.hi << '\n';
}

// ---------------------------------------------------------------------------
// Empirical constant for the general-k approximation

struct ApproxBoundSweep {
  Rational max_ratio;
  std::int64_t h = 0, k = 0, a = 0, q = 0;  // witness of the maximum
  std::int64_t pairs = 0;
};

/// Largest |s(h,k) - k/(12 q eps)| / (|s(a,q)| + |eps| + 1) over every
/// reduced 1 <= h < k, 2 <= k <= kmax and every (a, q) whose interval in
/// build_dissection(dissection_parameter(k)) contains h/k.
inline ApproxBoundSweep approx_bound_sweep(std::int64_t kmax, unsigned threads = 0) {
  require(kmax >= 2, "approx_bound_sweep: kmax must be >= 2");
  return parallel_reduce(
      2, kmax + 1, threads, ApproxBoundSweep{},
      [](std::int64_t lo, std::int64_t hi) {
        ApproxBoundSweep part;
        for (std::int64_t k = lo; k < hi; ++k) {
          const Dissection d = build_dissection(dissection_parameter(k));
          for (std::int64_t h = 1; h < k; ++h) {
            if (gcd(h, k) != 1) continue;
            for (const auto& [a, q] : dissection_cover(d, h, k)) {
              ++part.pairs;
              Rational r = approx_bound_ratio(h, k, a, q);
              if (r > part.max_ratio) part = {std::move(r), h, k, a, q, part.pairs};
            }
          }
        }
        return part;
      },
      [](ApproxBoundSweep x, ApproxBoundSweep y) {
        const std::int64_t pairs = x.pairs + y.pairs;
        if (y.max_ratio > x.max_ratio) x = std::move(y);
        x.pairs = pairs;
        return x;
      });
}

}  // namespace dedekind

#pragma once

// Brute-force references that share no code path with the library beyond
// Rational itself. Slow on purpose.

#include <cstdint>
#include <vector>

#include "dedekind/dedekind.hpp"

namespace oracle {

using dedekind::Rational;

inline Rational saw(const Rational& x) {
  if (x.den() == 1) return Rational(0);
  Rational frac = x - Rational(x.floor());
  return frac - Rational::of(1, 2);
}

/// s(h, k) from the definition, every term a Rational.
inline Rational dedekind(std::int64_t h, std::int64_t k) {
  Rational total;
  for (std::int64_t a = 1; a <= k; ++a) total += saw(Rational::of(a, k)) * saw(Rational::of(a * h, k));
  return total;
}

/// Quotients of a/q by repeated floor and reciprocal on Rationals.
inline std::vector<std::int64_t> continued_fraction(std::int64_t a, std::int64_t q) {
  std::vector<std::int64_t> out;
  Rational x = Rational::of(a, q);
  while (true) {
    const auto d = x.floor();
    out.push_back(d.convert_to<std::int64_t>());
    x -= Rational(d);
    if (x.is_zero()) break;
    x = Rational(1) / x;
  }
  return out;
}

inline Rational moment(std::int64_t k, int m) {
  Rational total;
  for (std::int64_t h = 1; h < k; ++h) {
    if (std::gcd(h, k) != 1) continue;
    total += dedekind::pow(dedekind(h, k), static_cast<unsigned>(2 * m));
  }
  return total;
}

/// Intervals of the dissection that contain h/k, by Rational comparison.
inline std::vector<dedekind::Approximant> cover(std::int64_t Q1, std::int64_t h, std::int64_t k) {
  std::vector<dedekind::Approximant> out;
  const Rational x = Rational::of(h, k);
  for (std::int64_t q = 1; q <= Q1; ++q) {
    for (std::int64_t a = 0; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const Rational r = Rational::of(1, q * Q1);
      const Rational c = Rational::of(a, q);
      if (c - r < x && x < c + r) out.push_back({a, q});
    }
  }
  return out;
}

/// Smallest q <= Q (then the smallest error, then the smaller a) with
/// |alpha - a/q| < 1/(qQ), by scanning every a.
inline dedekind::Approximant dirichlet(const Rational& alpha, std::int64_t Q) {
  for (std::int64_t q = 1; q <= Q; ++q) {
    bool found = false;
    dedekind::Approximant best{0, q};
    Rational best_err;
    for (std::int64_t a = 0; a <= q; ++a) {
      const Rational err = (alpha - Rational::of(a, q)).abs();
      if (err * Rational(q * Q) < Rational(1) && (!found || err < best_err)) {
        best = {a, q};
        best_err = err;
        found = true;
      }
    }
    if (found) return best;
  }
  return {-1, -1};
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<char> composite(static_cast<std::size_t>(n) + 1);
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= n; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (std::int64_t j = p * p; j <= n; j += p) composite[static_cast<std::size_t>(j)] = 1;
  }
  return out;
}

}  // namespace oracle

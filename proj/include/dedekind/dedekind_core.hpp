#pragma once

// Dedekind sums s(h, k): the O(k) defining sum, the O(log k) continued
// fraction evaluation, the negative-modulus extension, and the exact
// reciprocity residuals (two-term, Rademacher three-term, Hall-Huxley).

#include <cstdint>
#include <ostream>
#include <vector>

#include "dedekind/error.hpp"
#include "dedekind/exact_arith.hpp"
#include "dedekind/parallel.hpp"

namespace dedekind {

/// A pair (h, k) with k >= 1, 0 <= h <= k and gcd(h, k) = 1.
class ReducedFraction {
 public:
  ReducedFraction(std::int64_t h, std::int64_t k) : h_(h), k_(k) {
    require(k >= 1 && h >= 0 && h <= k, "ReducedFraction: need 0 <= h <= k, k >= 1");
    require(gcd(h, k) == 1, "ReducedFraction: h and k must be coprime");
  }
  std::int64_t h() const noexcept { return h_; }
  std::int64_t k() const noexcept { return k_; }
  Rational value() const { return Rational::of(h_, k_); }

 private:
  std::int64_t h_;
  std::int64_t k_;
};

/// ((x)): x - floor(x) - 1/2 off the integers, 0 on them.
inline Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x - Rational(x.floor()) - Rational::of(1, 2);
}

namespace detail {

// 2k * ((r/k)) as an integer.
inline std::int64_t scaled_sawtooth(std::int64_t r, std::int64_t k) {
  const std::int64_t m = floor_mod(r, k);
  return m == 0 ? 0 : 2 * m - k;
}

/// A Dedekind sum as numerator / (12 * modulus) with the modulus already
/// reduced by gcd(h, k).
struct ScaledDedekind {
  int128 numerator;
  std::int64_t modulus;
};

// Continued-fraction evaluation for 1 <= a < q, gcd(a, q) = 1, with
// a/q = <0; d1, ..., dl> and alt = d1 - d2 + d3 - ...:
//   12 q s(a, q) = (a + d) + q * alt - 3q   (l odd,  a d = +1 mod q)
//   12 q s(a, q) = (a - d) + q * alt        (l even, a d = -1 mod q)
// In both cases d is the denominator of the penultimate convergent.
inline int128 twelve_q_times_s(std::int64_t a, std::int64_t q) {
  int128 alternating = 0;
  std::size_t length = 0;
  std::int64_t num = a, den = q;
  // a/q = <0; d1, d2, ...>: the first quotient is 0, then Euclid on (q, a).
  num = std::exchange(den, num);  // num = q, den = a
  while (den != 0) {
    const std::int64_t d = num / den;
    alternating += (length % 2 == 0) ? d : -d;
    ++length;
    num = std::exchange(den, num % den);
  }
  const std::int64_t inverse = mod_inverse(a, q);
  if (length % 2 == 1) {
    return static_cast<int128>(a) + inverse + static_cast<int128>(q) * alternating - 3 * static_cast<int128>(q);
  }
  return static_cast<int128>(a) - (q - inverse) + static_cast<int128>(q) * alternating;
}

inline ScaledDedekind scaled_dedekind(std::int64_t h, std::int64_t k) {
  require(k >= 1, "dedekind sum: k must be positive");
  h = floor_mod(h, k);
  if (h == 0 || k == 1) return {0, 1};
  const std::int64_t g = gcd(h, k);
  h /= g;
  k /= g;
  if (k == 1) return {0, 1};
  return {twelve_q_times_s(h, k), k};
}

}  // namespace detail

/// s(h, k) straight from the defining sum; O(k). Any integer h is accepted.
inline Rational dedekind_naive(std::int64_t h, std::int64_t k) {
  require(k >= 1, "dedekind_naive: k must be positive");
  int128 total = 0;
  for (std::int64_t a = 1; a <= k; ++a) {
    const int128 hm = floor_mod(h, k);
    const auto ah = static_cast<std::int64_t>(static_cast<int128>(a) * hm % k);
    total += static_cast<int128>(detail::scaled_sawtooth(a, k)) * detail::scaled_sawtooth(ah, k);
  }
  return Rational::of(total, 4 * static_cast<int128>(k) * k);
}

/// s(h, k) through the continued fraction of h/k; O(log k).
inline Rational dedekind_fast(std::int64_t h, std::int64_t k) {
  const auto [numerator, modulus] = detail::scaled_dedekind(h, k);
  return Rational::of(numerator, 12 * static_cast<int128>(modulus));
}

/// s(h, k) for k != 0 with s(h, -k) = -s(h, k) - 1/2.
inline Rational dedekind_signed(std::int64_t h, std::int64_t k) {
  require(k != 0, "dedekind_signed: k must be nonzero");
  if (k > 0) return dedekind_fast(h, k);
  return -dedekind_fast(h, -k) - Rational::of(1, 2);
}

/// s(h,k) + s(k,h) - (h^2 + k^2 + 1)/(12hk) + 1/4; always zero.
inline Rational reciprocity_residual(std::int64_t h, std::int64_t k) {
  require(h > 0 && k > 0, "reciprocity_residual: h and k must be positive");
  require(gcd(h, k) == 1, "reciprocity_residual: h and k must be coprime");
  const int128 H = h, K = k;
  return dedekind_fast(h, k) + dedekind_fast(k, h) - Rational::of(H * H + K * K + 1, 12 * H * K) + Rational::of(1, 4);
}

namespace detail {

// s(x * inverse(y), z) with the inverse taken modulo z.
inline Rational rademacher_term(std::int64_t x, std::int64_t y, std::int64_t z) {
  if (z == 1) return Rational(0);
  const int128 h = static_cast<int128>(floor_mod(x, z)) * mod_inverse(y, z) % z;
  return dedekind_fast(static_cast<std::int64_t>(h), z);
}

}  // namespace detail

/// Three-term residual over a pairwise coprime triple; always zero.
inline Rational rademacher_residual(std::int64_t x, std::int64_t y, std::int64_t z) {
  require(x > 0 && y > 0 && z > 0, "rademacher_residual: x, y, z must be positive");
  require(gcd(x, y) == 1 && gcd(y, z) == 1 && gcd(z, x) == 1, "rademacher_residual: x, y, z must be pairwise coprime");
  const int128 X = x, Y = y, Z = z;
  return detail::rademacher_term(x, y, z) + detail::rademacher_term(y, z, x) + detail::rademacher_term(z, x, y) -
         Rational::of(X * X + Y * Y + Z * Z, 12 * X * Y * Z) + Rational::of(1, 4);
}

/// For [[a, b], [c, d]] in SL2(Z) with positive entries and (x, y) = M (h, k):
/// s(a,c) + s(h,k) - s(x,y) - (c^2 + k^2 + y^2)/(12cky) + 1/4; always zero.
inline Rational hall_huxley_residual(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t h,
                                     std::int64_t k) {
  require(a > 0 && b > 0 && c > 0 && d > 0 && h > 0 && k > 0, "hall_huxley_residual: all entries must be positive");
  require(static_cast<int128>(a) * d - static_cast<int128>(b) * c == 1, "hall_huxley_residual: need ad - bc = 1");
  require(gcd(h, k) == 1, "hall_huxley_residual: h and k must be coprime");
  const int128 x128 = static_cast<int128>(a) * h + static_cast<int128>(b) * k;
  const int128 y128 = static_cast<int128>(c) * h + static_cast<int128>(d) * k;
  require(y128 <= std::numeric_limits<std::int64_t>::max(), "hall_huxley_residual: image vector exceeds 64 bits");
  const auto x = static_cast<std::int64_t>(x128);
  const auto y = static_cast<std::int64_t>(y128);
  const int128 C = c, K = k;
  return dedekind_fast(a, c) + dedekind_fast(h, k) - dedekind_fast(x, y) - Rational::of(C * C + K * K + y128 * y128, 12 * C * K * y128) +
         Rational::of(1, 4);
}

struct TableEntry {
  std::int64_t h;
  Rational s;
};

/// s(h, k) for every 1 <= h < k coprime to k, in increasing h.
inline std::vector<TableEntry> dedekind_table(std::int64_t k, unsigned threads = 0) {
  require(k >= 2, "dedekind_table: k must be >= 2");
  auto rows = parallel_map<TableEntry>(1, k, threads, [k](std::int64_t h) {
    return gcd(h, k) == 1 ? TableEntry{h, dedekind_fast(h, k)} : TableEntry{0, Rational(0)};
  });
  std::erase_if(rows, [](const TableEntry& e) { return e.h == 0; });
  return rows;
}

inline void write_table_csv(std::ostream& os, const std::vector<TableEntry>& table) {
  os << "h,s\n";
  for (const auto& [h, s] : table) os << h << ',' << s << '\n';
}

}  // namespace dedekind

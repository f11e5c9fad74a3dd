#pragma once

// Exact values of zeta at even integers as rational multiples of powers of
// pi, and the constants built from them.

#include <cstdint>
#include <numbers>
#include <vector>

#include "dedekind/error.hpp"
#include "dedekind/exact_arith.hpp"

namespace dedekind {

/// coeff * pi^power.
struct PiPower {
  Rational coeff;
  int power = 0;

  friend PiPower operator*(const PiPower& x, const PiPower& y) { return {x.coeff * y.coeff, x.power + y.power}; }
  friend PiPower operator/(const PiPower& x, const PiPower& y) {
    require(!y.coeff.is_zero(), "PiPower: division by zero");
    return {x.coeff / y.coeff, x.power - y.power};
  }
  friend bool operator==(const PiPower&, const PiPower&) = default;

  Real to_real() const {
    Real v = dedekind::to_real(coeff);
    const Real pi = std::numbers::pi_v<Real>;
    for (int i = 0; i < (power < 0 ? -power : power); ++i) v = power < 0 ? v / pi : v * pi;
    return v;
  }
};

inline Rational binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return Rational(r);
}

inline Rational factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return Rational(r);
}

/// B_0 .. B_n from sum_{j=0}^{n} C(n+1, j) B_j = 0, with B_1 = -1/2.
inline std::vector<Rational> bernoulli_table(int n) {
  require(n >= 0, "bernoulli: n must be nonnegative");
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = Rational(1);
  for (int m = 1; m <= n; ++m) {
    Rational acc;
    for (int j = 0; j < m; ++j) acc += binomial(m + 1, j) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
  }
  return b;
}

inline Rational bernoulli(int n) { return bernoulli_table(n).back(); }

/// zeta(2n) = (-1)^(n+1) B_2n (2 pi)^2n / (2 (2n)!).
inline PiPower zeta_even(int n) {
  require(n >= 1, "zeta_even: n must be >= 1");
  Rational c = bernoulli(2 * n) * Rational(BigInt(1) << (2 * n)) / (Rational(2) * factorial(2 * n));
  if (n % 2 == 0) c = -c;
  return {c, 2 * n};
}

/// zeta(2n) through the convolution sum_{j=1}^{n-1} zeta(2j) zeta(2n-2j) =
/// (n + 1/2) zeta(2n), seeded with zeta(2) = pi^2/6. Shares nothing with the
/// Bernoulli route.
inline PiPower zeta_even_by_convolution(int n) {
  require(n >= 1, "zeta_even_by_convolution: n must be >= 1");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[1] = Rational::of(1, 6);
  for (int m = 2; m <= n; ++m) {
    Rational acc;
    for (int j = 1; j < m; ++j) acc += c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(m - j)];
    c[static_cast<std::size_t>(m)] = acc / Rational::of(2 * m + 1, 2);
  }
  return {c[static_cast<std::size_t>(n)], 2 * n};
}

/// 2 zeta(2m)^2 / zeta(4m) as a PiPower; the pi powers cancel.
inline PiPower moment_constant_pi(int m) {
  require(m >= 1, "moment_constant: m must be >= 1");
  const PiPower z = zeta_even(m);
  return PiPower{Rational(2), 0} * z * z / zeta_even(2 * m);
}

inline Rational moment_constant(int m) {
  const PiPower c = moment_constant_pi(m);
  if (c.power != 0) throw contract_error("moment_constant: pi powers failed to cancel");
  return c.coeff;
}

/// prod_{p | q} (1 - p^(-2m)).
inline Rational coprime_zeta_factor(std::int64_t q, int m) {
  require(q >= 1 && m >= 1, "coprime_zeta_factor: need q >= 1 and m >= 1");
  Rational f(1);
  for (const auto& [p, e] : factorize(q)) {
    const BigInt pp = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(2 * m));
    f *= Rational(pp - 1, pp);
  }
  return f;
}

/// sum_{q <= Q} F(q) / q^(2m) with F = coprime_zeta_factor.
inline Rational euler_product_partial(std::int64_t Q, int m) {
  require(Q >= 1 && m >= 1, "euler_product_partial: need Q >= 1 and m >= 1");
  Rational total;
  for (std::int64_t q = 1; q <= Q; ++q) {
    total += coprime_zeta_factor(q, m) / Rational(boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(2 * m)));
  }
  return total;
}

/// zeta(2m) / zeta(4m), the limit of euler_product_partial.
inline PiPower euler_product_limit(int m) { return zeta_even(m) / zeta_even(2 * m); }

/// sum_{n <= N} d(n)^2 / n^2, exact. Accumulated over the common
/// denominator lcm(1..N)^2 and reduced once.
inline Rational divisor_sum_partial(std::int64_t N) {
  require(N >= 1 && N <= 1'000'000, "divisor_sum_partial: N out of range");
  std::vector<std::int64_t> divisors(static_cast<std::size_t>(N) + 1, 0);
  for (std::int64_t d = 1; d <= N; ++d) {
    for (std::int64_t n = d; n <= N; n += d) ++divisors[static_cast<std::size_t>(n)];
  }
  // lcm(1..N) is the product of the largest prime powers <= N; a prime is
  // exactly an n with d(n) = 2.
  BigInt lcm = 1;
  for (std::int64_t p = 2; p <= N; ++p) {
    if (divisors[static_cast<std::size_t>(p)] != 2) continue;
    std::int64_t pk = p;
    while (pk <= N / p) pk *= p;
    lcm *= pk;
  }
  const BigInt denominator = lcm * lcm;
  BigInt numerator = 0;
  for (std::int64_t n = 1; n <= N; ++n) {
    const std::int64_t dn = divisors[static_cast<std::size_t>(n)];
    numerator += denominator / (static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n)) * (dn * dn);
  }
  return Rational(numerator, denominator);
}

/// zeta(2)^4 / zeta(4) = sum_n d(n)^2 / n^2.
inline PiPower divisor_sum_limit() {
  const PiPower z2 = zeta_even(1);
  return z2 * z2 * z2 * z2 / zeta_even(2);
}

}  // namespace dedekind

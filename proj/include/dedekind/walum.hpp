#pragma once

// Dirichlet characters modulo a prime, L(1, chi) by two independent routes,
// and the identity tying the fourth moment of L(1, chi) over odd characters
// to the second moment of Dedekind sums.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <tuple>
#include <vector>

#include "dedekind/constants.hpp"
#include "dedekind/error.hpp"
#include "dedekind/exact_arith.hpp"
#include "dedekind/moments.hpp"
#include "dedekind/parallel.hpp"

namespace dedekind {

using Complex = std::complex<Real>;

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  int128 result = 1, b = floor_mod(base, mod);
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

/// Smallest primitive root modulo the prime p.
inline std::int64_t primitive_root(std::int64_t p) {
  require(is_prime(p), "primitive_root: modulus must be prime");
  if (p == 2) return 1;
  const auto factors = factorize(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [q, e] : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw contract_error("primitive_root: none found for " + std::to_string(p));
}

/// All characters modulo a prime k: chi_j(a) = exp(2 pi i j ind(a) / (k-1)),
/// j = 0 .. k-2, with ind the discrete logarithm to `generator`. chi_j is
/// odd exactly when j is odd.
struct CharacterTable {
  std::int64_t k = 0;
  std::int64_t generator = 0;
  std::vector<std::int64_t> index;  // index[a] for 1 <= a < k
  std::vector<Complex> roots;       // exp(2 pi i t / (k-1))
  std::vector<Complex> unit_roots;  // exp(2 pi i a / k)
  std::vector<Complex> log_terms;   // log(1 - exp(2 pi i a / k)), a >= 1

  std::int64_t size() const { return k - 1; }

  Complex value(std::int64_t j, std::int64_t a) const {
    const std::int64_t r = floor_mod(a, k);
    if (r == 0) return 0;
    return roots[static_cast<std::size_t>((j * index[static_cast<std::size_t>(r)]) % (k - 1))];
  }

  static bool is_odd(std::int64_t j) { return j % 2 == 1; }
};

class Character {
 public:
  Character(const CharacterTable& table, std::int64_t j) : table_(&table), j_(j) {
    require(j >= 0 && j < table.size(), "Character: index out of range");
  }
  const CharacterTable& table() const { return *table_; }
  std::int64_t index() const { return j_; }
  Complex operator()(std::int64_t n) const { return table_->value(j_, n); }
  bool is_odd() const { return CharacterTable::is_odd(j_); }
  bool is_principal() const { return j_ == 0; }
  bool is_real() const { return (2 * j_) % table_->size() == 0; }

 private:
  const CharacterTable* table_;
  std::int64_t j_;
};

inline CharacterTable build_characters(std::int64_t k) {
  require(k >= 3 && is_prime(k), "build_characters: k must be an odd prime");
  CharacterTable t;
  t.k = k;
  t.generator = primitive_root(k);
  t.index.assign(static_cast<std::size_t>(k), 0);
  std::int64_t power = 1;
  for (std::int64_t e = 0; e < k - 1; ++e) {
    t.index[static_cast<std::size_t>(power)] = e;
    power = static_cast<std::int64_t>(static_cast<int128>(power) * t.generator % k);
  }
  const Real two_pi = 2 * std::numbers::pi_v<Real>;
  t.roots.reserve(static_cast<std::size_t>(k - 1));
  for (std::int64_t s = 0; s < k - 1; ++s) t.roots.push_back(std::polar<Real>(1, two_pi * s / (k - 1)));
  t.unit_roots.reserve(static_cast<std::size_t>(k));
  t.log_terms.reserve(static_cast<std::size_t>(k));
  for (std::int64_t a = 0; a < k; ++a) {
    const Real theta = two_pi * a / k;
    t.unit_roots.push_back(std::polar<Real>(1, theta));
    // 1 - e^{i theta} = 2 sin(theta/2) e^{i (theta - pi)/2} on (0, 2 pi).
    t.log_terms.push_back(a == 0 ? Complex(0) : Complex(std::log(2 * std::sin(theta / 2)), (theta - std::numbers::pi_v<Real>) / 2));
  }
  return t;
}

struct LValue {
  Complex value;        // closed form
  Complex series;       // accelerated Dirichlet series
  Real series_tail_bound;
  Real rel_diff;
};

namespace detail {

// sum_{n>=1} chi(n)/n for a nonprincipal chi, from the partial sum up to
// N = blocks * k plus repeated summation by parts on the tail. After j
// steps the tail is
//   sum_{i=1..j} mean(C_i) W_{i-1} + sum_{n>N} c_j(n) w_j(n),
// where C_i are the periodic partial sums of the mean-free c_{i-1},
// w_j(n) = j! / (n (n+1) ... (n+j)) and W_j = w_j(N+1); the last sum is at
// most max|c_j| W_{j-1}.
inline std::pair<Complex, Real> l_one_series(const Character& chi, std::int64_t blocks) {
  const std::int64_t k = chi.table().k;
  std::vector<Complex> c(static_cast<std::size_t>(k));
  for (std::int64_t r = 1; r <= k; ++r) c[static_cast<std::size_t>(r - 1)] = chi(r);

  Real re = 0, im = 0;
  for (std::int64_t b = 0; b < blocks; ++b) {
    for (std::int64_t r = 1; r < k; ++r) {
      const Real inv = 1 / static_cast<Real>(b * k + r);
      const Complex& v = c[static_cast<std::size_t>(r - 1)];
      re += v.real() * inv;
      im += v.imag() * inv;
    }
  }
  Complex sum(re, im);

  const auto N = static_cast<Real>(blocks * k);
  Real W = 1 / (N + 1);  // W_0
  Real bound = 0;
  constexpr int kMaxSteps = 40;
  for (int j = 1; j <= kMaxSteps; ++j) {
    Complex running = 0, mean = 0;
    for (auto& x : c) {
      running += x;
      x = running;
      mean += running;
    }
    mean /= static_cast<Real>(k);
    Real max_abs = 0;
    for (auto& x : c) {
      x -= mean;
      max_abs = std::max(max_abs, std::abs(x));
    }
    sum += mean * W;
    bound = max_abs * W;
    if (bound < 1e-18L) break;
    W = W * j / (N + 1 + j);
  }
  return {sum, bound};
}

inline Complex l_one_closed_form(const Character& chi) {
  const auto& t = chi.table();
  Complex gauss = 0, logs = 0;
  for (std::int64_t a = 1; a < t.k; ++a) {
    const Complex conj_chi = std::conj(chi(a));
    gauss += conj_chi * t.unit_roots[static_cast<std::size_t>(a)];
    logs += conj_chi * t.log_terms[static_cast<std::size_t>(a)];
  }
  return -logs / gauss;
}

}  // namespace detail

/// L(1, chi) for a nonprincipal character modulo a prime, by the
/// accelerated series and by the closed form
///   L(1, chi) = -(1 / tau(conj chi)) sum_a conj chi(a) log(1 - e(a/k)).
/// Throws contract_error when the two disagree beyond 1e-10 relative.
inline LValue l_one(const Character& chi) {
  require(!chi.is_principal(), "l_one: character must be nonprincipal");
  constexpr Real kTolerance = 1e-10L;
  std::int64_t blocks = 8;
  auto [series, tail] = detail::l_one_series(chi, blocks);
  while (tail > 1e-14L && blocks < 1024) {
    blocks *= 4;
    std::tie(series, tail) = detail::l_one_series(chi, blocks);
  }
  const Complex closed = detail::l_one_closed_form(chi);
  const Real rel = std::abs(series - closed) / std::abs(closed);
  if (!(rel <= kTolerance)) {
    throw contract_error("l_one: series and closed form disagree (rel " + std::to_string(static_cast<double>(rel)) +
                         ") for character " + std::to_string(chi.index()) + " mod " + std::to_string(chi.table().k));
  }
  return {closed, series, tail, rel};
}

/// sum over odd chi mod k of |L(1, chi)|^4, accumulated in character order.
inline Real odd_l_fourth_moment(const CharacterTable& table, unsigned threads = 0) {
  const std::int64_t odd_count = table.size() / 2;
  const auto fourth = parallel_map<Real>(0, odd_count, threads, [&](std::int64_t i) {
    const Real mod2 = std::norm(l_one(Character(table, 2 * i + 1)).value);
    return mod2 * mod2;
  });
  Real total = 0;
  for (Real v : fourth) total += v;
  return total;
}

struct WalumCheck {
  std::int64_t k;
  Real lhs_over_pi4;
  Rational rhs_over_pi4;  // (k-1)/k^2 * moment(k, 1)
  Real rel_diff;
};

inline WalumCheck walum_check(std::int64_t k, unsigned threads = 0) {
  require(k >= 3 && is_prime(k), "walum_check: k must be an odd prime");
  const CharacterTable table = build_characters(k);
  const Real pi = std::numbers::pi_v<Real>;
  const Real lhs = odd_l_fourth_moment(table, threads) / (pi * pi * pi * pi);
  Rational rhs = Rational::of(k - 1, static_cast<int128>(k) * k) * moment(k, 1, threads);
  const Real r = to_real(rhs);
  return {k, lhs, std::move(rhs), std::abs(lhs - r) / r};
}

/// sum over odd chi of |L(1, chi)|^4 divided by (k/2) zeta(2)^4/zeta(4).
inline Real heath_brown_ratio(std::int64_t k, unsigned threads = 0) {
  require(k >= 3 && is_prime(k), "heath_brown_ratio: k must be an odd prime");
  const CharacterTable table = build_characters(k);
  return odd_l_fourth_moment(table, threads) / (static_cast<Real>(k) / 2 * divisor_sum_limit().to_real());
}

}  // namespace dedekind

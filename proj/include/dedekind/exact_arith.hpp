#pragma once

// Exact integer and rational arithmetic, continued fractions, and the small
// amount of trial-division number theory the rest of the library leans on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dedekind/error.hpp"

namespace dedekind {

using BigInt = boost::multiprecision::cpp_int;
using int128 = __int128;

// High-precision real used for ratios and floating comparisons.
using Real = long double;
static_assert(std::numeric_limits<Real>::digits >= 60, "Real must carry at least 60 significant bits");

inline BigInt to_big(int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return negative ? BigInt(-r) : r;
}

// ---------------------------------------------------------------------------
// Integers

/// Nonnegative greatest common divisor; gcd(0, 0) = 0.
inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

/// Floor division and nonnegative remainder for a positive modulus.
inline std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

/// Inverse of a modulo n, in [1, n-1]. Throws when gcd(a, n) != 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  require(n > 1, "mod_inverse: modulus must be > 1");
  int128 old_r = floor_mod(a, n), r = n;
  int128 old_s = 1, s = 0;
  while (r != 0) {
    const int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) {
    throw precondition_error("mod_inverse: " + std::to_string(a) + " is not invertible modulo " + std::to_string(n));
  }
  int128 x = old_s % n;
  if (x < 0) x += n;
  return static_cast<std::int64_t>(x);
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t p = 3; p <= n / p; p += 2) {
    if (n % p == 0) return false;
  }
  return true;
}

struct PrimePower {
  std::int64_t prime;
  int exponent;
};

/// Trial-division factorization of n >= 1, primes in increasing order.
inline std::vector<PrimePower> factorize(std::int64_t n) {
  require(n >= 1, "factorize: n must be positive");
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

// ---------------------------------------------------------------------------
// Rational

/// Exact rational in canonical form: gcd(|num|, den) = 1 and den >= 1.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T n) : num_(n) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(BigInt n) : num_(std::move(n)) {}

  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  /// Fast path for machine-sized operands.
  static Rational of(int128 n, int128 d) {
    require(d != 0, "Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      const int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    Rational r;
    r.num_ = to_big(n);
    r.den_ = to_big(d);
    return r;
  }

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }

  /// Largest integer <= this.
  BigInt floor() const {
    BigInt q = num_ / den_;  // truncates toward zero
    if (num_.sign() < 0 && q * den_ != num_) q -= 1;
    return q;
  }

  Rational abs() const {
    Rational r = *this;
    if (r.num_.sign() < 0) r.num_ = -r.num_;
    return r;
  }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ *= o.den_;
    }
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    require(!o.is_zero(), "Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const int c = lhs.compare(BigInt(b.num_ * a.den_));
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// "num/den", or just "num" for integers.
  std::string to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
      return Rational(BigInt(std::string(text.substr(0, slash))), BigInt(std::string(text.substr(slash + 1))));
    } catch (const precondition_error&) {
      throw;
    } catch (const std::exception&) {
      throw precondition_error("cannot parse rational '" + std::string(text) + "'");
    }
  }

 private:
  void normalize() {
    require(!den_.is_zero(), "Rational: zero denominator");
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    if (den_ == 1) return;
    BigInt g = gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_{0};
  BigInt den_{1};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

inline Rational pow(Rational base, unsigned exponent) {
  return Rational(boost::multiprecision::pow(base.num(), exponent), boost::multiprecision::pow(base.den(), exponent));
}

/// Nearest Real to r (within one unit in the last place).
inline Real to_real(const Rational& r) {
  using boost::multiprecision::msb;
  if (r.is_zero()) return 0;
  const BigInt mag = boost::multiprecision::abs(r.num());
  // Scale so the integer quotient carries about 72 significant bits.
  const long shift = 72 - (static_cast<long>(msb(mag)) - static_cast<long>(msb(r.den())));
  const BigInt scaled = shift >= 0 ? BigInt((mag << shift) / r.den()) : BigInt(mag / (r.den() << -shift));
  const Real v = std::ldexp(scaled.convert_to<Real>(), static_cast<int>(-shift));
  return r.sign() < 0 ? -v : v;
}

// ---------------------------------------------------------------------------
// Continued fractions

/// Partial quotients <d0; d1, ..., dl> of a rational in [0, 1]. Canonical
/// form keeps the last quotient >= 2 except for 1/1 = <0; 1>.
struct ContinuedFraction {
  std::vector<std::int64_t> quotients;

  std::size_t length() const { return quotients.empty() ? 0 : quotients.size() - 1; }

  Rational value() const {
    if (quotients.empty()) return Rational(0);
    Rational v(quotients.back());
    for (auto it = quotients.rbegin() + 1; it != quotients.rend(); ++it) v = Rational(*it) + Rational(1) / v;
    return v;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < quotients.size(); ++i) {
      if (i == 1) {
        out += ';';
      } else if (i > 1) {
        out += ',';
      }
      out += std::to_string(quotients[i]);
    }
    return out + "]";
  }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Canonical expansion of a/q for 1 <= a <= q, gcd(a, q) = 1.
inline ContinuedFraction cf_expand(std::int64_t a, std::int64_t q) {
  require(q >= 1 && a >= 1 && a <= q, "cf_expand: need 1 <= a <= q");
  require(gcd(a, q) == 1, "cf_expand: a and q must be coprime");
  if (a == q) return {{0, 1}};
  ContinuedFraction cf;
  std::int64_t num = a, den = q;
  while (den != 0) {
    cf.quotients.push_back(num / den);
    num = std::exchange(den, num % den);
  }
  return cf;
}

/// Sum of d1..dl.
inline std::int64_t cf_partial_quotient_sum(const ContinuedFraction& cf) {
  std::int64_t total = 0;
  for (std::size_t i = 1; i < cf.quotients.size(); ++i) total += cf.quotients[i];
  return total;
}

}  // namespace dedekind

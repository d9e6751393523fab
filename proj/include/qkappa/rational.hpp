#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <sstream>
#include <string>

namespace qkappa {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline int sign_of(const Rational& r) { return r.sign(); }

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Integer power, negative exponents allowed for nonzero base.
inline Rational pow_rational(const Rational& base, long long e) {
  if (e < 0) return Rational(1) / pow_rational(base, -e);
  Rational acc(1), b = base;
  long long n = e;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt acc(1);
  for (long long j = 1; j <= k; ++j) {
    acc *= (n - k + j);
    acc /= j;
  }
  return acc;
}

inline std::optional<BigInt> exact_integer_root(const BigInt& n, unsigned k) {
  if (n < 0) return std::nullopt;
  if (n == 0 || n == 1 || k == 1) return n;
  BigInt lo(0), hi(1);
  while (boost::multiprecision::pow(hi, k) < n) hi <<= 1;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, k) < n)
      lo = mid + 1;
    else
      hi = mid;
  }
  return boost::multiprecision::pow(lo, k) == n ? std::optional<BigInt>(lo) : std::nullopt;
}

/// Exact positive k-th root of a positive rational, if one exists in Q.
inline std::optional<Rational> exact_root(const Rational& r, unsigned k) {
  if (r <= 0) return std::nullopt;
  auto num = exact_integer_root(boost::multiprecision::numerator(r), k);
  auto den = exact_integer_root(boost::multiprecision::denominator(r), k);
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

/// Renders "p/q", or "p" for integers.
inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

/// Always-two-part rendering "p/q" used in reports.
inline std::string to_fraction_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

inline Rational parse_rational(const std::string& text) { return Rational(text); }

}  // namespace qkappa

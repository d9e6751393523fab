#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qkappa/rational.hpp"

namespace qkappa {

/// Element of the cyclotomic field Q(zeta_m), stored in the power basis
/// 1, zeta, ..., zeta^(phi(m)-1) reduced modulo the m-th cyclotomic
/// polynomial. Equality is exact; elements of different orders are lifted to
/// the lcm order on demand.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& r) : order_(1), coeffs_(1, r) {}
  explicit Cyclotomic(int n) : order_(1), coeffs_(1, Rational(n)) {}

  /// zeta_m^k
  static Cyclotomic root_power(long long m, long long k);
  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return Cyclotomic(Rational(1)); }

  long long order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Valid only when is_rational().
  Rational rational_value() const { return coeffs_[0]; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const Rational& r) const;
  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  bool operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Complex conjugate (zeta -> zeta^-1).
  Cyclotomic conj() const;
  /// Exact inverse; throws std::domain_error on zero.
  Cyclotomic inverse() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  /// Re-express in Q(zeta_M); requires order() | M.
  Cyclotomic lifted(long long target_order) const;

 private:
  Cyclotomic(long long order, std::vector<Rational> reduced)
      : order_(order), coeffs_(std::move(reduced)) {}
  static Cyclotomic from_exponent_poly(long long order, const std::vector<Rational>& poly);
  /// Drop to order 1 when the value is rational.
  void compress();

  long long order_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& c) { return c * r; }

/// m-th cyclotomic polynomial, monic, as integer coefficients (degree phi(m)).
const std::vector<BigInt>& cyclotomic_polynomial(long long m);

long long euler_phi(long long m);

}  // namespace qkappa

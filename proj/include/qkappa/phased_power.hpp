#pragma once

#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include "qkappa/rational.hpp"

namespace qkappa {

/// Exact scalar zeta(k/m) * |mu|^e, where zeta(k/m) = exp(2*pi*i*k/m) and the
/// base |mu| > 0 is supplied externally at evaluation time. The root of unity
/// is kept in lowest terms and the modulus exponent is an exact rational, so
/// "is this a phase" is an integer question whenever |mu| != 1.
class PhasedPower {
 public:
  PhasedPower() : k_(0), m_(1), e_(0) {}
  PhasedPower(long long k, long long m, Rational e) : k_(k), m_(m), e_(std::move(e)) {
    normalize();
  }

  static PhasedPower one() { return PhasedPower(); }
  static PhasedPower minus_one() { return PhasedPower(1, 2, Rational(0)); }
  static PhasedPower modulus_power(Rational e) { return PhasedPower(0, 1, std::move(e)); }

  long long phase_numerator() const { return k_; }
  long long phase_order() const { return m_; }
  const Rational& modulus_exponent() const { return e_; }

  bool is_phase() const { return e_ == 0; }

  PhasedPower operator*(const PhasedPower& o) const {
    long long m = std::lcm(m_, o.m_);
    long long k = k_ * (m / m_) + o.k_ * (m / o.m_);
    return PhasedPower(k, m, e_ + o.e_);
  }

  PhasedPower inverse() const { return PhasedPower(-k_, m_, -e_); }

  PhasedPower pow(long long n) const {
    if (n < 0) return inverse().pow(-n);
    PhasedPower acc, base = *this;
    while (n > 0) {
      if (n & 1) acc = acc * base;
      base = base * base;
      n >>= 1;
    }
    return acc;
  }

  PhasedPower conj() const { return PhasedPower(-k_, m_, e_); }

  std::complex<double> evaluate(const Rational& mu_abs) const {
    double theta = 2.0 * M_PI * static_cast<double>(k_) / static_cast<double>(m_);
    double mod = std::pow(to_double(mu_abs), to_double(e_));
    return std::polar(mod, theta);
  }

  bool operator==(const PhasedPower& o) const {
    return k_ == o.k_ && m_ == o.m_ && e_ == o.e_;
  }
  bool operator!=(const PhasedPower& o) const { return !(*this == o); }

  /// Report rendering: "zeta(k/m)*|mu|^(p/q)".
  std::string to_string() const {
    return "zeta(" + std::to_string(k_) + "/" + std::to_string(m_) + ")*|mu|^(" +
           to_fraction_string(e_) + ")";
  }

 private:
  void normalize() {
    if (m_ < 0) {
      m_ = -m_;
      k_ = -k_;
    }
    k_ %= m_;
    if (k_ < 0) k_ += m_;
    long long g = std::gcd(k_, m_);
    if (g == 0) g = m_;  // k == 0
    k_ /= g;
    m_ /= g;
    if (k_ == 0) m_ = 1;
  }

  long long k_;
  long long m_;
  Rational e_;
};

inline PhasedPower pp_multiply(const PhasedPower& a, const PhasedPower& b) { return a * b; }
inline bool pp_is_phase(const PhasedPower& a) { return a.is_phase(); }
inline std::complex<double> pp_evaluate(const PhasedPower& a, const Rational& mu_abs) {
  return a.evaluate(mu_abs);
}

}  // namespace qkappa

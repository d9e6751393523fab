#pragma once

#include <optional>
#include <string>

#include "qkappa/approx.hpp"
#include "qkappa/cyclotomic.hpp"
#include "qkappa/phased_power.hpp"
#include "qkappa/rational.hpp"

namespace qkappa {

/// Uniform interface over the three scalar backends: exact rationals, exact
/// cyclotomics, and double-precision complex numbers. Arithmetic goes
/// through the types' own operators; the traits cover conversions, conjugation
/// and exact zero tests.
template <class S>
struct ScalarBackend;

template <>
struct ScalarBackend<Rational> {
  static constexpr bool exact = true;
  static const char* name() { return "rational"; }
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_rational(const Rational& r) { return r; }
  static Rational conj(const Rational& x) { return x; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Complex to_complex(const Rational& x) { return Complex(to_double(x), 0.0); }
  static std::optional<Rational> invert(const Rational& x) {
    if (x == 0) return std::nullopt;
    return Rational(1) / x;
  }
  /// Representable only when the phase is +-1 and |mu|^e is rational.
  static std::optional<Rational> from_phased(const PhasedPower& p, const Rational& mu_abs) {
    auto radical = exact_modulus_value(p.modulus_exponent(), mu_abs);
    if (!radical) return std::nullopt;
    if (p.phase_order() == 1) return *radical;
    if (p.phase_order() == 2) return -*radical;
    return std::nullopt;
  }

  /// |mu|^(p/q) as an exact rational, when the q-th root exists in Q.
  static std::optional<Rational> exact_modulus_value(const Rational& e, const Rational& mu_abs) {
    if (mu_abs <= 0) return std::nullopt;
    BigInt num = boost::multiprecision::numerator(e);
    BigInt den = boost::multiprecision::denominator(e);
    long long p = num.convert_to<long long>();
    unsigned q = den.convert_to<unsigned>();
    Rational base = pow_rational(mu_abs, p);
    return exact_root(base, q);
  }
};

template <>
struct ScalarBackend<Cyclotomic> {
  static constexpr bool exact = true;
  static const char* name() { return "cyclotomic"; }
  static Cyclotomic zero() { return Cyclotomic::zero(); }
  static Cyclotomic one() { return Cyclotomic::one(); }
  static Cyclotomic from_rational(const Rational& r) { return Cyclotomic(r); }
  static Cyclotomic conj(const Cyclotomic& x) { return x.conj(); }
  static bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
  static Complex to_complex(const Cyclotomic& x) { return x.to_complex(); }
  static std::optional<Cyclotomic> invert(const Cyclotomic& x) {
    if (x.is_zero()) return std::nullopt;
    return x.inverse();
  }
  static std::optional<Cyclotomic> from_phased(const PhasedPower& p, const Rational& mu_abs) {
    auto radical = ScalarBackend<Rational>::exact_modulus_value(p.modulus_exponent(), mu_abs);
    if (!radical) return std::nullopt;
    return Cyclotomic::root_power(p.phase_order(), p.phase_numerator()) * *radical;
  }
};

template <>
struct ScalarBackend<Complex> {
  static constexpr bool exact = false;
  static const char* name() { return "floating"; }
  static Complex zero() { return Complex(0.0, 0.0); }
  static Complex one() { return Complex(1.0, 0.0); }
  static Complex from_rational(const Rational& r) { return Complex(to_double(r), 0.0); }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
  static Complex to_complex(const Complex& x) { return x; }
  static std::optional<Complex> invert(const Complex& x) {
    if (is_zero(x)) return std::nullopt;
    return Complex(1.0, 0.0) / x;
  }
  static std::optional<Complex> from_phased(const PhasedPower& p, const Rational& mu_abs) {
    return p.evaluate(mu_abs);
  }
};

}  // namespace qkappa

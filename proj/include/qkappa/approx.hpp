#pragma once

#include <cmath>
#include <complex>

namespace qkappa {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

/// Tolerance scaled by the larger operand magnitude, floored at the absolute
/// default so comparisons against zero stay meaningful.
inline double scaled_tol(double scale, double tol = kDefaultTol) {
  return tol * std::max(1.0, scale);
}

inline bool approx_equal(const Complex& a, const Complex& b, double tol = kDefaultTol) {
  double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= scaled_tol(scale, tol);
}

inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace qkappa

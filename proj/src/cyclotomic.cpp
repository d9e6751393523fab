#include "qkappa/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qkappa {

namespace {

// Exact division of integer polynomials, remainder known to vanish.
std::vector<BigInt> divide_exact(const std::vector<BigInt>& num, const std::vector<BigInt>& den) {
  std::vector<BigInt> rem = num;
  std::vector<BigInt> quot(num.size() - den.size() + 1, BigInt(0));
  for (long long i = static_cast<long long>(rem.size()) - 1;
       i >= static_cast<long long>(den.size()) - 1; --i) {
    BigInt c = rem[i] / den.back();
    long long shift = i - (static_cast<long long>(den.size()) - 1);
    quot[shift] = c;
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j) rem[shift + j] -= c * den[j];
  }
  return quot;
}

std::map<long long, std::vector<BigInt>> g_phi_cache;
std::mutex g_phi_mutex;

const std::vector<BigInt>& phi_poly_locked(long long m) {
  auto it = g_phi_cache.find(m);
  if (it != g_phi_cache.end()) return it->second;
  std::vector<BigInt> poly;
  if (m == 1) {
    poly = {BigInt(-1), BigInt(1)};
  } else {
    // x^m - 1 divided by all proper-divisor cyclotomics.
    poly.assign(m + 1, BigInt(0));
    poly[0] = -1;
    poly[m] = 1;
    for (long long d = 1; d < m; ++d)
      if (m % d == 0) poly = divide_exact(poly, phi_poly_locked(d));
  }
  return g_phi_cache.emplace(m, std::move(poly)).first->second;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(long long m) {
  if (m <= 0) throw std::domain_error("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  return phi_poly_locked(m);
}

long long euler_phi(long long m) {
  return static_cast<long long>(cyclotomic_polynomial(m).size()) - 1;
}

Cyclotomic Cyclotomic::from_exponent_poly(long long order, const std::vector<Rational>& poly) {
  const auto& phi = cyclotomic_polynomial(order);
  const size_t deg = phi.size() - 1;
  std::vector<Rational> rem = poly;
  if (rem.size() < deg) rem.resize(deg, Rational(0));
  // Remainder modulo the monic integer polynomial phi.
  for (long long i = static_cast<long long>(rem.size()) - 1; i >= static_cast<long long>(deg);
       --i) {
    Rational c = rem[i];
    if (c == 0) continue;
    rem[i] = 0;
    long long shift = i - static_cast<long long>(deg);
    for (size_t j = 0; j < deg; ++j) rem[shift + j] -= c * Rational(phi[j]);
  }
  rem.resize(deg);
  Cyclotomic out(order, std::move(rem));
  out.compress();
  return out;
}

Cyclotomic Cyclotomic::root_power(long long m, long long k) {
  if (m <= 0) throw std::domain_error("root order must be positive");
  k %= m;
  if (k < 0) k += m;
  std::vector<Rational> poly(static_cast<size_t>(k) + 1, Rational(0));
  poly[static_cast<size_t>(k)] = 1;
  return from_exponent_poly(m, poly);
}

void Cyclotomic::compress() {
  if (order_ == 1) return;
  for (size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return;
  Rational c = coeffs_[0];
  order_ = 1;
  coeffs_.assign(1, c);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::lifted(long long target_order) const {
  if (target_order == order_) return *this;
  if (target_order % order_ != 0) throw std::domain_error("lift target must be a multiple");
  long long stride = target_order / order_;
  std::vector<Rational> poly(static_cast<size_t>((coeffs_.size() - 1) * stride + 1), Rational(0));
  for (size_t j = 0; j < coeffs_.size(); ++j) poly[j * stride] = coeffs_[j];
  return from_exponent_poly(target_order, poly);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long long m = std::lcm(order_, o.order_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  for (size_t j = 0; j < a.coeffs_.size(); ++j) a.coeffs_[j] += b.coeffs_[j];
  a.compress();
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  long long m = std::lcm(order_, o.order_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return from_exponent_poly(m, prod);
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c *= r;
  out.compress();
  return out;
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> poly(static_cast<size_t>(order_), Rational(0));
  poly[0] = coeffs_[0];
  for (size_t j = 1; j < coeffs_.size(); ++j)
    poly[static_cast<size_t>(order_) - j] += coeffs_[j];
  return from_exponent_poly(order_, poly);
}

namespace {

using QPoly = std::vector<Rational>;

size_t poly_degree(const QPoly& p) {
  size_t d = 0;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) d = i;
  return d;
}

bool poly_is_zero(const QPoly& p) {
  for (const auto& c : p)
    if (c != 0) return false;
  return true;
}

// Division with remainder over Q; returns {quotient, remainder}.
std::pair<QPoly, QPoly> poly_divmod(QPoly num, const QPoly& den) {
  size_t dd = poly_degree(den);
  QPoly quot(num.size(), Rational(0));
  for (long long i = static_cast<long long>(poly_degree(num)); i >= static_cast<long long>(dd);
       --i) {
    if (num[i] == 0) continue;
    Rational c = num[i] / den[dd];
    quot[i - dd] = c;
    for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return {quot, num};
}

QPoly poly_sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  // a - q*b
  QPoly out = a;
  size_t need = poly_degree(q) + poly_degree(b) + 1;
  if (out.size() < need) out.resize(need, Rational(0));
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] -= q[i] * b[j];
    }
  }
  return out;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);
  // Extended Euclid for f and the (irreducible) cyclotomic polynomial.
  const auto& phi_int = cyclotomic_polynomial(order_);
  QPoly r0(phi_int.size());
  for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
  QPoly r1 = coeffs_;
  QPoly s0(1, Rational(0)), s1(1, Rational(1));  // coefficients of f
  while (!poly_is_zero(r1)) {
    auto [q, rem] = poly_divmod(r0, r1);
    QPoly s2 = poly_sub_mul(s0, q, s1);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  // r0 = gcd (a nonzero constant since phi is irreducible and f nonzero).
  Rational g = r0[poly_degree(r0)];
  if (poly_degree(r0) != 0)
    throw std::logic_error("cyclotomic gcd not constant");
  QPoly inv = s0;
  for (auto& c : inv) c /= g;
  return from_exponent_poly(order_, inv);
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    double theta = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(order_);
    acc += to_double(coeffs_[j]) * std::polar(1.0, theta);
  }
  return acc;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (!first) os << " + ";
    os << qkappa::to_string(coeffs_[j]);
    if (j > 0) os << "*zeta(" << order_ << ")^" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace qkappa

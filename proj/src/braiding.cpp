#include "qkappa/braiding.hpp"

#include <algorithm>
#include <numeric>

#include "qkappa/exact_linalg.hpp"

namespace qkappa {

namespace {

// Scan for rho^j == target over a bounded exponent window.
std::optional<long long> match_power(const Rational& rho, const Rational& target) {
  if (rho == 1) return target == 1 ? std::optional<long long>(0) : std::nullopt;
  constexpr long long kMaxExp = 4096;
  Rational x(1);
  for (long long j = 0; j <= kMaxExp; ++j) {
    if (x == target) return j;
    x *= rho;
  }
  x = 1;
  for (long long j = 1; j <= kMaxExp; ++j) {
    x /= rho;
    if (x == target) return -j;
  }
  return std::nullopt;
}

}  // namespace

std::optional<PhasedPower> phased_from_rational_scalar(const Rational& value,
                                                       const Rational& mu_abs, int d) {
  if (value == 0) return std::nullopt;
  auto rho = exact_root(mu_abs, d);
  if (!rho) return std::nullopt;
  auto j = match_power(*rho, abs_of(value));
  if (!j) return std::nullopt;
  Rational e = mu_abs == 1 ? Rational(0) : Rational(*j, d);
  return value > 0 ? PhasedPower(0, 1, e) : PhasedPower(1, 2, e);
}

std::optional<PhasedPower> phased_from_cyclotomic_scalar(const Cyclotomic& value,
                                                         const Rational& mu_abs, int d) {
  if (value.is_rational()) return phased_from_rational_scalar(value.rational_value(), mu_abs, d);
  auto rho = exact_root(mu_abs, d);
  if (!rho) return std::nullopt;
  Cyclotomic norm_sq = value * value.conj();
  if (!norm_sq.is_rational()) return std::nullopt;
  auto j2 = match_power(*rho * *rho, norm_sq.rational_value());
  if (!j2) return std::nullopt;
  // |value| = rho^j with rho^(2j) = |value|^2.
  Cyclotomic phase = value * Cyclotomic(pow_rational(Rational(1) / *rho, *j2));
  long long order = std::lcm(phase.order(), 2LL);
  for (long long t = 0; t < order; ++t)
    if (phase == Cyclotomic::root_power(order, t)) {
      Rational e = mu_abs == 1 ? Rational(0) : Rational(*j2, d);
      return PhasedPower(t, order, e);
    }
  return std::nullopt;
}

CheckReport verify_conjugate_equations(const BraidingSpec& spec, long long threshold) {
  const int d = spec.d();
  check_threshold(pow_dim(d, d), threshold);
  CheckReport report;
  const Rational lambda_sq = Rational(1) / (quantum_factorial(d - 1, spec.params.q()) *
                                            pow_rational(spec.mu_abs(), d - 1));
  const Rational s(spec.rbar_sign());
  const auto S_col = determinant_vector(spec.params).column(0);
  const long long D = pow_dim(d, d - 1);

  // First equation: (Rbar* x 1_u)(1_u x R) contracted over the shared d
  // slots; entries K1[b][a] = s lambda^2 sum_t S[a,t] S[t,b].
  {
    DenseMatrix<Rational> k1(d, std::vector<Rational>(d, Rational(0)));
    for (int a = 0; a < d; ++a)
      for (long long t = 0; t < D; ++t) {
        const Rational& left = S_col[a * D + t];
        if (left == 0) continue;
        for (int b = 0; b < d; ++b) {
          const Rational& right = S_col[t * d + b];
          if (right != 0) k1[b][a] += s * lambda_sq * left * right;
        }
      }
    bool pass = true;
    double defect = 0.0;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        Rational expect = a == b ? Rational(1) : Rational(0);
        if (k1[b][a] != expect) pass = false;
        defect = std::max(defect, std::abs(to_double(k1[b][a] - expect)));
      }
    report.add("braiding", "conjugate equation on u", pass, defect);
  }

  // Second equation, compressed by E_(d-1):
  // K2[y][x] = s lambda^2 sum_a S[x,a] S[a,y]; then E K2 E = E.
  {
    TensorOp<Rational> k2(d, d - 1, d - 1);
    for (long long x = 0; x < D; ++x)
      for (int a = 0; a < d; ++a) {
        const Rational& left = S_col[x * d + a];
        if (left == 0) continue;
        for (long long y = 0; y < D; ++y) {
          const Rational& right = S_col[a * D + y];
          if (right != 0) k2.set(y, x, k2.get(y, x) + s * lambda_sq * left * right);
        }
      }
    auto E = antisymmetrizer(spec.params, d - 1, threshold);
    auto lhs = E.compose(k2).compose(E);
    bool pass = lhs == E;
    report.add("braiding", "conjugate equation on ubar (E-compressed)", pass,
               lhs.max_abs_diff(E));
  }
  return report;
}

std::vector<std::pair<Complex, int>> kappa_spectrum(const BraidingSpec& spec, int n,
                                                    long long threshold) {
  auto op = kappa_power_via_sigma<Complex>(spec, n, threshold);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(op.to_complex_matrix());
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue solver failed");
  std::vector<Complex> values(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + solver.eigenvalues().size());
  double scale = 1.0;
  for (const auto& v : values) scale = std::max(scale, std::abs(v));
  const double tol = 1e-8 * scale;
  std::sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  std::vector<std::pair<Complex, int>> clusters;
  for (const auto& v : values) {
    if (!clusters.empty() && std::abs(v - clusters.back().first) <= tol)
      ++clusters.back().second;
    else
      clusters.push_back({v, 1});
  }
  return clusters;
}

namespace {

void enumerate_partitions(int remaining, int max_part, int max_rows, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_rows) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    enumerate_partitions(remaining - part, part, max_rows, cur, out);
    cur.pop_back();
  }
}

long long hook_count_tableaux(const std::vector<int>& shape, int n) {
  // n! / product of hook lengths
  Rational acc = Rational(1);
  for (int f = 2; f <= n; ++f) acc *= f;
  for (size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j) {
      int arm = shape[i] - j - 1;
      int leg = 0;
      for (size_t r = i + 1; r < shape.size(); ++r)
        if (shape[r] > j) ++leg;
      acc /= (arm + leg + 1);
    }
  return acc.convert_to<long long>();
}

long long irrep_dimension(const std::vector<int>& shape, int d) {
  // product over cells of (d + j - i) / hook(i, j)
  Rational acc(1);
  for (size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j) {
      int arm = shape[i] - j - 1;
      int leg = 0;
      for (size_t r = i + 1; r < shape.size(); ++r)
        if (shape[r] > j) ++leg;
      acc *= Rational(d + j - static_cast<int>(i), arm + leg + 1);
    }
  return acc.convert_to<long long>();
}

}  // namespace

IdentityCheck spectrum_weights_check(const BraidingSpec& spec, int n, long long threshold) {
  IdentityCheck check;
  check.suite = "braiding";
  check.name = "spectrum moduli match weight exponents (n=" + std::to_string(n) + ")";
  auto clusters = kappa_spectrum(spec, n, threshold);
  // Fold eigenvalue clusters into modulus classes.
  std::vector<std::pair<double, long long>> moduli;
  for (const auto& [value, mult] : clusters) {
    double m = std::abs(value);
    bool merged = false;
    for (auto& [mod, count] : moduli)
      if (std::abs(mod - m) <= 1e-7 * std::max(1.0, mod)) {
        count += mult;
        merged = true;
        break;
      }
    if (!merged) moduli.push_back({m, mult});
  }
  // Merge the weight-side prediction by modulus value (classes can collide
  // only in the degenerate |mu| = 1 control case).
  std::vector<std::pair<double, long long>> expected;
  for (const auto& [exponent, mult] : expected_kappa_moduli(spec.d(), n)) {
    double want = std::pow(to_double(spec.mu_abs()), to_double(exponent));
    bool merged = false;
    for (auto& [mod, count] : expected)
      if (std::abs(mod - want) <= 1e-7 * std::max(1.0, mod)) {
        count += mult;
        merged = true;
        break;
      }
    if (!merged) expected.push_back({want, mult});
  }
  bool pass = moduli.size() == expected.size();
  double worst = 0.0;
  for (const auto& [want, mult] : expected) {
    bool found = false;
    for (const auto& [mod, count] : moduli)
      if (std::abs(mod - want) <= 1e-6 * std::max(1.0, want)) {
        worst = std::max(worst, std::abs(mod - want));
        if (count != mult) pass = false;
        found = true;
        break;
      }
    if (!found) pass = false;
  }
  check.pass = pass;
  check.defect = worst;
  return check;
}

std::vector<std::pair<Rational, long long>> expected_kappa_moduli(int d, int n) {
  std::vector<std::vector<int>> shapes;
  std::vector<int> cur;
  enumerate_partitions(n, n, d, cur, shapes);
  auto rd = root_datum({Series::A, d - 1});
  std::map<Rational, long long> acc;
  for (const auto& shape : shapes) {
    std::vector<int> padded(d, 0);
    for (size_t i = 0; i < shape.size(); ++i) padded[i] = shape[i];
    DominantWeight w;
    w.coords.resize(d - 1);
    for (int i = 0; i + 1 < d; ++i) w.coords[i] = padded[i] - padded[i + 1];
    long long mult = hook_count_tableaux(shape, n) * irrep_dimension(shape, d);
    acc[casimir_exponent(rd, w)] += mult;
  }
  return {acc.begin(), acc.end()};
}

}  // namespace qkappa

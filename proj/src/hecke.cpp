#include "qkappa/hecke.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qkappa/exact_linalg.hpp"

namespace qkappa {

Rational quantum_integer(int k, const Rational& q) {
  Rational acc(0), p(1);
  for (int j = 0; j < k; ++j) {
    acc += p;
    p *= q;
  }
  return acc;
}

Rational quantum_factorial(int n, const Rational& q) {
  Rational acc(1);
  for (int k = 1; k <= n; ++k) acc *= quantum_integer(k, q);
  return acc;
}

std::vector<Rational> jw_local_dense(const HeckeParams& p, int exp) {
  const int d = p.d, d2 = d * d;
  const Rational q = p.q();
  std::vector<Rational> m(static_cast<size_t>(d2) * d2, Rational(0));
  auto at = [&](int row, int col) -> Rational& { return m[static_cast<size_t>(row) * d2 + col]; };
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const int col = a * d + b;
      if (a == b) {
        at(col, col) = 1;
      } else {
        at(b * d + a, col) = p.mu;
        if (a > b) at(col, col) = Rational(1) - q;
      }
    }
  if (exp == 1) return m;
  // g^-1 = (g - (1-q)) / q, from the quadratic relation.
  std::vector<Rational> inv(m.size());
  const Rational one_minus_q = Rational(1) - q;
  for (int r = 0; r < d2; ++r)
    for (int c = 0; c < d2; ++c) {
      Rational v = m[static_cast<size_t>(r) * d2 + c];
      if (r == c) v -= one_minus_q;
      inv[static_cast<size_t>(r) * d2 + c] = v / q;
    }
  return inv;
}

TensorOp<Rational> jw_generator(const HeckeParams& p, int i, int n, long long threshold) {
  if (i < 1 || i > n - 1)
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range for " +
                            std::to_string(n) + " strands");
  check_threshold(pow_dim(p.d, n), threshold);
  LocalChain<Rational> chain(p.d, n);
  chain.push_outer(LocalChain<Rational>::make_factor(i, p.d, jw_local_dense(p)));
  return chain.materialize(threshold);
}

LocalChain<Rational> braid_chain(const HeckeParams& p, const BraidWord& w, int n) {
  if (w.max_index() > n - 1) throw std::out_of_range("braid word index exceeds strand count");
  LocalChain<Rational> chain(p.d, n);
  for (const auto& l : w.letters)
    chain.push_outer(LocalChain<Rational>::make_factor(l.index, p.d, jw_local_dense(p, l.exp)));
  return chain;
}

TensorOp<Rational> represent_word(const HeckeParams& p, const BraidWord& w, int n,
                                  long long threshold) {
  check_threshold(pow_dim(p.d, n), threshold);
  return braid_chain(p, w, n).materialize(threshold);
}

TensorOp<Rational> determinant_vector(const HeckeParams& p) {
  const int d = p.d;
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Rational> column(pow_dim(d, d), Rational(0));
  do {
    int inversions = 0;
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        if (perm[a] > perm[b]) ++inversions;
    long long idx = 0;
    for (int k = 0; k < d; ++k) idx = idx * d + perm[k];
    column[idx] = pow_rational(-p.mu, inversions);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return TensorOp<Rational>::from_column(d, d, column);
}

std::vector<std::vector<Rational>> wedge_basis(const HeckeParams& p, int k) {
  const int d = p.d;
  const Rational q = p.q();
  std::vector<std::vector<Rational>> basis;
  for (int a = 0; a < d; ++a) {
    std::vector<Rational> e(d, Rational(0));
    e[a] = 1;
    basis.push_back(std::move(e));
  }
  const auto local = jw_local_dense(p);
  for (int j = 1; j < k; ++j) {
    if (basis.empty()) break;
    const long long dim = pow_dim(d, j + 1);
    // Candidates span the previous wedge space tensor C^d.
    std::vector<std::vector<Rational>> cand;
    cand.reserve(basis.size() * d);
    for (const auto& b : basis)
      for (int a = 0; a < d; ++a) {
        std::vector<Rational> v(dim, Rational(0));
        for (long long x = 0; x < static_cast<long long>(b.size()); ++x)
          if (b[x] != 0) v[x * d + a] = b[x];
        cand.push_back(std::move(v));
      }
    // Apply (g_j + q) on slots j, j+1 and intersect kernels.
    LocalChain<Rational> chain(d, j + 1);
    chain.push_outer(LocalChain<Rational>::make_factor(j, d, local));
    std::vector<std::vector<Rational>> images;
    images.reserve(cand.size());
    std::map<long long, int> row_index;
    for (const auto& v : cand) {
      auto y = chain.apply(v);
      for (long long x = 0; x < dim; ++x) {
        y[x] += q * v[x];
        if (y[x] != 0 && !row_index.count(x)) row_index.emplace(x, 0);
      }
      images.push_back(std::move(y));
    }
    int next = 0;
    for (auto& [row, pos] : row_index) pos = next++;
    std::vector<std::vector<Rational>> combos;
    if (row_index.empty()) {
      // All candidates already in the kernel.
      for (size_t c = 0; c < cand.size(); ++c) {
        std::vector<Rational> e(cand.size(), Rational(0));
        e[c] = 1;
        combos.push_back(std::move(e));
      }
    } else {
      DenseMatrix<Rational> m(row_index.size(), std::vector<Rational>(cand.size(), Rational(0)));
      for (size_t c = 0; c < images.size(); ++c)
        for (const auto& [row, pos] : row_index) m[pos][c] = images[c][row];
      combos = null_space(m);
    }
    std::vector<std::vector<Rational>> refined;
    for (const auto& combo : combos) {
      std::vector<Rational> v(dim, Rational(0));
      for (size_t c = 0; c < cand.size(); ++c) {
        if (combo[c] == 0) continue;
        for (long long x = 0; x < dim; ++x)
          if (cand[c][x] != 0) v[x] += combo[c] * cand[c][x];
      }
      refined.push_back(std::move(v));
    }
    basis = std::move(refined);
  }
  return basis;
}

TensorOp<Rational> antisymmetrizer(const HeckeParams& p, int k, long long threshold) {
  if (k < 0) throw std::out_of_range("antisymmetrizer degree must be non-negative");
  if (k <= 1) return TensorOp<Rational>::identity(p.d, k);
  check_threshold(pow_dim(p.d, k), threshold);
  auto basis = wedge_basis(p, k);
  TensorOp<Rational> out(p.d, k, k);
  if (basis.empty()) return out;
  const int c = static_cast<int>(basis.size());
  DenseMatrix<Rational> gram(c, std::vector<Rational>(c, Rational(0)));
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      for (size_t x = 0; x < basis[i].size(); ++x)
        if (basis[i][x] != 0 && basis[j][x] != 0) gram[i][j] += basis[i][x] * basis[j][x];
  auto gram_inv = inverse_of(gram);
  if (!gram_inv) throw std::logic_error("wedge basis Gram matrix singular");
  // E = B (B^t B)^-1 B^t, accumulated over the sparse wedge supports.
  std::map<long long, std::map<long long, Rational>> acc;
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) {
      const Rational& w = (*gram_inv)[i][j];
      if (w == 0) continue;
      for (size_t x = 0; x < basis[i].size(); ++x) {
        if (basis[i][x] == 0) continue;
        auto& row = acc[static_cast<long long>(x)];
        for (size_t y = 0; y < basis[j].size(); ++y)
          if (basis[j][y] != 0) row[static_cast<long long>(y)] += basis[i][x] * w * basis[j][y];
      }
    }
  for (const auto& [x, row] : acc)
    for (const auto& [y, v] : row)
      if (v != 0) out.set(x, y, v);
  return out;
}

CheckReport verify_S_relations(const HeckeParams& p, long long threshold) {
  const int d = p.d;
  check_threshold(pow_dim(d, d + 1), threshold);
  const Rational q = p.q();
  CheckReport report;
  const auto S = determinant_vector(p);
  const auto Sstar = S.adjoint();
  const auto id_u = TensorOp<Rational>::identity(d, 1);

  {
    auto lhs = Sstar.compose(S);
    auto rhs = TensorOp<Rational>::identity(d, 0).scaled(quantum_factorial(d, q));
    report.add("hecke", "S* . S = d!_q", lhs == rhs, lhs.max_abs_diff(rhs));
  }
  {
    auto lhs = S.compose(Sstar);
    auto rhs = antisymmetrizer(p, d, threshold).scaled(quantum_factorial(d, q));
    report.add("hecke", "S . S* = d!_q E_d", lhs == rhs, lhs.max_abs_diff(rhs));
  }
  {
    auto lhs = Sstar.tensor(id_u).compose(id_u.tensor(S));
    Rational c = quantum_factorial(d - 1, q) * pow_rational(-p.mu, d - 1);
    auto rhs = id_u.scaled(c);
    report.add("hecke", "S*x1 . 1xS = (d-1)!_q (-mu)^(d-1)", lhs == rhs, lhs.max_abs_diff(rhs));
  }
  {
    BraidWord w;
    for (int i = 1; i <= d; ++i) w.append(i);
    auto lhs = represent_word(p, w, d + 1, threshold).compose(S.tensor(id_u));
    auto rhs = id_u.tensor(S).scaled(pow_rational(p.mu, d - 1));
    report.add("hecke", "g_1..g_d . Sx1 = mu^(d-1) 1xS", lhs == rhs, lhs.max_abs_diff(rhs));
  }
  {
    bool pass = true;
    double defect = 0.0;
    for (int i = 1; i <= d - 1; ++i) {
      auto lhs = jw_generator(p, i, d, threshold).compose(S);
      auto rhs = S.scaled(-q);
      pass = pass && lhs == rhs;
      defect = std::max(defect, lhs.max_abs_diff(rhs));
    }
    report.add("hecke", "g_i S = -q S", pass, defect);
  }
  return report;
}

}  // namespace qkappa

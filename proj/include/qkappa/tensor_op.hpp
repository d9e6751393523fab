#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qkappa/errors.hpp"
#include "qkappa/scalar_backend.hpp"

namespace qkappa {

inline long long pow_dim(int d, int n) {
  long long out = 1;
  for (int i = 0; i < n; ++i) out *= d;
  return out;
}

inline void check_threshold(long long dim, long long threshold) {
  if (dim > threshold) throw ResourceError(dim, threshold);
}

/// Arrow between tensor powers (C^d)^(dom_pow) -> (C^d)^(cod_pow), stored as
/// a sparse matrix over one of the scalar backends. Basis order is
/// lexicographic in the index tuple, slot 1 most significant.
template <class S>
class TensorOp {
 public:
  using Entry = std::pair<long long, S>;

  TensorOp() : d_(1), dom_pow_(0), cod_pow_(0), rows_(1) {}
  TensorOp(int d, int dom_pow, int cod_pow)
      : d_(d), dom_pow_(dom_pow), cod_pow_(cod_pow), rows_(pow_dim(d, cod_pow)) {}

  static TensorOp identity(int d, int n) {
    TensorOp op(d, n, n);
    for (long long i = 0; i < op.cod_dim(); ++i) op.rows_[i].push_back({i, ScalarBackend<S>::one()});
    return op;
  }

  static TensorOp from_column(int d, int cod_pow, const std::vector<S>& column) {
    TensorOp op(d, 0, cod_pow);
    assert(static_cast<long long>(column.size()) == op.cod_dim());
    for (long long i = 0; i < op.cod_dim(); ++i)
      if (!ScalarBackend<S>::is_zero(column[i])) op.rows_[i].push_back({0, column[i]});
    return op;
  }

  int d() const { return d_; }
  int dom_pow() const { return dom_pow_; }
  int cod_pow() const { return cod_pow_; }
  long long dom_dim() const { return pow_dim(d_, dom_pow_); }
  long long cod_dim() const { return pow_dim(d_, cod_pow_); }
  const std::vector<Entry>& row(long long i) const { return rows_[i]; }

  void set(long long r, long long c, const S& v) {
    auto& row = rows_[r];
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (it->first == c) {
        if (ScalarBackend<S>::is_zero(v))
          row.erase(it);
        else
          it->second = v;
        return;
      }
      if (it->first > c) {
        if (!ScalarBackend<S>::is_zero(v)) row.insert(it, {c, v});
        return;
      }
    }
    if (!ScalarBackend<S>::is_zero(v)) row.push_back({c, v});
  }

  S get(long long r, long long c) const {
    for (const auto& [col, v] : rows_[r])
      if (col == c) return v;
    return ScalarBackend<S>::zero();
  }

  /// this o rhs (apply rhs first).
  TensorOp compose(const TensorOp& rhs) const {
    if (rhs.cod_pow_ != dom_pow_ || rhs.d_ != d_)
      throw std::invalid_argument("composition power mismatch");
    TensorOp out(d_, rhs.dom_pow_, cod_pow_);
    for (long long i = 0; i < cod_dim(); ++i) {
      std::map<long long, S> acc;
      for (const auto& [j, a] : rows_[i])
        for (const auto& [k, b] : rhs.rows_[j]) {
          auto it = acc.find(k);
          if (it == acc.end())
            acc.emplace(k, a * b);
          else
            it->second = it->second + a * b;
        }
      auto& row = out.rows_[i];
      for (auto& [k, v] : acc)
        if (!ScalarBackend<S>::is_zero(v)) row.push_back({k, v});
    }
    return out;
  }

  TensorOp tensor(const TensorOp& rhs) const {
    if (rhs.d_ != d_) throw std::invalid_argument("tensor dimension mismatch");
    TensorOp out(d_, dom_pow_ + rhs.dom_pow_, cod_pow_ + rhs.cod_pow_);
    const long long rdom = rhs.dom_dim();
    for (long long i = 0; i < cod_dim(); ++i)
      for (long long i2 = 0; i2 < rhs.cod_dim(); ++i2) {
        auto& row = out.rows_[i * rhs.cod_dim() + i2];
        for (const auto& [j, a] : rows_[i])
          for (const auto& [j2, b] : rhs.rows_[i2]) row.push_back({j * rdom + j2, a * b});
      }
    return out;
  }

  TensorOp adjoint() const {
    TensorOp out(d_, cod_pow_, dom_pow_);
    for (long long i = 0; i < cod_dim(); ++i)
      for (const auto& [j, v] : rows_[i]) out.rows_[j].push_back({i, ScalarBackend<S>::conj(v)});
    for (auto& row : out.rows_)
      std::sort(row.begin(), row.end(),
                [](const Entry& a, const Entry& b) { return a.first < b.first; });
    return out;
  }

  TensorOp scaled(const S& c) const {
    TensorOp out(d_, dom_pow_, cod_pow_);
    if (ScalarBackend<S>::is_zero(c)) return out;
    for (long long i = 0; i < cod_dim(); ++i) {
      out.rows_[i].reserve(rows_[i].size());
      for (const auto& [j, v] : rows_[i]) {
        S w = v * c;
        if (!ScalarBackend<S>::is_zero(w)) out.rows_[i].push_back({j, w});
      }
    }
    return out;
  }

  TensorOp operator+(const TensorOp& o) const { return combined(o, false); }
  TensorOp operator-(const TensorOp& o) const { return combined(o, true); }

  bool operator==(const TensorOp& o) const {
    if (d_ != o.d_ || dom_pow_ != o.dom_pow_ || cod_pow_ != o.cod_pow_) return false;
    return (*this - o).is_zero();
  }

  bool is_zero() const {
    for (const auto& row : rows_)
      if (!row.empty()) return false;
    return true;
  }

  long long nnz() const {
    long long n = 0;
    for (const auto& row : rows_) n += static_cast<long long>(row.size());
    return n;
  }

  std::vector<S> apply(const std::vector<S>& x) const {
    assert(static_cast<long long>(x.size()) == dom_dim());
    std::vector<S> y(cod_dim(), ScalarBackend<S>::zero());
    for (long long i = 0; i < cod_dim(); ++i)
      for (const auto& [j, v] : rows_[i]) y[i] = y[i] + v * x[j];
    return y;
  }

  std::vector<S> column(long long c) const {
    std::vector<S> out(cod_dim(), ScalarBackend<S>::zero());
    for (long long i = 0; i < cod_dim(); ++i)
      for (const auto& [j, v] : rows_[i])
        if (j == c) out[i] = v;
    return out;
  }

  /// Operator norm estimate: max column 1-norm of |entries|.
  double col_norm() const {
    std::vector<double> sums(dom_dim(), 0.0);
    for (const auto& row : rows_)
      for (const auto& [j, v] : row) sums[j] += std::abs(ScalarBackend<S>::to_complex(v));
    double best = 0.0;
    for (double s : sums) best = std::max(best, s);
    return best;
  }

  double max_abs_diff(const TensorOp& o) const {
    TensorOp diff = *this - o;
    double best = 0.0;
    for (const auto& row : diff.rows_)
      for (const auto& [j, v] : row)
        best = std::max(best, std::abs(ScalarBackend<S>::to_complex(v)));
    return best;
  }

  Eigen::MatrixXcd to_complex_matrix() const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(cod_dim(), dom_dim());
    for (long long i = 0; i < cod_dim(); ++i)
      for (const auto& [j, v] : rows_[i]) m(i, j) = ScalarBackend<S>::to_complex(v);
    return m;
  }

 private:
  TensorOp combined(const TensorOp& o, bool subtract) const {
    if (d_ != o.d_ || dom_pow_ != o.dom_pow_ || cod_pow_ != o.cod_pow_)
      throw std::invalid_argument("shape mismatch");
    TensorOp out(d_, dom_pow_, cod_pow_);
    for (long long i = 0; i < cod_dim(); ++i) {
      std::map<long long, S> acc;
      for (const auto& [j, v] : rows_[i]) acc.emplace(j, v);
      for (const auto& [j, v] : o.rows_[i]) {
        S w = subtract ? S(-v) : v;
        auto it = acc.find(j);
        if (it == acc.end())
          acc.emplace(j, w);
        else
          it->second = it->second + w;
      }
      for (auto& [j, v] : acc)
        if (!ScalarBackend<S>::is_zero(v)) out.rows_[i].push_back({j, v});
    }
    return out;
  }

  int d_;
  int dom_pow_;
  int cod_pow_;
  std::vector<std::vector<Entry>> rows_;
};

/// Re-express a rational operator over another scalar backend.
template <class T>
TensorOp<T> convert_rational_op(const TensorOp<Rational>& op) {
  TensorOp<T> out(op.d(), op.dom_pow(), op.cod_pow());
  for (long long i = 0; i < op.cod_dim(); ++i)
    for (const auto& [j, v] : op.row(i)) out.set(i, j, ScalarBackend<T>::from_rational(v));
  return out;
}

/// Identity-padded local two-slot factors composed lazily; the matrix-free
/// route for tensor powers past the materialization threshold.
template <class S>
class LocalChain {
 public:
  struct Factor {
    int slot;                                        // acts on slots slot, slot+1 (1-based)
    std::vector<std::vector<std::pair<int, S>>> rows;  // d^2 sparse rows
  };

  LocalChain(int d, int n) : d_(d), n_(n) {}

  int d() const { return d_; }
  int strands() const { return n_; }
  long long dim() const { return pow_dim(d_, n_); }
  size_t size() const { return factors_.size(); }

  /// Factors are stored outermost-first: apply() runs back-to-front.
  void push_outer(Factor f) { factors_.push_back(std::move(f)); }
  void push_inner_list(const LocalChain& other) {
    for (const auto& f : other.factors_) factors_.push_back(f);
  }

  static typename LocalChain::Factor make_factor(int slot, int d, const std::vector<S>& dense) {
    Factor f;
    f.slot = slot;
    const int d2 = d * d;
    f.rows.resize(d2);
    for (int r = 0; r < d2; ++r)
      for (int c = 0; c < d2; ++c)
        if (!ScalarBackend<S>::is_zero(dense[r * d2 + c])) f.rows[r].push_back({c, dense[r * d2 + c]});
    return f;
  }

  std::vector<S> apply(std::vector<S> x) const {
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) apply_factor(*it, x);
    return x;
  }

  TensorOp<S> materialize(long long threshold) const {
    check_threshold(dim(), threshold);
    TensorOp<S> out = TensorOp<S>::identity(d_, n_);
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
      out = padded_factor(*it).compose(out);
    return out;
  }

 private:
  TensorOp<S> padded_factor(const Factor& f) const {
    TensorOp<S> out(d_, n_, n_);
    const long long right = pow_dim(d_, n_ - f.slot - 1);
    const long long prefixes = pow_dim(d_, f.slot - 1);
    const int d2 = d_ * d_;
    for (long long p = 0; p < prefixes; ++p)
      for (int out_local = 0; out_local < d2; ++out_local)
        for (const auto& [in_local, v] : f.rows[out_local])
          for (long long t = 0; t < right; ++t)
            out.set((p * d2 + out_local) * right + t, (p * d2 + in_local) * right + t, v);
    return out;
  }

  void apply_factor(const Factor& f, std::vector<S>& x) const {
    const long long right = pow_dim(d_, n_ - f.slot - 1);
    const long long prefixes = pow_dim(d_, f.slot - 1);
    const int d2 = d_ * d_;
    std::vector<S> local(d2, ScalarBackend<S>::zero());
    for (long long p = 0; p < prefixes; ++p) {
      const long long base = p * d2 * right;
      for (long long t = 0; t < right; ++t) {
        for (int a = 0; a < d2; ++a) local[a] = x[base + a * right + t];
        for (int out = 0; out < d2; ++out) {
          S acc = ScalarBackend<S>::zero();
          for (const auto& [in, v] : f.rows[out]) acc = acc + v * local[in];
          x[base + out * right + t] = acc;
        }
      }
    }
  }

  int d_;
  int n_;
  std::vector<Factor> factors_;
};

}  // namespace qkappa

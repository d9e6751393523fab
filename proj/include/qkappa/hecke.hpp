#pragma once

#include <vector>

#include "qkappa/checks.hpp"
#include "qkappa/rational.hpp"
#include "qkappa/tensor_op.hpp"

namespace qkappa {

inline constexpr long long kDefaultThreshold = 4096;

struct HeckeParams {
  int d;
  Rational mu;

  HeckeParams(int d_, Rational mu_) : d(d_), mu(std::move(mu_)) {
    if (d < 2) throw ConfigError("d must be at least 2");
    if (mu == 0) throw ConfigError("mu must be nonzero");
  }
  Rational q() const { return mu * mu; }
  Rational mu_abs() const { return abs_of(mu); }
};

struct BraidLetter {
  int index;  // generator g_index, 1-based
  int exp;    // +1 or -1
};

struct BraidWord {
  std::vector<BraidLetter> letters;

  static BraidWord generator(int i, int exp = 1) { return BraidWord{{{i, exp}}}; }
  BraidWord& append(int i, int exp = 1) {
    letters.push_back({i, exp});
    return *this;
  }
  BraidWord& append(const BraidWord& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
    return *this;
  }
  BraidWord inverse() const {
    BraidWord out;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      out.letters.push_back({it->index, -it->exp});
    return out;
  }
  BraidWord shifted(int offset) const {
    BraidWord out = *this;
    for (auto& l : out.letters) l.index += offset;
    return out;
  }
  int max_index() const {
    int m = 0;
    for (const auto& l : letters) m = std::max(m, l.index);
    return m;
  }
};

/// Positive braid lift of the block transposition moving the first m strands
/// past the last n: (g_n ... g_1)(g_(n+1) ... g_2) ... (g_(n+m-1) ... g_m).
inline BraidWord shuffle_word(int m, int n) {
  BraidWord w;
  for (int b = 0; b < m; ++b)
    for (int i = n + b; i >= b + 1; --i) w.append(i);
  return w;
}

/// [k]_q = 1 + q + ... + q^(k-1)
Rational quantum_integer(int k, const Rational& q);
/// n!_q = [1]_q [2]_q ... [n]_q
Rational quantum_factorial(int n, const Rational& q);

/// Dense d^2 x d^2 matrix of the elementary two-slot generator (row-major);
/// exp selects the generator or its exact inverse.
std::vector<Rational> jw_local_dense(const HeckeParams& p, int exp = 1);

/// The generator on n strands, identity-padded at slots i, i+1.
TensorOp<Rational> jw_generator(const HeckeParams& p, int i, int n,
                                long long threshold = kDefaultThreshold);

/// Ordered product of generator factors; inverses are exact.
TensorOp<Rational> represent_word(const HeckeParams& p, const BraidWord& w, int n,
                                  long long threshold = kDefaultThreshold);

/// Matrix-free form of the same action.
LocalChain<Rational> braid_chain(const HeckeParams& p, const BraidWord& w, int n);

/// The deformed determinant S as a column arrow 0 -> d: coordinates
/// (-mu)^(inversions) over all permutations.
TensorOp<Rational> determinant_vector(const HeckeParams& p);

/// Basis of the joint (-q)-eigenspace of the first k-1 generators on
/// (C^d)^k, built by slotwise kernel intersection. C(d,k) vectors.
std::vector<std::vector<Rational>> wedge_basis(const HeckeParams& p, int k);

/// Orthogonal projection E_k onto the joint (-q)-eigenspace; idempotent and
/// self-adjoint with rank C(d,k).
TensorOp<Rational> antisymmetrizer(const HeckeParams& p, int k,
                                   long long threshold = kDefaultThreshold);

/// Exact checks of the determinant-element relations on d and d+1 strands.
CheckReport verify_S_relations(const HeckeParams& p, long long threshold = kDefaultThreshold);

}  // namespace qkappa

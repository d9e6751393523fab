#pragma once

#include <string>
#include <vector>

#include "qkappa/phased_power.hpp"
#include "qkappa/rational.hpp"

namespace qkappa {

enum class Series { A, B, C, D };

std::string series_name(Series s);
Series parse_series(const std::string& name);

struct LieType {
  Series series;
  int rank;
};

struct DominantWeight {
  std::vector<int> coords;  // coefficients in the fundamental-weight basis

  int height() const {
    int h = 0;
    for (int m : coords) h += m;
    return h;
  }
  bool is_zero() const { return height() == 0; }
};

/// Cartan matrix A_ij = 2(alpha_i, alpha_j)/(alpha_j, alpha_j), symmetrizers
/// d_i = (alpha_i, alpha_i)/2 with short roots at d = 1, the exact inverse
/// transpose, and the Gram matrix of the fundamental weights.
///
/// Simple-root ordering is the standard one (Bourbaki): types B, C, D carry
/// the branch/long-short irregularity at the last node(s).
struct RootDatum {
  LieType type;
  std::vector<std::vector<int>> cartan;
  std::vector<int> symmetrizers;
  std::vector<std::vector<Rational>> inverse_transpose;  // ((A^t)^-1)_ij
  std::vector<std::vector<Rational>> fundamental_gram;   // (lambda_i, lambda_j)
};

/// Throws InvalidRankError outside the supported ranks
/// (A: r>=1, B: r>=2, C: r>=2, D: r>=4; degenerate aliases are rejected).
RootDatum root_datum(const LieType& type);

/// (lambda, lambda + 2 rho) = sum_ij m_i (m_j + 2) (lambda_i, lambda_j), exact.
Rational casimir_exponent(const RootDatum& rd, const DominantWeight& w);

/// Weight-level kappa modulus: |mu|^(lambda, lambda + 2 rho) with trivial
/// phase. The phase depends on the braiding choice and is an operator-side
/// quantity; only the modulus is determined here.
PhasedPower kappa_modulus(const RootDatum& rd, const DominantWeight& w);

/// All dominant weights with coordinate sum <= height_bound, lexicographic,
/// starting at zero.
std::vector<DominantWeight> enumerate_dominant(int rank, int height_bound);

}  // namespace qkappa

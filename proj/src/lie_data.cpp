#include "qkappa/lie_data.hpp"

#include <stdexcept>

#include "qkappa/errors.hpp"
#include "qkappa/exact_linalg.hpp"

namespace qkappa {

std::string series_name(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
  }
  return "?";
}

Series parse_series(const std::string& name) {
  if (name == "A" || name == "a") return Series::A;
  if (name == "B" || name == "b") return Series::B;
  if (name == "C" || name == "c") return Series::C;
  if (name == "D" || name == "d") return Series::D;
  throw ConfigError("unknown Lie series: " + name);
}

namespace {

void validate_rank(const LieType& t) {
  const int r = t.rank;
  switch (t.series) {
    case Series::A:
      if (r >= 1) return;
      break;
    case Series::B:
    case Series::C:
      if (r >= 2) return;
      break;
    case Series::D:
      // D_2 and D_3 are aliases of A-series data and are rejected.
      if (r >= 4) return;
      break;
  }
  throw InvalidRankError("rank " + std::to_string(r) + " out of range for series " +
                         series_name(t.series));
}

std::vector<std::vector<int>> cartan_matrix(const LieType& t) {
  const int r = t.rank;
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      a[r - 2][r - 1] = -2;  // short last root
      break;
    case Series::C:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      a[r - 1][r - 2] = -2;  // long last root
      break;
    case Series::D:
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
  }
  return a;
}

std::vector<int> symmetrizer_vector(const LieType& t) {
  const int r = t.rank;
  std::vector<int> d(r, 1);
  if (t.series == Series::B)
    for (int i = 0; i + 1 < r; ++i) d[i] = 2;
  if (t.series == Series::C) d[r - 1] = 2;
  return d;
}

}  // namespace

RootDatum root_datum(const LieType& type) {
  validate_rank(type);
  RootDatum rd;
  rd.type = type;
  rd.cartan = cartan_matrix(type);
  rd.symmetrizers = symmetrizer_vector(type);

  const int r = type.rank;
  DenseMatrix<Rational> at(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) at[i][j] = Rational(rd.cartan[j][i]);
  auto inv = inverse_of(at);
  if (!inv) throw std::logic_error("Cartan matrix is singular");
  rd.inverse_transpose = *inv;

  rd.fundamental_gram.assign(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      rd.fundamental_gram[i][j] = Rational(rd.symmetrizers[i]) * rd.inverse_transpose[i][j];

  // Structural sanity: symmetric Gram with positive entries, symmetric A*diag(d).
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (rd.fundamental_gram[i][j] != rd.fundamental_gram[j][i])
        throw std::logic_error("fundamental Gram matrix not symmetric");
      if (rd.fundamental_gram[i][j] <= 0)
        throw std::logic_error("fundamental Gram matrix has a non-positive entry");
      if (rd.cartan[i][j] * rd.symmetrizers[j] != rd.cartan[j][i] * rd.symmetrizers[i])
        throw std::logic_error("A * diag(d) not symmetric");
    }
  return rd;
}

Rational casimir_exponent(const RootDatum& rd, const DominantWeight& w) {
  const int r = rd.type.rank;
  if (static_cast<int>(w.coords.size()) != r)
    throw InvalidWeightError("weight has " + std::to_string(w.coords.size()) +
                             " coordinates, expected " + std::to_string(r));
  for (int m : w.coords)
    if (m < 0) throw InvalidWeightError("dominant weight coordinates must be non-negative");
  Rational acc(0);
  for (int i = 0; i < r; ++i) {
    if (w.coords[i] == 0) continue;
    for (int j = 0; j < r; ++j)
      acc += Rational(w.coords[i]) * Rational(w.coords[j] + 2) * rd.fundamental_gram[i][j];
  }
  return acc;
}

PhasedPower kappa_modulus(const RootDatum& rd, const DominantWeight& w) {
  return PhasedPower::modulus_power(casimir_exponent(rd, w));
}

std::vector<DominantWeight> enumerate_dominant(int rank, int height_bound) {
  std::vector<DominantWeight> out;
  std::vector<int> cur(rank, 0);
  // Lexicographic order by counting with a per-position budget.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == rank) {
      out.push_back({cur});
      return;
    }
    for (int m = 0; m <= remaining; ++m) {
      cur[pos] = m;
      self(self, pos + 1, remaining - m);
    }
    cur[pos] = 0;
  };
  if (height_bound >= 0 && rank >= 1) rec(rec, 0, height_bound);
  return out;
}

}  // namespace qkappa

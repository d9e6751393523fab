#pragma once

#include <map>
#include <string>
#include <vector>

#include "qkappa/checks.hpp"
#include "qkappa/hecke.hpp"
#include "qkappa/rational.hpp"
#include "qkappa/tensor_op.hpp"

namespace qkappa {

/// Planar diagram with n_top + n_bottom boundary points and a noncrossing
/// perfect matching. Points are numbered clockwise: top row 1..n_top left to
/// right, bottom row continuing right to left, so the bottom-right point is
/// n_top + 1 and the bottom-left point is n_top + n_bottom.
class TLDiagram {
 public:
  TLDiagram(int n_top, int n_bottom, std::vector<std::pair<int, int>> pairs);

  static TLDiagram identity(int n);
  /// Unnormalized cup-cap diagram at strand position i (1-based, i < n).
  static TLDiagram cup_cap(int n, int i);

  int n_top() const { return n_top_; }
  int n_bottom() const { return n_bottom_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  int top_label(int position) const { return position + 1; }
  int bottom_label(int position) const { return n_top_ + n_bottom_ - position; }
  bool is_top(int label) const { return label <= n_top_; }
  int partner(int label) const;

  bool operator<(const TLDiagram& o) const;
  bool operator==(const TLDiagram& o) const;

 private:
  int n_top_;
  int n_bottom_;
  std::vector<std::pair<int, int>> pairs_;  // sorted, each (a, b) with a < b
};

/// All noncrossing perfect matchings on (n, n) boundaries; Catalan(n) many.
std::vector<TLDiagram> enumerate_diagrams(int n);

/// Catalan(n) by the closed formula; the enumeration above is the
/// independent cross-check.
BigInt tl_algebra_dimension(int n);

/// Formal linear combination of diagrams sharing boundary data, with the
/// loop parameter carried along.
class TLElement {
 public:
  TLElement(int n_top, int n_bottom, Rational delta)
      : n_top_(n_top), n_bottom_(n_bottom), delta_(std::move(delta)) {}

  static TLElement identity(int n, const Rational& delta);
  /// Jones projection e_i = cup_cap / delta.
  static TLElement jones_projection(int n, int i, const Rational& delta);
  static TLElement from_diagram(const TLDiagram& d, const Rational& delta,
                                const Rational& coeff = Rational(1));

  int n_top() const { return n_top_; }
  int n_bottom() const { return n_bottom_; }
  const Rational& delta() const { return delta_; }
  const std::map<TLDiagram, Rational>& terms() const { return terms_; }

  void add_term(const TLDiagram& d, const Rational& coeff);
  TLElement operator+(const TLElement& o) const;
  TLElement operator-(const TLElement& o) const;
  TLElement scaled(const Rational& c) const;
  /// Diagrammatic composition, bilinear; closed loops become delta factors.
  TLElement compose(const TLElement& o) const;
  bool operator==(const TLElement& o) const;
  bool is_zero() const;

 private:
  int n_top_;
  int n_bottom_;
  Rational delta_;
  std::map<TLDiagram, Rational> terms_;
};

/// Stack a over b (a's bottom glued to b's top); the result is the glued
/// diagram with a delta factor per closed loop.
TLElement compose_diagrams(const TLDiagram& a, const TLDiagram& b, const Rational& delta);

/// Loop parameter and sign conventions attached to a deformation value.
struct TLParams {
  Rational mu;
  Rational delta;  // |mu + 1/mu|
  int sign;        // -1 for mu > 0, +1 for mu < 0

  explicit TLParams(Rational mu_);
};

/// Hecke generator inside the diagram algebra: g = (1+q) e_1 - q on two
/// strands; the quadratic relation g^2 = (1-q) g + q holds exactly.
TLElement hecke_from_tl(const TLParams& p);

/// The d=2 operator embedding of the strand algebra: the unique algebra map
/// sending the Jones projection e_i to the padded rank-one projection
/// R R*/delta with R = lambda S. A diagram's image is found by exact
/// expansion over a spanning set of generator monomials, which keeps the
/// sign conventions of the minus-type category straight.
class TLEmbedding {
 public:
  TLEmbedding(TLParams params, int strands, long long threshold = kDefaultThreshold);

  int strands() const { return n_; }
  const std::vector<TLDiagram>& diagram_basis() const { return diagrams_; }
  const TensorOp<Rational>& projection(int i) const { return projections_.at(i - 1); }

  TensorOp<Rational> image(const TLDiagram& diagram) const;
  TensorOp<Rational> image(const TLElement& element) const;

 private:
  std::vector<Rational> diagram_vector(const TLElement& e) const;

  TLParams params_;
  int n_;
  std::vector<TLDiagram> diagrams_;
  std::vector<TensorOp<Rational>> projections_;       // P_1 .. P_(n-1)
  std::vector<std::vector<Rational>> monomial_vecs_;  // diagram-basis columns
  std::vector<TensorOp<Rational>> monomial_ops_;
};

TensorOp<Rational> tl_operator_image(const TLParams& p, const TLDiagram& diagram);
TensorOp<Rational> tl_operator_image(const TLParams& p, const TLElement& element);

/// Relations, sign rule, homomorphism property and linear independence of
/// the diagram images inside the d=2 tensor-power representation.
CheckReport embed_into_sud2(const TLParams& p, int max_strands = 4,
                            long long threshold = kDefaultThreshold);

/// ASCII cup/cap rendering for report appendices.
std::string ascii_render(const TLDiagram& d);

}  // namespace qkappa

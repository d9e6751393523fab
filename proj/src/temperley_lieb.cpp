#include "qkappa/temperley_lieb.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qkappa/exact_linalg.hpp"

namespace qkappa {

TLDiagram::TLDiagram(int n_top, int n_bottom, std::vector<std::pair<int, int>> pairs)
    : n_top_(n_top), n_bottom_(n_bottom), pairs_(std::move(pairs)) {
  const int total = n_top_ + n_bottom_;
  if (total % 2 != 0) throw std::invalid_argument("odd number of boundary points");
  if (static_cast<int>(pairs_.size()) * 2 != total)
    throw std::invalid_argument("pairing is not perfect");
  for (auto& [a, b] : pairs_) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > total || a == b) throw std::invalid_argument("pairing label out of range");
  }
  std::sort(pairs_.begin(), pairs_.end());
  std::set<int> seen;
  for (const auto& [a, b] : pairs_) {
    seen.insert(a);
    seen.insert(b);
  }
  if (static_cast<int>(seen.size()) != total)
    throw std::invalid_argument("pairing repeats a label");
  for (size_t i = 0; i < pairs_.size(); ++i)
    for (size_t j = i + 1; j < pairs_.size(); ++j) {
      auto [a, b] = pairs_[i];
      auto [c, d] = pairs_[j];
      bool c_inside = a < c && c < b;
      bool d_inside = a < d && d < b;
      if (c_inside != d_inside) throw std::invalid_argument("pairing is not planar");
    }
}

TLDiagram TLDiagram::identity(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < n; ++p) pairs.push_back({p + 1, 2 * n - p});
  return TLDiagram(n, n, std::move(pairs));
}

TLDiagram TLDiagram::cup_cap(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("cup-cap position out of range");
  std::vector<std::pair<int, int>> pairs;
  pairs.push_back({i, i + 1});                     // cup on top positions i-1, i
  pairs.push_back({2 * n - i, 2 * n - i + 1});     // cap on the matching bottom positions
  for (int p = 0; p < n; ++p) {
    if (p == i - 1 || p == i) continue;
    pairs.push_back({p + 1, 2 * n - p});
  }
  return TLDiagram(n, n, std::move(pairs));
}

int TLDiagram::partner(int label) const {
  for (const auto& [a, b] : pairs_) {
    if (a == label) return b;
    if (b == label) return a;
  }
  throw std::out_of_range("label not in pairing");
}

bool TLDiagram::operator<(const TLDiagram& o) const {
  if (n_top_ != o.n_top_) return n_top_ < o.n_top_;
  if (n_bottom_ != o.n_bottom_) return n_bottom_ < o.n_bottom_;
  return pairs_ < o.pairs_;
}

bool TLDiagram::operator==(const TLDiagram& o) const {
  return n_top_ == o.n_top_ && n_bottom_ == o.n_bottom_ && pairs_ == o.pairs_;
}

namespace {

using Matching = std::vector<std::pair<int, int>>;

std::vector<Matching> noncrossing_matchings(const std::vector<int>& points) {
  if (points.empty()) return {{}};
  std::vector<Matching> out;
  for (size_t k = 1; k < points.size(); k += 2) {
    std::vector<int> inside(points.begin() + 1, points.begin() + k);
    std::vector<int> outside(points.begin() + k + 1, points.end());
    for (const auto& mi : noncrossing_matchings(inside))
      for (const auto& mo : noncrossing_matchings(outside)) {
        Matching m;
        m.push_back({points[0], points[k]});
        m.insert(m.end(), mi.begin(), mi.end());
        m.insert(m.end(), mo.begin(), mo.end());
        out.push_back(std::move(m));
      }
  }
  return out;
}

}  // namespace

std::vector<TLDiagram> enumerate_diagrams(int n) {
  std::vector<int> points(2 * n);
  for (int i = 0; i < 2 * n; ++i) points[i] = i + 1;
  std::vector<TLDiagram> out;
  for (auto& m : noncrossing_matchings(points)) out.push_back(TLDiagram(n, n, std::move(m)));
  std::sort(out.begin(), out.end());
  return out;
}

BigInt tl_algebra_dimension(int n) {
  if (n < 0) throw std::invalid_argument("negative strand count");
  return binomial(2 * n, n) / (n + 1);
}

TLElement TLElement::identity(int n, const Rational& delta) {
  return from_diagram(TLDiagram::identity(n), delta);
}

TLElement TLElement::jones_projection(int n, int i, const Rational& delta) {
  return from_diagram(TLDiagram::cup_cap(n, i), delta, Rational(1) / delta);
}

TLElement TLElement::from_diagram(const TLDiagram& d, const Rational& delta,
                                  const Rational& coeff) {
  TLElement e(d.n_top(), d.n_bottom(), delta);
  e.add_term(d, coeff);
  return e;
}

void TLElement::add_term(const TLDiagram& d, const Rational& coeff) {
  if (d.n_top() != n_top_ || d.n_bottom() != n_bottom_)
    throw std::invalid_argument("diagram boundary mismatch");
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(d, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TLElement TLElement::operator+(const TLElement& o) const {
  TLElement out = *this;
  for (const auto& [d, c] : o.terms_) out.add_term(d, c);
  return out;
}

TLElement TLElement::operator-(const TLElement& o) const {
  TLElement out = *this;
  for (const auto& [d, c] : o.terms_) out.add_term(d, -c);
  return out;
}

TLElement TLElement::scaled(const Rational& c) const {
  TLElement out(n_top_, n_bottom_, delta_);
  if (c == 0) return out;
  for (const auto& [d, v] : terms_) out.terms_.emplace(d, v * c);
  return out;
}

TLElement TLElement::compose(const TLElement& o) const {
  if (o.n_top_ != n_bottom_) throw std::invalid_argument("composition boundary mismatch");
  TLElement out(n_top_, o.n_bottom_, delta_);
  for (const auto& [da, ca] : terms_)
    for (const auto& [db, cb] : o.terms_) {
      TLElement prod = compose_diagrams(da, db, delta_);
      for (const auto& [d, c] : prod.terms()) out.add_term(d, c * ca * cb);
    }
  return out;
}

bool TLElement::operator==(const TLElement& o) const {
  return n_top_ == o.n_top_ && n_bottom_ == o.n_bottom_ && (*this - o).is_zero();
}

bool TLElement::is_zero() const { return terms_.empty(); }

TLElement compose_diagrams(const TLDiagram& a, const TLDiagram& b, const Rational& delta) {
  if (a.n_bottom() != b.n_top()) throw std::invalid_argument("stacking boundary mismatch");
  const int glue = a.n_bottom();
  // Node encoding: (side, label); glued interface between a-bottom position p
  // and b-top position p.
  auto a_bottom_pos = [&](int label) { return a.n_top() + a.n_bottom() - label; };
  auto b_top_label = [&](int pos) { return pos + 1; };
  auto b_bottom_pos = [&](int label) { return b.n_top() + b.n_bottom() - label; };

  std::set<std::pair<int, int>> visited;  // (side, label)
  std::vector<std::pair<int, int>> new_pairs;
  int loops = 0;

  auto new_label_of = [&](int side, int label) -> int {
    if (side == 0) return label;  // a-top keeps its label
    int pos = b_bottom_pos(label);
    return a.n_top() + b.n_bottom() - pos;
  };

  // Walk from a free boundary point to its partner across the interface.
  auto trace = [&](int side, int label) -> std::pair<int, int> {
    int s = side, l = label;
    while (true) {
      visited.insert({s, l});
      int p = (s == 0) ? a.partner(l) : b.partner(l);
      visited.insert({s, p});
      if (s == 0) {
        if (a.is_top(p)) return {0, p};
        int pos = a_bottom_pos(p);
        s = 1;
        l = b_top_label(pos);
      } else {
        if (!b.is_top(p)) return {1, p};
        int pos = p - 1;
        s = 0;
        l = a.n_top() + a.n_bottom() - pos;
      }
    }
  };

  for (int t = 1; t <= a.n_top(); ++t) {
    if (visited.count({0, t})) continue;
    auto [s, l] = trace(0, t);
    new_pairs.push_back({new_label_of(0, t), new_label_of(s, l)});
  }
  for (int pos = 0; pos < b.n_bottom(); ++pos) {
    int label = b.n_top() + b.n_bottom() - pos;
    if (visited.count({1, label})) continue;
    auto [s, l] = trace(1, label);
    new_pairs.push_back({new_label_of(1, label), new_label_of(s, l)});
  }
  // Remaining interface cycles are closed loops.
  for (int pos = 0; pos < glue; ++pos) {
    int label = a.n_top() + a.n_bottom() - pos;
    if (visited.count({0, label})) continue;
    ++loops;
    int s = 0, l = label;
    while (!visited.count({s, l})) {
      visited.insert({s, l});
      int p = (s == 0) ? a.partner(l) : b.partner(l);
      visited.insert({s, p});
      if (s == 0) {
        int ppos = a_bottom_pos(p);
        s = 1;
        l = b_top_label(ppos);
      } else {
        int ppos = p - 1;
        s = 0;
        l = a.n_top() + a.n_bottom() - ppos;
      }
    }
  }

  TLDiagram glued(a.n_top(), b.n_bottom(), std::move(new_pairs));
  return TLElement::from_diagram(glued, delta, pow_rational(delta, loops));
}

TLParams::TLParams(Rational mu_) : mu(std::move(mu_)) {
  if (mu == 0) throw ConfigError("mu must be nonzero");
  Rational a = abs_of(mu);
  if (a == 1) throw ConfigError("|mu| = 1 gives loop parameter 2; the generic regime needs |mu| != 1");
  delta = a + Rational(1) / a;
  sign = mu > 0 ? -1 : 1;
}

TLElement hecke_from_tl(const TLParams& p) {
  const Rational q = p.mu * p.mu;
  TLElement e = TLElement::jones_projection(2, 1, p.delta);
  TLElement g = e.scaled(Rational(1) + q) - TLElement::identity(2, p.delta).scaled(q);
  TLElement quad = g.compose(g) - g.scaled(Rational(1) - q) -
                   TLElement::identity(2, p.delta).scaled(q);
  if (!quad.is_zero()) throw std::logic_error("Hecke quadratic relation failed in TL algebra");
  return g;
}

TLEmbedding::TLEmbedding(TLParams params, int strands, long long threshold)
    : params_(std::move(params)), n_(strands) {
  if (n_ < 1) throw std::invalid_argument("strand count must be positive");
  check_threshold(pow_dim(2, n_), threshold);
  diagrams_ = enumerate_diagrams(n_);

  HeckeParams hp(2, params_.mu);
  const auto S = determinant_vector(hp);
  auto local = S.compose(S.adjoint())
                   .scaled(Rational(1) / (abs_of(params_.mu) * params_.delta));
  for (int i = 1; i < n_; ++i) {
    TensorOp<Rational> padded = TensorOp<Rational>::identity(2, i - 1);
    padded = padded.tensor(local).tensor(TensorOp<Rational>::identity(2, n_ - i - 1));
    projections_.push_back(padded);
  }

  // Breadth-first over generator words until the monomials span the diagram
  // algebra; independence is decided exactly in the diagram basis.
  const size_t target = diagrams_.size();
  std::vector<std::pair<TLElement, TensorOp<Rational>>> queue;
  queue.push_back({TLElement::identity(n_, params_.delta), TensorOp<Rational>::identity(2, n_)});
  DenseMatrix<Rational> span;
  size_t head = 0;
  while (monomial_vecs_.size() < target && head < queue.size()) {
    auto [elem, op] = queue[head++];
    auto vec = diagram_vector(elem);
    DenseMatrix<Rational> trial = span;
    trial.push_back(vec);
    if (rank_of(trial) == static_cast<int>(monomial_vecs_.size()) + 1) {
      span.push_back(vec);
      monomial_vecs_.push_back(vec);
      monomial_ops_.push_back(op);
      for (int i = 1; i < n_; ++i)
        queue.push_back({elem.compose(TLElement::jones_projection(n_, i, params_.delta)),
                         op.compose(projections_[i - 1])});
    }
  }
  if (monomial_vecs_.size() != target)
    throw std::logic_error("generator monomials failed to span the diagram algebra");
}

std::vector<Rational> TLEmbedding::diagram_vector(const TLElement& e) const {
  std::vector<Rational> vec(diagrams_.size(), Rational(0));
  for (const auto& [d, c] : e.terms()) {
    auto it = std::lower_bound(diagrams_.begin(), diagrams_.end(), d);
    if (it == diagrams_.end() || !(*it == d)) throw std::logic_error("diagram outside basis");
    vec[it - diagrams_.begin()] = c;
  }
  return vec;
}

TensorOp<Rational> TLEmbedding::image(const TLElement& element) const {
  if (element.n_top() != n_ || element.n_bottom() != n_)
    throw std::invalid_argument("element boundary does not match the embedding");
  auto target = diagram_vector(element);
  const int m = static_cast<int>(diagrams_.size());
  DenseMatrix<Rational> aug(m, std::vector<Rational>(m + 1, Rational(0)));
  for (int row = 0; row < m; ++row) {
    for (int c = 0; c < m; ++c) aug[row][c] = monomial_vecs_[c][row];
    aug[row][m] = target[row];
  }
  if (rref_in_place(aug) != m) throw std::logic_error("monomial span degenerate");
  TensorOp<Rational> out(2, n_, n_);
  for (int c = 0; c < m; ++c)
    if (aug[c][m] != 0) out = out + monomial_ops_[c].scaled(aug[c][m]);
  return out;
}

TensorOp<Rational> TLEmbedding::image(const TLDiagram& diagram) const {
  return image(TLElement::from_diagram(diagram, params_.delta));
}

TensorOp<Rational> tl_operator_image(const TLParams& p, const TLDiagram& diagram) {
  if (diagram.n_top() != diagram.n_bottom())
    throw std::invalid_argument("operator image is defined for the strand algebras (n, n)");
  return TLEmbedding(p, diagram.n_top()).image(diagram);
}

TensorOp<Rational> tl_operator_image(const TLParams& p, const TLElement& element) {
  if (element.n_top() != element.n_bottom())
    throw std::invalid_argument("operator image is defined for the strand algebras (n, n)");
  return TLEmbedding(p, element.n_top()).image(element);
}

CheckReport embed_into_sud2(const TLParams& p, int max_strands, long long threshold) {
  CheckReport report;
  const Rational lambda_sq = Rational(1) / abs_of(p.mu);
  HeckeParams hp(2, p.mu);
  const auto S = determinant_vector(hp);
  const auto Sstar = S.adjoint();
  const auto id1 = TensorOp<Rational>::identity(2, 1);

  {
    Rational norm_sq = lambda_sq * Sstar.compose(S).get(0, 0);
    report.add("tl", "R* . R = delta", norm_sq == p.delta,
               std::abs(to_double(norm_sq - p.delta)));
  }
  {
    auto pairing = Sstar.tensor(id1).compose(id1.tensor(S)).scaled(lambda_sq);
    auto expected = id1.scaled(Rational(p.sign));
    report.add("tl", "sign rule R*x1 . 1xR = -sign(mu)", pairing == expected,
               pairing.max_abs_diff(expected));
  }
  for (int n = 2; n <= std::min(max_strands + 1, 5) && pow_dim(2, n) <= threshold; ++n) {
    bool idem = true, jones = true, commute = true;
    TLEmbedding embedding(p, n, threshold);
    std::vector<TensorOp<Rational>> proj;
    for (int i = 1; i < n; ++i) proj.push_back(embedding.projection(i));
    const Rational inv_delta_sq = Rational(1) / (p.delta * p.delta);
    for (int i = 0; i < n - 1; ++i) {
      idem = idem && proj[i].compose(proj[i]) == proj[i];
      if (i + 1 < n - 1) {
        jones = jones &&
                proj[i].compose(proj[i + 1]).compose(proj[i]) == proj[i].scaled(inv_delta_sq);
        jones = jones &&
                proj[i + 1].compose(proj[i]).compose(proj[i + 1]) == proj[i + 1].scaled(inv_delta_sq);
      }
      for (int j = i + 2; j < n - 1; ++j)
        commute = commute && proj[i].compose(proj[j]) == proj[j].compose(proj[i]);
    }
    const std::string tag = " (n=" + std::to_string(n) + ")";
    report.add("tl", "e_i idempotent" + tag, idem);
    if (n >= 3) report.add("tl", "e_i e_(i+-1) e_i = delta^-2 e_i" + tag, jones);
    if (n >= 4) report.add("tl", "distant e_i commute" + tag, commute);
  }
  for (int n = 2; n <= max_strands && pow_dim(2, n) <= threshold; ++n) {
    TLEmbedding embedding(p, n, threshold);
    const auto& diagrams = embedding.diagram_basis();
    std::vector<TensorOp<Rational>> images;
    for (const auto& d : diagrams) images.push_back(embedding.image(d));
    bool hom = true;
    for (size_t i = 0; i < diagrams.size(); ++i)
      for (size_t j = 0; j < diagrams.size(); ++j) {
        auto composed = compose_diagrams(diagrams[i], diagrams[j], p.delta);
        if (!(embedding.image(composed) == images[i].compose(images[j]))) hom = false;
      }
    report.add("tl", "diagram composition is an algebra homomorphism (n=" + std::to_string(n) + ")",
               hom);
    // Linear independence of the Catalan(n) images.
    DenseMatrix<Rational> rows;
    for (const auto& op : images) {
      std::vector<Rational> row;
      row.reserve(op.cod_dim() * op.dom_dim());
      for (long long r = 0; r < op.cod_dim(); ++r)
        for (long long c = 0; c < op.dom_dim(); ++c) row.push_back(op.get(r, c));
      rows.push_back(std::move(row));
    }
    bool independent = rank_of(rows) == static_cast<int>(diagrams.size());
    report.add("tl", "diagram images linearly independent (n=" + std::to_string(n) + ")",
               independent);
  }
  return report;
}

std::string ascii_render(const TLDiagram& d) {
  const int nt = d.n_top(), nb = d.n_bottom();
  const auto col = [](int pos) { return 2 * pos; };
  const int width = 2 * std::max(nt, nb) - 1;

  struct Arc { int p1, p2, depth; };
  std::vector<Arc> top_arcs, bottom_arcs;
  std::vector<std::pair<int, int>> throughs;  // (top pos, bottom pos)
  for (const auto& [a, b] : d.pairs()) {
    bool at = d.is_top(a), bt = d.is_top(b);
    if (at && bt)
      top_arcs.push_back({a - 1, b - 1, 0});
    else if (!at && !bt)
      bottom_arcs.push_back({nt + nb - b, nt + nb - a, 0});
    else
      throughs.push_back({a - 1, nt + nb - b});
  }
  auto assign_depths = [](std::vector<Arc>& arcs) {
    int deepest = 0;
    for (auto& x : arcs) {
      x.depth = 0;
      for (const auto& y : arcs)
        if (y.p1 < x.p1 && x.p2 < y.p2) ++x.depth;
      deepest = std::max(deepest, x.depth);
    }
    return deepest;
  };
  int top_rows = top_arcs.empty() ? 0 : assign_depths(top_arcs) + 1;
  int bottom_rows = bottom_arcs.empty() ? 0 : assign_depths(bottom_arcs) + 1;

  std::ostringstream os;
  auto blank = [&]() { return std::string(width, ' '); };
  {
    auto line = blank();
    for (int p = 0; p < nt; ++p) line[col(p)] = 'o';
    os << line << "\n";
  }
  for (int r = 0; r < top_rows; ++r) {
    auto line = blank();
    for (const auto& [tp, bp] : throughs) line[col(tp)] = '|';
    for (const auto& a : top_arcs) {
      if (a.depth > r) {
        line[col(a.p1)] = '|';
        line[col(a.p2)] = '|';
      } else if (a.depth == r) {
        line[col(a.p1)] = '\\';
        line[col(a.p2)] = '/';
        for (int c = col(a.p1) + 1; c < col(a.p2); ++c)
          if (line[c] == ' ') line[c] = '_';
      }
    }
    os << line << "\n";
  }
  {
    auto line = blank();
    for (const auto& [tp, bp] : throughs) line[col(std::min(tp, bp))] = (tp == bp) ? '|' : '*';
    os << line << "\n";
  }
  for (int r = bottom_rows - 1; r >= 0; --r) {
    auto line = blank();
    for (const auto& [tp, bp] : throughs) line[col(bp)] = '|';
    for (const auto& a : bottom_arcs) {
      if (a.depth > r) {
        line[col(a.p1)] = '|';
        line[col(a.p2)] = '|';
      } else if (a.depth == r) {
        line[col(a.p1)] = '/';
        line[col(a.p2)] = '\\';
        for (int c = col(a.p1) + 1; c < col(a.p2); ++c)
          if (line[c] == ' ') line[c] = '_';
      }
    }
    os << line << "\n";
  }
  {
    auto line = blank();
    for (int p = 0; p < nb; ++p) line[col(p)] = 'o';
    os << line << "\n";
  }
  for (const auto& [tp, bp] : throughs)
    if (tp != bp) os << "through strand: top " << (tp + 1) << " -> bottom " << (bp + 1) << "\n";
  return os.str();
}

}  // namespace qkappa

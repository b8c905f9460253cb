#include "ckyforms/almost_abelian.hpp"

#include <algorithm>

namespace ckyforms {

MetricData MetricSpec::to_metric() const {
  return kind == Kind::gram ? MetricData::from_gram(matrix) : MetricData::from_orthonormal_frame(matrix);
}

RationalVector AlmostAbelianData::embed_vector(const RationalVector& u_coords) const {
  RationalVector v = RationalVector::Zero(dim);
  for (std::size_t a = 0; a < u_indices.size(); ++a) v(u_indices[a]) = u_coords(static_cast<Index>(a));
  return v;
}

RationalMatrix AlmostAbelianData::extend(const RationalMatrix& b) const {
  RationalMatrix out = RationalMatrix::Zero(dim, dim);
  for (std::size_t a = 0; a < u_indices.size(); ++a)
    for (std::size_t c = 0; c < u_indices.size(); ++c)
      out(u_indices[a], u_indices[c]) = b(static_cast<Index>(a), static_cast<Index>(c));
  return out;
}

PForm AlmostAbelianData::embed_form(const PForm& u_form) const {
  const int p = u_form.degree;
  PForm out = PForm::zero(dim, p);
  const auto indices = basis_multi_indices(dim - 1, p);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const Rational& c = u_form.coeffs(static_cast<Index>(k));
    if (c.is_zero()) continue;
    MultiIndex mapped;
    for (int i : indices[k]) mapped.push_back(u_indices[static_cast<std::size_t>(i)]);
    out.coeffs(multi_index_position(dim, mapped)) = c;
  }
  return out;
}

PForm AlmostAbelianData::e0_covector() const { return PForm::basis(dim, {e0_index}); }

namespace {

RationalMatrix metric_adjoint(const RationalMatrix& m, const RationalMatrix& gram_u) {
  return inverse(gram_u) * m.transpose() * gram_u;
}

void fill_split(AlmostAbelianData& data) {
  const RationalMatrix adjoint = metric_adjoint(data.M, data.gram_u);
  data.S = (data.M + adjoint) / Rational(2);
  data.A = (data.M - adjoint) / Rational(2);
}

RationalMatrix restrict_gram(const RationalMatrix& gram, const std::vector<int>& idx) {
  const Index k = static_cast<Index>(idx.size());
  RationalMatrix g(k, k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) g(a, b) = gram(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
  return g;
}

std::vector<int> complement_of(int n, int e0) {
  std::vector<int> u;
  for (int i = 0; i < n; ++i)
    if (i != e0) u.push_back(i);
  return u;
}

bool spans_abelian_ideal(const MetricLieAlgebra& alg, int e0) {
  const int n = alg.dim();
  for (int a = 0; a < n; ++a) {
    if (a == e0) continue;
    if (!alg.bracket(e0, a)(e0).is_zero()) return false;
    for (int b = a + 1; b < n; ++b)
      if (b != e0 && !is_zero(RationalMatrix(alg.bracket(a, b)))) return false;
  }
  return true;
}

}  // namespace

std::pair<MetricLieAlgebra, AlmostAbelianData> build(const RationalMatrix& M, const MetricSpec& metric,
                                                     std::vector<std::string> basis_names) {
  if (M.rows() != M.cols()) throw DimensionMismatch("build: M is not square");
  const int k = static_cast<int>(M.rows());
  const int n = k + 1;
  if (metric.matrix.rows() != n || metric.matrix.cols() != n)
    throw DimensionMismatch("build: metric size must be dim(M) + 1");
  if (basis_names.empty())
    for (int i = 0; i < n; ++i) basis_names.push_back("e" + std::to_string(i));
  if (static_cast<int>(basis_names.size()) != n) throw DimensionMismatch("build: basis name count");

  MetricData g = metric.to_metric();
  RationalMatrix bracket_matrix = M;
  const RationalMatrix gram_u = g.gram().bottomRightCorner(k, k);
  const RationalVector cross = g.gram().block(1, 0, k, 1);
  if (!is_zero(RationalMatrix(cross)) || g.gram()(0, 0) != 1) {
    // Replace e0 by the normalized component of e0 orthogonal to u.
    const RationalVector c = inverse(gram_u) * cross;
    const Rational norm2 = g.gram()(0, 0) - cross.dot(c);
    auto norm = rational_sqrt(norm2);
    if (!norm)
      throw MetricNotAdapted("build: normalizing e0 needs sqrt(" + to_string(norm2) +
                             "), which is irrational");
    bracket_matrix /= *norm;
    RationalMatrix gram = RationalMatrix::Zero(n, n);
    gram(0, 0) = 1;
    gram.bottomRightCorner(k, k) = gram_u;
    g = MetricData::from_gram(gram);
  }

  std::vector<BracketTerm> terms;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i)
      if (!bracket_matrix(i, j).is_zero()) terms.push_back({0, j + 1, i + 1, bracket_matrix(i, j)});
  MetricLieAlgebra alg(std::move(basis_names), terms, g);

  AlmostAbelianData data;
  data.dim = n;
  data.e0_index = 0;
  data.u_indices = complement_of(n, 0);
  data.M = bracket_matrix;
  data.gram_u = gram_u;
  fill_split(data);
  return {std::move(alg), std::move(data)};
}

std::optional<int> detect_e0(const MetricLieAlgebra& alg) {
  for (int e = 0; e < alg.dim(); ++e)
    if (spans_abelian_ideal(alg, e)) return e;
  return std::nullopt;
}

RationalMatrix restricted_ad(const MetricLieAlgebra& alg, int e0) {
  const auto u = complement_of(alg.dim(), e0);
  const Index k = static_cast<Index>(u.size());
  RationalMatrix m(k, k);
  for (Index j = 0; j < k; ++j)
    for (Index i = 0; i < k; ++i) m(i, j) = alg.bracket(e0, u[static_cast<std::size_t>(j)])(u[static_cast<std::size_t>(i)]);
  return m;
}

AlmostAbelianData from_algebra(const MetricLieAlgebra& alg, std::optional<int> e0) {
  if (!e0) e0 = detect_e0(alg);
  if (!e0) throw Error("algebra has no basis vector complementing an abelian ideal");
  if (*e0 < 0 || *e0 >= alg.dim() || !spans_abelian_ideal(alg, *e0))
    throw Error("basis vector " + std::to_string(*e0) + " does not complement an abelian ideal");
  AlmostAbelianData data;
  data.dim = alg.dim();
  data.e0_index = *e0;
  data.u_indices = complement_of(alg.dim(), *e0);
  const RationalMatrix& gram = alg.metric().gram();
  for (int i : data.u_indices)
    if (!gram(*e0, i).is_zero()) throw MetricNotAdapted("e0 is not orthogonal to u");
  if (gram(*e0, *e0) != 1) throw MetricNotAdapted("e0 is not a unit vector");
  data.M = restricted_ad(alg, *e0);
  data.gram_u = restrict_gram(gram, data.u_indices);
  fill_split(data);
  return data;
}

FormSplit split_form(const PForm& w, const AlmostAbelianData& data) {
  if (w.dim != data.dim) throw DimensionMismatch("split_form: dimension mismatch");
  const int p = w.degree;
  const int k = data.dim - 1;
  std::vector<int> to_u(static_cast<std::size_t>(data.dim), -1);
  for (std::size_t a = 0; a < data.u_indices.size(); ++a) to_u[static_cast<std::size_t>(data.u_indices[a])] = static_cast<int>(a);

  FormSplit out{p >= 1 ? PForm::zero(k, p - 1) : PForm{-1, k, RationalVector(0)}, PForm::zero(k, p)};
  const auto indices = basis_multi_indices(data.dim, p);
  for (std::size_t s = 0; s < indices.size(); ++s) {
    const Rational& c = w.coeffs(static_cast<Index>(s));
    if (c.is_zero()) continue;
    MultiIndex rest;
    int sign = 1;
    bool has_e0 = false;
    for (std::size_t pos = 0; pos < indices[s].size(); ++pos) {
      const int i = indices[s][pos];
      if (i == data.e0_index) {
        has_e0 = true;
        sign = pos % 2 == 0 ? 1 : -1;  // move e^0 to the front
      } else {
        rest.push_back(to_u[static_cast<std::size_t>(i)]);
      }
    }
    if (has_e0)
      out.alpha.coeffs(multi_index_position(k, rest)) += sign > 0 ? c : Rational(-c);
    else
      out.beta.coeffs(multi_index_position(k, rest)) += c;
  }
  return out;
}

PForm join_form(const FormSplit& parts, const AlmostAbelianData& data) {
  PForm beta = data.embed_form(parts.beta);
  if (parts.alpha.degree < 0) return beta;
  return wedge(data.e0_covector(), data.embed_form(parts.alpha)) + beta;
}

Subspace e0_part(const AlmostAbelianData& data, int p) {
  std::vector<RationalVector> spanning;
  if (p >= 1)
    for (const auto& idx : basis_multi_indices(data.dim - 1, p - 1))
      spanning.push_back(
          wedge(data.e0_covector(), data.embed_form(PForm::basis(data.dim - 1, idx))).coeffs);
  return Subspace::span(spanning, binomial(data.dim, p));
}

Subspace u_part(const AlmostAbelianData& data, int p) {
  std::vector<RationalVector> spanning;
  for (const auto& idx : basis_multi_indices(data.dim - 1, p))
    spanning.push_back(data.embed_form(PForm::basis(data.dim - 1, idx)).coeffs);
  return Subspace::span(spanning, binomial(data.dim, p));
}

namespace {

RationalMatrix stack_rows(const std::vector<RationalMatrix>& blocks, Index cols) {
  Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  RationalMatrix out(rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

}  // namespace

Subspace predicted_parallel_space(const AlmostAbelianData& data, int p) {
  const int k = data.dim - 1;
  if (p < 0 || p > data.dim) throw DimensionMismatch("predicted_parallel_space: degree out of range");
  std::vector<RationalVector> spanning;

  if (p <= k) {
    std::vector<RationalMatrix> constraints{lift_endomorphism(data.A, p)};
    if (p >= 1)
      for (int i = 0; i < k; ++i)
        constraints.push_back(contract_matrix(RationalVector(data.S.col(i)), p));
    for (const auto& beta : kernel_basis(stack_rows(constraints, binomial(k, p))).basis_vectors())
      spanning.push_back(data.embed_form(PForm(p, k, beta)).coeffs);
  }
  if (p >= 1) {
    const int q = p - 1;
    std::vector<RationalMatrix> constraints{lift_endomorphism(data.A, q)};
    for (int i = 0; i < k; ++i) {
      const PForm su_flat = PForm::covector(data.gram_u * data.S.col(i));
      constraints.push_back(wedge_matrix(su_flat, q));
    }
    for (const auto& alpha : kernel_basis(stack_rows(constraints, binomial(k, q))).basis_vectors())
      spanning.push_back(wedge(data.e0_covector(), data.embed_form(PForm(q, k, alpha))).coeffs);
  }
  return Subspace::span(spanning, binomial(data.dim, p));
}

KernelsCriterion kernels_criterion(const AlmostAbelianData& data) {
  const Subspace ker_a = kernel_basis(data.A);
  const Subspace ker_s = kernel_basis(data.S);
  const Subspace ker_m = kernel_basis(data.A + data.S);
  const Subspace both = subspace_intersect(ker_a, ker_s);
  KernelsCriterion out;
  out.holds = both.dim() < ker_m.dim();
  if (out.holds)
    for (const auto& z : ker_m.basis_vectors())
      if (!both.contains(z)) {
        out.witness = data.embed_vector(z);
        break;
      }
  return out;
}

ScaleIsomorphism iso_up_to_scale(const RationalMatrix& m1, const RationalMatrix& m2) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols() || m1.rows() != m1.cols())
    throw DimensionMismatch("iso_up_to_scale: matrices must be square of equal size");
  const auto a = char_poly(m1);
  const auto b = char_poly(m2);
  const int d = static_cast<int>(m1.rows());

  std::vector<Rational> candidates;
  bool seeded = false;
  for (int k = d - 1; k >= 0; --k) {
    const Rational& ak = a[static_cast<std::size_t>(k)];
    const Rational& bk = b[static_cast<std::size_t>(k)];
    if (ak.is_zero() != bk.is_zero()) return {};
    if (ak.is_zero() || seeded) continue;
    // c^{d-k} = ak / bk
    const unsigned power = static_cast<unsigned>(d - k);
    const Rational ratio = ak / bk;
    if (auto root = rational_root(ratio < 0 ? Rational(-ratio) : ratio, power)) {
      if (ratio > 0) {
        candidates.push_back(*root);
        if (power % 2 == 0) candidates.push_back(-*root);
      } else if (power % 2 == 1) {
        candidates.push_back(-*root);
      }
    }
    seeded = true;
    if (candidates.empty()) return {};
  }
  if (!seeded) candidates.push_back(Rational(1));  // both nilpotent

  std::sort(candidates.begin(), candidates.end(), [](const Rational& x, const Rational& y) {
    const Rational ax = abs(x), ay = abs(y);
    if (ax != ay) return ax < ay;
    return x > y;
  });
  for (const auto& c : candidates) {
    bool coefficients_match = true;
    Rational power = 1;
    for (int k = d - 1; k >= 0; --k) {
      power *= c;
      if (a[static_cast<std::size_t>(k)] != power * b[static_cast<std::size_t>(k)]) {
        coefficients_match = false;
        break;
      }
    }
    if (coefficients_match && similar(m1, RationalMatrix(c * m2))) return {true, c};
  }
  return {};
}

bool cky_splits_into_killing_parts(const AlmostAbelianData& data, const SolutionSpaces& spaces) {
  const int p = spaces.p;
  if (p == 0 || p == data.dim) return true;
  for (const auto& v : spaces.cky.basis_vectors()) {
    const FormSplit parts = split_form(PForm(p, data.dim, v), data);
    const PForm e0_piece = wedge(data.e0_covector(), data.embed_form(parts.alpha));
    const PForm u_piece = data.embed_form(parts.beta);
    if (!spaces.star_killing.contains(e0_piece.coeffs) || !spaces.killing.contains(u_piece.coeffs))
      return false;
  }
  const Subspace assembled = subspace_sum(subspace_intersect(spaces.star_killing, e0_part(data, p)),
                                          subspace_intersect(spaces.killing, u_part(data, p)));
  return assembled == spaces.cky;
}

std::optional<bool> killing_forms_respect_spectrum(const AlmostAbelianData& data,
                                                   const SolutionSpaces& spaces) {
  const int k = data.dim - 1;
  const int p = spaces.p;
  if (p < 1 || p > k) return true;
  auto roots = rational_roots(char_polynomial(data.S));
  if (!roots) return std::nullopt;
  RationalMatrix eigenbasis(k, k);
  std::vector<int> label;
  Index filled = 0;
  for (std::size_t r = 0; r < roots->size(); ++r) {
    const RationalMatrix shifted = data.S - (*roots)[r] * RationalMatrix::Identity(k, k);
    for (const auto& v : kernel_basis(shifted).basis_vectors()) {
      if (filled == k) return std::nullopt;
      eigenbasis.col(filled++) = v;
      label.push_back(static_cast<int>(r));
    }
  }
  if (filled != k) return std::nullopt;

  const Subspace killing_u = subspace_intersect(spaces.killing, u_part(data, p));
  for (const auto& v : killing_u.basis_vectors()) {
    const PForm beta = split_form(PForm(p, data.dim, v), data).beta;
    for (const auto& idx : basis_multi_indices(k, p)) {
      bool mixed = false;
      for (int i : idx) mixed = mixed || label[static_cast<std::size_t>(i)] != label[static_cast<std::size_t>(idx[0])];
      if (!mixed) continue;
      std::vector<RationalVector> args;
      for (int i : idx) args.emplace_back(eigenbasis.col(i));
      if (!evaluate(beta, args).is_zero()) return false;
    }
  }
  return true;
}

bool has_real_spectrum(const RationalMatrix& m) {
  const Polynomial p = char_polynomial(m);
  if (p.degree() <= 0) return true;
  const Polynomial squarefree = p.divmod(gcd(p, p.derivative())).first;
  return count_real_roots(p) == squarefree.degree();
}

}  // namespace ckyforms

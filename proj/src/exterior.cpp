#include "ckyforms/exterior.hpp"

#include "ckyforms/exact_linalg.hpp"

#include <algorithm>

namespace ckyforms {

Index binomial(int n, int p) {
  if (p < 0 || n < 0 || p > n) return 0;
  Index result = 1;
  for (int k = 1; k <= p; ++k) result = result * (n - p + k) / k;
  return result;
}

std::vector<MultiIndex> basis_multi_indices(int n, int p) {
  std::vector<MultiIndex> out;
  if (p < 0 || p > n) return out;
  MultiIndex current(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) current[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(current);
    int i = p - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - p + i) --i;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < p; ++j)
      current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

Index multi_index_position(int n, const MultiIndex& index) {
  const int p = static_cast<int>(index.size());
  Index pos = 0;
  int prev = -1;
  for (int t = 0; t < p; ++t) {
    const int it = index[static_cast<std::size_t>(t)];
    for (int v = prev + 1; v < it; ++v) pos += binomial(n - 1 - v, p - 1 - t);
    prev = it;
  }
  return pos;
}

int sort_with_sign(MultiIndex& index) {
  int sign = 1;
  for (std::size_t i = 1; i < index.size(); ++i) {
    for (std::size_t j = i; j > 0 && index[j - 1] >= index[j]; --j) {
      if (index[j - 1] == index[j]) return 0;
      std::swap(index[j - 1], index[j]);
      sign = -sign;
    }
  }
  return sign;
}

PForm::PForm(int degree_, int dim_, RationalVector coeffs_)
    : degree(degree_), dim(dim_), coeffs(std::move(coeffs_)) {
  if (coeffs.size() != binomial(dim, degree))
    throw DimensionMismatch("PForm: coefficient count does not match binom(n, p)");
}

PForm PForm::zero(int dim, int degree) {
  return PForm(degree, dim, RationalVector::Zero(binomial(dim, degree)));
}

PForm PForm::basis(int dim, MultiIndex index) {
  const int p = static_cast<int>(index.size());
  PForm w = zero(dim, p);
  for (int i : index)
    if (i < 0 || i >= dim) throw DimensionMismatch("PForm::basis: index out of range");
  const int sign = sort_with_sign(index);
  if (sign != 0) w.coeffs(multi_index_position(dim, index)) = sign;
  return w;
}

PForm PForm::scalar(int dim, const Rational& value) {
  PForm w = zero(dim, 0);
  w.coeffs(0) = value;
  return w;
}

PForm PForm::covector(const RationalVector& components) {
  return PForm(1, static_cast<int>(components.size()), components);
}

Rational PForm::operator[](const MultiIndex& index) const {
  MultiIndex sorted = index;
  const int sign = sort_with_sign(sorted);
  if (sign == 0) return Rational(0);
  const Rational& c = coeffs(multi_index_position(dim, sorted));
  return sign > 0 ? c : Rational(-c);
}

bool PForm::is_zero() const { return ckyforms::is_zero(RationalMatrix(coeffs)); }

PForm& PForm::operator+=(const PForm& o) {
  if (o.degree != degree || o.dim != dim) throw DimensionMismatch("PForm addition: shapes differ");
  coeffs += o.coeffs;
  return *this;
}

PForm& PForm::operator-=(const PForm& o) {
  if (o.degree != degree || o.dim != dim) throw DimensionMismatch("PForm subtraction: shapes differ");
  coeffs -= o.coeffs;
  return *this;
}

PForm& PForm::operator*=(const Rational& c) {
  coeffs *= c;
  return *this;
}

bool operator==(const PForm& a, const PForm& b) {
  return a.degree == b.degree && a.dim == b.dim && a.coeffs == b.coeffs;
}

Rational evaluate(const PForm& w, const std::vector<RationalVector>& vectors) {
  if (static_cast<int>(vectors.size()) != w.degree)
    throw DimensionMismatch("evaluate: argument count differs from degree");
  if (w.degree == 0) return w.coeffs(0);
  const auto indices = basis_multi_indices(w.dim, w.degree);
  const Index p = w.degree;
  Rational total = 0;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (w.coeffs(static_cast<Index>(k)).is_zero()) continue;
    RationalMatrix minor(p, p);
    for (Index r = 0; r < p; ++r)
      for (Index c = 0; c < p; ++c) minor(r, c) = vectors[static_cast<std::size_t>(c)](indices[k][static_cast<std::size_t>(r)]);
    total += w.coeffs(static_cast<Index>(k)) * determinant(minor);
  }
  return total;
}

PForm wedge(const PForm& a, const PForm& b) {
  if (a.dim != b.dim) throw DimensionMismatch("wedge: ambient dimensions differ");
  const int n = a.dim;
  PForm out = PForm::zero(n, a.degree + b.degree);
  if (a.degree + b.degree > n) return out;
  const auto ia = basis_multi_indices(n, a.degree);
  const auto ib = basis_multi_indices(n, b.degree);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (a.coeffs(static_cast<Index>(i)).is_zero()) continue;
    for (std::size_t j = 0; j < ib.size(); ++j) {
      if (b.coeffs(static_cast<Index>(j)).is_zero()) continue;
      MultiIndex k = ia[i];
      k.insert(k.end(), ib[j].begin(), ib[j].end());
      const int sign = sort_with_sign(k);
      if (sign == 0) continue;
      const Rational term = a.coeffs(static_cast<Index>(i)) * b.coeffs(static_cast<Index>(j));
      out.coeffs(multi_index_position(n, k)) += sign > 0 ? term : Rational(-term);
    }
  }
  return out;
}

RationalMatrix contract_matrix(const RationalVector& x, int p) {
  const int n = static_cast<int>(x.size());
  if (p < 1) throw DimensionMismatch("contract_matrix: degree must be at least 1");
  const auto source = basis_multi_indices(n, p);
  const auto target = basis_multi_indices(n, p - 1);
  RationalMatrix m = RationalMatrix::Zero(static_cast<Index>(target.size()), static_cast<Index>(source.size()));
  for (std::size_t t = 0; t < target.size(); ++t) {
    for (int k = 0; k < n; ++k) {
      if (x(k).is_zero()) continue;
      MultiIndex full{k};
      full.insert(full.end(), target[t].begin(), target[t].end());
      const int sign = sort_with_sign(full);
      if (sign == 0) continue;
      m(static_cast<Index>(t), multi_index_position(n, full)) += sign > 0 ? x(k) : Rational(-x(k));
    }
  }
  return m;
}

PForm contract(const RationalVector& x, const PForm& w) {
  if (x.size() != w.dim) throw DimensionMismatch("contract: vector length differs from dimension");
  if (w.degree == 0) return PForm{-1, w.dim, RationalVector(0)};
  if (w.degree > w.dim) return PForm::zero(w.dim, w.degree - 1);
  return PForm(w.degree - 1, w.dim, contract_matrix(x, w.degree) * w.coeffs);
}

RationalMatrix wedge_matrix(const PForm& left, int p) {
  const int n = left.dim;
  const Index cols = binomial(n, p);
  RationalMatrix m(binomial(n, p + left.degree), cols);
  const auto indices = basis_multi_indices(n, p);
  for (std::size_t j = 0; j < indices.size(); ++j)
    m.col(static_cast<Index>(j)) = wedge(left, PForm::basis(n, indices[j])).coeffs;
  return m;
}

std::optional<Index> first_nonpositive_minor(const RationalMatrix& gram) {
  for (Index k = 1; k <= gram.rows(); ++k)
    if (determinant(gram.topLeftCorner(k, k)) <= 0) return k;
  return std::nullopt;
}

MetricData MetricData::from_gram(const RationalMatrix& gram) {
  if (gram.rows() != gram.cols()) throw DimensionMismatch("metric: Gram matrix is not square");
  if (gram != gram.transpose()) throw NotPositiveDefinite(0, "metric: Gram matrix is not symmetric");
  if (auto k = first_nonpositive_minor(gram))
    throw NotPositiveDefinite(*k, "metric: leading principal minor of size " + std::to_string(*k) +
                                      " is not positive");
  MetricData g;
  g.gram_ = gram;
  g.gram_inverse_ = inverse(gram);
  g.volume_scale_ = rational_sqrt(determinant(gram));
  return g;
}

MetricData MetricData::from_orthonormal_frame(const RationalMatrix& frame) {
  if (frame.rows() != frame.cols()) throw DimensionMismatch("metric: frame is not square");
  if (determinant(frame).is_zero()) throw Error("metric: frame vectors are linearly dependent");
  const RationalMatrix p_inv = inverse(RationalMatrix(frame.transpose()));
  MetricData g = from_gram(p_inv.transpose() * p_inv);
  g.frame_ = frame;
  return g;
}

PForm flat(const RationalVector& x, const MetricData& g) {
  if (x.size() != g.dim()) throw DimensionMismatch("flat: vector length differs from dimension");
  return PForm::covector(g.gram() * x);
}

RationalVector sharp(const PForm& w, const MetricData& g) {
  if (w.degree != 1 || w.dim != g.dim()) throw DimensionMismatch("sharp: expects a 1-form");
  return g.gram_inverse() * w.coeffs;
}

RationalMatrix induced_gram(const MetricData& g, int p) {
  const int n = g.dim();
  const auto indices = basis_multi_indices(n, p);
  const Index size = static_cast<Index>(indices.size());
  RationalMatrix out(size, size);
  for (Index a = 0; a < size; ++a) {
    for (Index b = 0; b < size; ++b) {
      if (p == 0) {
        out(a, b) = 1;
        continue;
      }
      RationalMatrix minor(p, p);
      for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c)
          minor(r, c) = g.gram_inverse()(indices[static_cast<std::size_t>(a)][static_cast<std::size_t>(r)],
                                         indices[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]);
      out(a, b) = determinant(minor);
    }
  }
  return out;
}

Rational form_inner(const PForm& a, const PForm& b, const MetricData& g) {
  if (a.degree != b.degree || a.dim != g.dim() || b.dim != g.dim())
    throw DimensionMismatch("form_inner: shapes differ");
  return a.coeffs.dot(induced_gram(g, a.degree) * b.coeffs);
}

namespace {

const Rational& require_volume(const MetricData& g) {
  if (!g.volume_scale())
    throw IrrationalVolume("Hodge star needs det(gram) to be the square of a rational");
  return *g.volume_scale();
}

}  // namespace

PForm volume_form(const MetricData& g) {
  const int n = g.dim();
  MultiIndex all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  return require_volume(g) * PForm::basis(n, all);
}

RationalMatrix hodge_star_matrix(const MetricData& g, int p) {
  const Rational& scale = require_volume(g);
  const int n = g.dim();
  const auto source = basis_multi_indices(n, p);
  const RationalMatrix gp = induced_gram(g, p);
  RationalMatrix h = RationalMatrix::Zero(binomial(n, n - p), static_cast<Index>(source.size()));
  // alpha ^ *beta = <alpha, beta> vol, tested on alpha = e^I: the only
  // surviving component of *beta is the complement of I.
  for (std::size_t i = 0; i < source.size(); ++i) {
    MultiIndex complement;
    for (int k = 0; k < n; ++k)
      if (!std::binary_search(source[i].begin(), source[i].end(), k)) complement.push_back(k);
    MultiIndex joined = source[i];
    joined.insert(joined.end(), complement.begin(), complement.end());
    const int sign = sort_with_sign(joined);
    const Index row = multi_index_position(n, complement);
    for (std::size_t j = 0; j < source.size(); ++j)
      h(row, static_cast<Index>(j)) = Rational(sign) * scale * gp(static_cast<Index>(i), static_cast<Index>(j));
  }
  return h;
}

PForm hodge_star(const PForm& w, const MetricData& g) {
  if (w.dim != g.dim()) throw DimensionMismatch("hodge_star: dimension mismatch");
  return PForm(g.dim() - w.degree, g.dim(), hodge_star_matrix(g, w.degree) * w.coeffs);
}

}  // namespace ckyforms

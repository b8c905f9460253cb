#include "ckyforms/metric_lie.hpp"

#include "ckyforms/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace ckyforms {

RationalVector unit_vector(int n, int i) {
  RationalVector v = RationalVector::Zero(n);
  v(i) = 1;
  return v;
}

MetricLieAlgebra::MetricLieAlgebra(std::vector<std::string> basis_names,
                                   const std::vector<BracketTerm>& structure, MetricData metric)
    : names_(std::move(basis_names)), metric_(std::move(metric)) {
  const int n = dim();
  if (metric_.dim() != n) throw DimensionMismatch("algebra: metric size differs from basis size");
  table_.assign(static_cast<std::size_t>(n * n), RationalVector::Zero(n));
  for (const auto& t : structure) {
    if (t.i < 0 || t.j < 0 || t.k < 0 || t.i >= n || t.j >= n || t.k >= n)
      throw DimensionMismatch("algebra: bracket index out of range");
    if (t.i == t.j) {
      if (!t.c.is_zero()) throw Error("algebra: [e_i, e_i] must vanish");
      continue;
    }
    table_[static_cast<std::size_t>(t.i * n + t.j)](t.k) += t.c;
    table_[static_cast<std::size_t>(t.j * n + t.i)](t.k) -= t.c;
  }
}

std::vector<BracketTerm> MetricLieAlgebra::structure() const {
  std::vector<BracketTerm> out;
  const int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!bracket(i, j)(k).is_zero()) out.push_back({i, j, k, bracket(i, j)(k)});
  return out;
}

const RationalVector& MetricLieAlgebra::bracket(int i, int j) const {
  return table_[static_cast<std::size_t>(i * dim() + j)];
}

RationalVector MetricLieAlgebra::bracket(const RationalVector& x, const RationalVector& y) const {
  const int n = dim();
  RationalVector out = RationalVector::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < n; ++j)
      if (!y(j).is_zero() && i != j) out += (x(i) * y(j)) * bracket(i, j);
  }
  return out;
}

RationalMatrix MetricLieAlgebra::ad(int i) const {
  const int n = dim();
  RationalMatrix m(n, n);
  for (int j = 0; j < n; ++j) m.col(j) = bracket(i, j);
  return m;
}

RationalMatrix MetricLieAlgebra::ad(const RationalVector& x) const {
  const int n = dim();
  RationalMatrix m = RationalMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    if (!x(i).is_zero()) m += x(i) * ad(i);
  return m;
}

MetricLieAlgebra MetricLieAlgebra::with_metric(MetricData metric) const {
  return MetricLieAlgebra(names_, structure(), std::move(metric));
}

std::optional<Violation> validate(const MetricLieAlgebra& alg) {
  const MetricData& g = alg.metric();
  if (g.gram() != g.gram().transpose()) return MetricViolation{0};
  if (auto k = first_nonpositive_minor(g.gram())) return MetricViolation{*k};
  const int n = alg.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const RationalVector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        RationalVector sum = alg.bracket(ei, alg.bracket(ej, ek)) + alg.bracket(ej, alg.bracket(ek, ei)) +
                             alg.bracket(ek, alg.bracket(ei, ej));
        if (!is_zero(RationalMatrix(sum))) return JacobiViolation{{i, j, k}, sum};
      }
  return std::nullopt;
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  if (const auto* j = std::get_if<JacobiViolation>(&v)) {
    os << "Jacobi identity fails on basis triple (" << j->triple[0] << ", " << j->triple[1] << ", "
       << j->triple[2] << "): cyclic sum = (";
    for (Index k = 0; k < j->value.size(); ++k) os << (k ? ", " : "") << to_string(j->value(k));
    os << ")";
  } else {
    const auto& m = std::get<MetricViolation>(v);
    if (m.minor == 0)
      os << "metric is not symmetric";
    else
      os << "metric is not positive definite: leading principal minor of size " << m.minor
         << " is not positive";
  }
  return os.str();
}

void validate_or_throw(const MetricLieAlgebra& alg) {
  if (auto v = validate(alg)) throw ValidationError(*v);
}

RationalMatrix ConnectionCoefficients::along(const RationalVector& x) const {
  const Index n = static_cast<Index>(gamma.size());
  RationalMatrix m = RationalMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    if (!x(i).is_zero()) m += x(i) * gamma[static_cast<std::size_t>(i)];
  return m;
}

ConnectionCoefficients levi_civita(const MetricLieAlgebra& alg) {
  const int n = alg.dim();
  const RationalMatrix& gram = alg.metric().gram();
  const RationalMatrix& gram_inv = alg.metric().gram_inverse();
  // inner(v, k) = <v, e_k>
  auto inner_with = [&](const RationalVector& v, int k) { return v.dot(gram.col(k)); };
  ConnectionCoefficients conn;
  conn.gamma.assign(static_cast<std::size_t>(n), RationalMatrix::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RationalVector rhs(n);
      for (int k = 0; k < n; ++k)
        rhs(k) = (inner_with(alg.bracket(i, j), k) - inner_with(alg.bracket(j, k), i) +
                  inner_with(alg.bracket(k, i), j)) /
                 2;
      conn.gamma[static_cast<std::size_t>(i)].col(j) = gram_inv * rhs;
    }
  return conn;
}

RationalMatrix lift_endomorphism(const RationalMatrix& b, int p) {
  if (b.rows() != b.cols()) throw DimensionMismatch("lift_endomorphism: matrix is not square");
  const int n = static_cast<int>(b.rows());
  const auto indices = basis_multi_indices(n, p);
  const Index size = static_cast<Index>(indices.size());
  RationalMatrix out = RationalMatrix::Zero(size, size);
  for (Index s = 0; s < size; ++s) {
    const MultiIndex& slots = indices[static_cast<std::size_t>(s)];
    for (std::size_t i = 0; i < slots.size(); ++i) {
      for (int k = 0; k < n; ++k) {
        const Rational& coeff = b(k, slots[i]);
        if (coeff.is_zero()) continue;
        MultiIndex replaced = slots;
        replaced[i] = k;
        const int sign = sort_with_sign(replaced);
        if (sign == 0) continue;
        out(s, multi_index_position(n, replaced)) += sign > 0 ? coeff : Rational(-coeff);
      }
    }
  }
  return out;
}

RationalMatrix nabla_matrix(const ConnectionCoefficients& conn, const RationalVector& x, int p) {
  // Left-invariant forms have constant coefficients, so only the connection
  // acts: (nabla_x w)(v..) = -sum_i w(.., nabla_x v_i, ..).
  return -lift_endomorphism(conn.along(x), p);
}

PForm nabla_form(const ConnectionCoefficients& conn, const RationalVector& x, const PForm& w) {
  if (x.size() != w.dim || static_cast<int>(conn.gamma.size()) != w.dim)
    throw DimensionMismatch("nabla_form: dimension mismatch");
  return PForm(w.degree, w.dim, nabla_matrix(conn, x, w.degree) * w.coeffs);
}

RationalMatrix cediff_matrix(const MetricLieAlgebra& alg, int p) {
  const int n = alg.dim();
  const auto targets = basis_multi_indices(n, p + 1);
  RationalMatrix d = RationalMatrix::Zero(static_cast<Index>(targets.size()), binomial(n, p));
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const MultiIndex& slots = targets[t];
    for (std::size_t a = 0; a < slots.size(); ++a)
      for (std::size_t b = a + 1; b < slots.size(); ++b) {
        const RationalVector& br = alg.bracket(slots[a], slots[b]);
        const int outer = (a + b) % 2 == 0 ? 1 : -1;
        MultiIndex rest;
        for (std::size_t c = 0; c < slots.size(); ++c)
          if (c != a && c != b) rest.push_back(slots[c]);
        for (int m = 0; m < n; ++m) {
          if (br(m).is_zero()) continue;
          MultiIndex args{m};
          args.insert(args.end(), rest.begin(), rest.end());
          const int sign = sort_with_sign(args);
          if (sign == 0) continue;
          d(static_cast<Index>(t), multi_index_position(n, args)) += Rational(outer * sign) * br(m);
        }
      }
  }
  return d;
}

PForm cediff(const MetricLieAlgebra& alg, const PForm& w) {
  if (w.dim != alg.dim()) throw DimensionMismatch("cediff: dimension mismatch");
  return PForm(w.degree + 1, w.dim, cediff_matrix(alg, w.degree) * w.coeffs);
}

RationalMatrix codiff_matrix(const MetricLieAlgebra& alg, const ConnectionCoefficients& conn, int p) {
  const int n = alg.dim();
  if (p < 1) throw DimensionMismatch("codiff: degree must be at least 1");
  const RationalMatrix& gi = alg.metric().gram_inverse();
  RationalMatrix out = RationalMatrix::Zero(binomial(n, p - 1), binomial(n, p));
  std::vector<RationalMatrix> nablas;
  for (int j = 0; j < n; ++j) nablas.push_back(nabla_matrix(conn, unit_vector(n, j), p));
  for (int i = 0; i < n; ++i) {
    const RationalMatrix contract_i = contract_matrix(unit_vector(n, i), p);
    for (int j = 0; j < n; ++j)
      if (!gi(i, j).is_zero()) out -= gi(i, j) * (contract_i * nablas[static_cast<std::size_t>(j)]);
  }
  return out;
}

PForm codiff(const MetricLieAlgebra& alg, const ConnectionCoefficients& conn, const PForm& w) {
  if (w.dim != alg.dim()) throw DimensionMismatch("codiff: dimension mismatch");
  return PForm(w.degree - 1, w.dim, codiff_matrix(alg, conn, w.degree) * w.coeffs);
}

std::optional<int> nilpotency_step(const MetricLieAlgebra& alg) {
  const int n = alg.dim();
  Subspace term = Subspace::full(n);
  int step = 0;
  while (!term.is_zero()) {
    std::vector<RationalVector> spanning;
    for (int i = 0; i < n; ++i)
      for (const auto& v : term.basis_vectors()) spanning.push_back(alg.bracket(unit_vector(n, i), v));
    Subspace next = Subspace::span(spanning, n);
    ++step;
    if (next == term) return std::nullopt;
    term = std::move(next);
  }
  return step;
}

}  // namespace ckyforms

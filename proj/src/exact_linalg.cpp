#include "ckyforms/exact_linalg.hpp"

#include <utility>

namespace ckyforms {

RowEchelon rref(const RationalMatrix& m) {
  RowEchelon out{m, {}};
  RationalMatrix& a = out.matrix;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Index lead_row = 0;
  for (Index col = 0; col < cols && lead_row < rows; ++col) {
    Index pivot = -1;
    for (Index i = lead_row; i < rows; ++i) {
      if (!a(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead_row) a.row(pivot).swap(a.row(lead_row));
    const Rational inv = Rational(1) / a(lead_row, col);
    for (Index j = col; j < cols; ++j) a(lead_row, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == lead_row || a(i, col).is_zero()) continue;
      const Rational factor = a(i, col);
      for (Index j = col; j < cols; ++j) a(i, j) -= factor * a(lead_row, j);
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  return out;
}

Index rank(const RationalMatrix& m) { return static_cast<Index>(rref(m).pivots.size()); }

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant: matrix is not square");
  RationalMatrix a = m;
  const Index n = a.rows();
  Rational det = 1;
  for (Index col = 0; col < n; ++col) {
    Index pivot = -1;
    for (Index i = col; i < n; ++i)
      if (!a(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Index i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Rational factor = a(i, col) / a(col, col);
      for (Index j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix is not square");
  const Index n = m.rows();
  RationalMatrix aug(n, 2 * n);
  aug << m, RationalMatrix::Identity(n, n);
  RowEchelon e = rref(aug);
  if (static_cast<Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    throw Error("inverse: matrix is singular");
  return e.matrix.rightCols(n);
}

Subspace::Subspace(Index ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(const RationalMatrix& rows) {
  Subspace s(rows.cols());
  RowEchelon e = rref(rows);
  s.basis_ = e.matrix.topRows(static_cast<Index>(e.pivots.size()));
  return s;
}

Subspace Subspace::span(const std::vector<RationalVector>& vectors, Index ambient_dim) {
  RationalMatrix rows(static_cast<Index>(vectors.size()), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw DimensionMismatch("Subspace::span: vector size");
    rows.row(static_cast<Index>(i)) = vectors[i].transpose();
  }
  return span(rows);
}

Subspace Subspace::full(Index ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = RationalMatrix::Identity(ambient_dim, ambient_dim);
  return s;
}

std::vector<RationalVector> Subspace::basis_vectors() const {
  std::vector<RationalVector> out;
  for (Index i = 0; i < basis_.rows(); ++i) out.push_back(basis_vector(i));
  return out;
}

bool Subspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("Subspace::contains: vector size");
  RationalMatrix stacked(basis_.rows() + 1, ambient_);
  stacked << basis_, v.transpose();
  return rank(stacked) == basis_.rows();
}

RationalMatrix Subspace::annihilator() const {
  return kernel_basis(basis_).basis();
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
}

Subspace kernel_basis(const RationalMatrix& m) {
  const Index cols = m.cols();
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<RationalVector> vectors;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RationalVector v = RationalVector::Zero(cols);
    v(free) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v(e.pivots[r]) = -e.matrix(static_cast<Index>(r), free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(vectors, cols);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspace_intersect: ambient dimensions differ");
  RationalMatrix ca = a.annihilator();
  RationalMatrix cb = b.annihilator();
  RationalMatrix constraints(ca.rows() + cb.rows(), a.ambient_dim());
  constraints << ca, cb;
  return kernel_basis(constraints);
}

bool subspace_contains(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspace_contains: ambient dimensions differ");
  if (b.dim() > a.dim()) return false;
  return subspace_sum(a, b).dim() == a.dim();
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspace_sum: ambient dimensions differ");
  RationalMatrix rows(a.dim() + b.dim(), a.ambient_dim());
  rows << a.basis(), b.basis();
  return Subspace::span(rows);
}

Subspace image(const RationalMatrix& map, const Subspace& s) {
  if (map.cols() != s.ambient_dim()) throw DimensionMismatch("image: map/subspace size");
  RationalMatrix rows = s.basis() * map.transpose();
  return Subspace::span(rows);
}

Polynomial char_polynomial(const RationalMatrix& m) { return Polynomial(char_poly(m)); }

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

void swap_cols(PolyMatrix& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

}  // namespace

std::vector<Polynomial> invariant_factors(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("invariant_factors: matrix is not square");
  const std::size_t n = static_cast<std::size_t>(m.rows());
  PolyMatrix a(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational entry = -m(static_cast<Index>(i), static_cast<Index>(j));
      a[i][j] = i == j ? Polynomial(std::vector<Rational>{entry, Rational(1)}) : Polynomial(entry);
    }

  std::vector<Polynomial> diagonal;
  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      // Move a nonzero entry of least degree to (k, k).
      int best = -1;
      std::size_t bi = k, bj = k;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
            best = a[i][j].degree();
            bi = i;
            bj = j;
          }
      if (best < 0) break;
      std::swap(a[k], a[bi]);
      swap_cols(a, k, bj);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k].is_zero()) continue;
        auto [q, r] = a[i][k].divmod(a[k][k]);
        for (std::size_t j = k; j < n; ++j) a[i][j] -= q * a[k][j];
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j].is_zero()) continue;
        auto [q, r] = a[k][j].divmod(a[k][k]);
        for (std::size_t i = k; i < n; ++i) a[i][j] -= q * a[i][k];
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      // Divisibility: every remaining entry must be a multiple of the pivot.
      bool divisible = true;
      for (std::size_t i = k + 1; i < n && divisible; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!a[i][j].divmod(a[k][k]).second.is_zero()) {
            for (std::size_t c = k; c < n; ++c) a[k][c] += a[i][c];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    diagonal.push_back(a[k][k].monic());
  }

  std::vector<Polynomial> factors;
  for (const auto& d : diagonal)
    if (!d.is_zero() && d.degree() > 0) factors.push_back(d);
  return factors;
}

bool similar(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionMismatch("similar: matrices must be square of equal size");
  return invariant_factors(a) == invariant_factors(b);
}

std::optional<int> nilpotency_index(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("nilpotency_index: matrix is not square");
  const Index n = m.rows();
  RationalMatrix power = RationalMatrix::Identity(n, n);
  for (int k = 0; k <= n; ++k) {
    if (is_zero(power)) return k;
    power = (power * m).eval();
  }
  return std::nullopt;
}

}  // namespace ckyforms

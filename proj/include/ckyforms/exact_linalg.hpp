#ifndef CKYFORMS_EXACT_LINALG_HPP
#define CKYFORMS_EXACT_LINALG_HPP

#include "ckyforms/polynomial.hpp"
#include "ckyforms/rational.hpp"

#include <vector>

namespace ckyforms {

struct RowEchelon {
  RationalMatrix matrix;       ///< reduced row-echelon form, same shape as the input
  std::vector<Index> pivots;   ///< strictly increasing pivot columns
};

/// Unique reduced row-echelon form by exact Gauss-Jordan elimination.
RowEchelon rref(const RationalMatrix& m);

Index rank(const RationalMatrix& m);

/// Exact determinant; throws DimensionMismatch for non-square input.
Rational determinant(const RationalMatrix& m);

/// Exact inverse; throws Error when m is singular.
RationalMatrix inverse(const RationalMatrix& m);

/// A linear subspace of Q^n stored as the nonzero rows of its canonical
/// RREF basis. Two subspaces are equal iff their stored bases coincide.
class Subspace {
 public:
  explicit Subspace(Index ambient_dim = 0);

  /// Row span of `rows` (each row is a vector of the ambient space).
  static Subspace span(const RationalMatrix& rows);
  static Subspace span(const std::vector<RationalVector>& vectors, Index ambient_dim);
  static Subspace full(Index ambient_dim);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }

  /// Canonical basis, one vector per row.
  const RationalMatrix& basis() const { return basis_; }
  RationalVector basis_vector(Index i) const { return basis_.row(i).transpose(); }
  std::vector<RationalVector> basis_vectors() const;

  bool contains(const RationalVector& v) const;

  /// Linear constraints whose common kernel is this subspace.
  RationalMatrix annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Index ambient_;
  RationalMatrix basis_;
};

/// {v : m v = 0}.
Subspace kernel_basis(const RationalMatrix& m);

Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// True iff b is contained in a.
bool subspace_contains(const Subspace& a, const Subspace& b);

Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Image of a subspace under a linear map given as a matrix acting on
/// column vectors.
Subspace image(const RationalMatrix& map, const Subspace& s);

/// Characteristic polynomial det(xI - m), ascending coefficients, monic.
/// Division-free Berkowitz recurrence, so it serves exact and floating
/// scalars alike.
template <typename Derived>
std::vector<typename Derived::Scalar> char_poly(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionMismatch("char_poly: matrix is not square");
  const Index n = m.rows();
  // Descending coefficients of the characteristic polynomial of the leading
  // (r+1)x(r+1) block.
  std::vector<Scalar> poly{Scalar(1)};
  for (Index r = 0; r < n; ++r) {
    std::vector<Scalar> toeplitz(static_cast<std::size_t>(r) + 2);
    toeplitz[0] = Scalar(1);
    toeplitz[1] = -m(r, r);
    if (r > 0) {
      // power = A_r^k C, starting from the column above the diagonal.
      Eigen::Matrix<Scalar, Eigen::Dynamic, 1> power = m.col(r).head(r);
      for (Index k = 0; k < r; ++k) {
        Scalar acc = Scalar(0);
        for (Index j = 0; j < r; ++j) acc += m(r, j) * power(j);
        toeplitz[static_cast<std::size_t>(k) + 2] = -acc;
        if (k + 1 < r) power = (m.topLeftCorner(r, r) * power).eval();
      }
    }
    std::vector<Scalar> next(static_cast<std::size_t>(r) + 2, Scalar(0));
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j <= std::min(i, poly.size() - 1); ++j)
        next[i] += toeplitz[i - j] * poly[j];
    poly = std::move(next);
  }
  return {poly.rbegin(), poly.rend()};
}

/// Characteristic polynomial as a Polynomial object.
Polynomial char_polynomial(const RationalMatrix& m);

/// Monic invariant factors of m (the nonconstant diagonal entries of the
/// Smith form of xI - m over Q[x]), each dividing the next.
std::vector<Polynomial> invariant_factors(const RationalMatrix& m);

/// Similarity over Q (equivalently over any extension field): equal
/// invariant factors.
bool similar(const RationalMatrix& a, const RationalMatrix& b);

/// Smallest k with m^k = 0, or nullopt when m is not nilpotent.
std::optional<int> nilpotency_index(const RationalMatrix& m);

}  // namespace ckyforms

#endif  // CKYFORMS_EXACT_LINALG_HPP

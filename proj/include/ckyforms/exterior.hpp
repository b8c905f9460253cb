#ifndef CKYFORMS_EXTERIOR_HPP
#define CKYFORMS_EXTERIOR_HPP

#include "ckyforms/rational.hpp"

#include <optional>
#include <vector>

namespace ckyforms {

/// Strictly increasing list of 0-based basis indices.
using MultiIndex = std::vector<int>;

Index binomial(int n, int p);

/// All strictly increasing p-tuples from {0..n-1} in lexicographic order.
/// Returns an empty list when p > n or p < 0.
std::vector<MultiIndex> basis_multi_indices(int n, int p);

/// Position of `index` in basis_multi_indices(n, index.size()).
Index multi_index_position(int n, const MultiIndex& index);

/// Sorts an index tuple in place; returns the permutation sign, or 0 when
/// an index repeats.
int sort_with_sign(MultiIndex& index);

/// A p-form on an n-dimensional space. coeffs(k) is the value of the form on
/// the k-th lexicographic basis multi-vector, so the form equals
/// sum_k coeffs(k) e^{I_k}.
struct PForm {
  int degree = 0;
  int dim = 0;
  RationalVector coeffs;

  PForm() = default;
  PForm(int degree, int dim, RationalVector coeffs);

  static PForm zero(int dim, int degree);
  /// e^{i_1} ^ ... ^ e^{i_p}; the indices need not be sorted.
  static PForm basis(int dim, MultiIndex index);
  static PForm scalar(int dim, const Rational& value);
  /// The 1-form sum_i c_i e^i.
  static PForm covector(const RationalVector& components);

  Rational operator[](const MultiIndex& index) const;
  bool is_zero() const;

  PForm& operator+=(const PForm& o);
  PForm& operator-=(const PForm& o);
  PForm& operator*=(const Rational& c);
  friend PForm operator+(PForm a, const PForm& b) { return a += b; }
  friend PForm operator-(PForm a, const PForm& b) { return a -= b; }
  friend PForm operator*(const Rational& c, PForm a) { return a *= c; }
  friend PForm operator-(PForm a) { return a *= Rational(-1); }
  friend bool operator==(const PForm& a, const PForm& b);
};

/// Value of w on the given vectors: w(v_1, ..., v_p).
Rational evaluate(const PForm& w, const std::vector<RationalVector>& vectors);

PForm wedge(const PForm& a, const PForm& b);

/// Interior product x ⌟ w. Contracting a 0-form yields the degree -1 zero
/// sentinel.
PForm contract(const RationalVector& x, const PForm& w);

/// Matrix of w -> left ^ w from degree p to degree p + deg(left).
RationalMatrix wedge_matrix(const PForm& left, int p);

/// Matrix of w -> x ⌟ w from degree p to p - 1 (p >= 1).
RationalMatrix contract_matrix(const RationalVector& x, int p);

/// Thrown by hodge_star when det(gram) has no rational square root.
class IrrationalVolume : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(Index minor, const std::string& what) : Error(what), minor_(minor) {}
  /// Size (1-based) of the first leading principal minor that is not > 0.
  Index minor() const { return minor_; }

 private:
  Index minor_;
};

/// A positive definite inner product on Q^n with its derived data.
class MetricData {
 public:
  MetricData() = default;

  /// Throws NotPositiveDefinite or DimensionMismatch.
  static MetricData from_gram(const RationalMatrix& gram);

  /// The rows of `frame` are declared orthonormal; the Gram matrix of the
  /// standard basis follows as P^{-T} P^{-1} with P = frame^T.
  static MetricData from_orthonormal_frame(const RationalMatrix& frame);

  static MetricData identity(int n) { return from_gram(RationalMatrix::Identity(n, n)); }

  int dim() const { return static_cast<int>(gram_.rows()); }
  const RationalMatrix& gram() const { return gram_; }
  const RationalMatrix& gram_inverse() const { return gram_inverse_; }
  /// sqrt(det gram) when it is rational.
  const std::optional<Rational>& volume_scale() const { return volume_scale_; }
  /// The frame this metric was declared from, if any.
  const std::optional<RationalMatrix>& frame() const { return frame_; }

  Rational inner(const RationalVector& x, const RationalVector& y) const {
    return x.dot(gram_ * y);
  }

 private:
  RationalMatrix gram_;
  RationalMatrix gram_inverse_;
  std::optional<Rational> volume_scale_;
  std::optional<RationalMatrix> frame_;
};

/// Index of the first leading principal minor that is not positive, or
/// nullopt when the symmetric matrix is positive definite.
std::optional<Index> first_nonpositive_minor(const RationalMatrix& gram);

/// The 1-form <x, .>.
PForm flat(const RationalVector& x, const MetricData& g);

/// The vector dual to a 1-form.
RationalVector sharp(const PForm& w, const MetricData& g);

/// Gram matrix of the induced inner product on degree-p forms in the
/// lexicographic basis: entry (I, J) = det(gram_inverse[I, J]).
RationalMatrix induced_gram(const MetricData& g, int p);

Rational form_inner(const PForm& a, const PForm& b, const MetricData& g);

/// Riemannian volume form sqrt(det g) e^0 ^ ... ^ e^{n-1}.
PForm volume_form(const MetricData& g);

/// Hodge star from degree p to degree n - p, orientation e^0 ^ ... ^ e^{n-1}.
RationalMatrix hodge_star_matrix(const MetricData& g, int p);

PForm hodge_star(const PForm& w, const MetricData& g);

}  // namespace ckyforms

#endif  // CKYFORMS_EXTERIOR_HPP

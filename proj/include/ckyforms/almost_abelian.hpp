#ifndef CKYFORMS_ALMOST_ABELIAN_HPP
#define CKYFORMS_ALMOST_ABELIAN_HPP

#include "ckyforms/cky_solver.hpp"
#include "ckyforms/metric_lie.hpp"

#include <optional>
#include <utility>

namespace ckyforms {

class MetricNotAdapted : public Error {
 public:
  using Error::Error;
};

/// How an inner product is specified: directly by its Gram matrix, or by a
/// frame (rows) declared orthonormal.
struct MetricSpec {
  enum class Kind { gram, orthonormal_frame };
  Kind kind = Kind::gram;
  RationalMatrix matrix;

  static MetricSpec gram(RationalMatrix g) { return {Kind::gram, std::move(g)}; }
  static MetricSpec frame(RationalMatrix f) { return {Kind::orthonormal_frame, std::move(f)}; }
  static MetricSpec standard(int n) { return gram(RationalMatrix::Identity(n, n)); }

  MetricData to_metric() const;
};

/// g = R e0 ⋉_M u with e0 a unit vector orthogonal to the abelian ideal u,
/// and M = S + A split into metric-symmetric and metric-skew parts on u.
struct AlmostAbelianData {
  int dim = 0;
  int e0_index = 0;
  std::vector<int> u_indices;  ///< basis indices spanning u, ascending
  RationalMatrix M;            ///< ad_{e0}|_u in the u-basis
  RationalMatrix S;
  RationalMatrix A;
  RationalMatrix gram_u;       ///< restriction of the metric to u

  /// Vector of u (u-coordinates) as a vector of g.
  RationalVector embed_vector(const RationalVector& u_coords) const;
  /// Endomorphism of u extended by zero on e0, as an n x n matrix.
  RationalMatrix extend(const RationalMatrix& u_endomorphism) const;
  /// Form on u as a form on g vanishing on e0.
  PForm embed_form(const PForm& u_form) const;
  /// The dual covector e^0.
  PForm e0_covector() const;
};

/// Builds the almost abelian algebra with [e0, u_j] = sum_i M(i, j) u_i on the
/// basis e0, e1, ..., e_{n-1}. When e0 is not orthogonal to u or not of unit
/// length, e0 is replaced by its normalized orthogonal complement to u; the
/// bracket matrix is rescaled accordingly. Throws MetricNotAdapted when that
/// normalization needs an irrational scale.
std::pair<MetricLieAlgebra, AlmostAbelianData> build(const RationalMatrix& M, const MetricSpec& metric,
                                                     std::vector<std::string> basis_names = {});

/// Index e such that the remaining basis vectors span an abelian ideal.
std::optional<int> detect_e0(const MetricLieAlgebra& alg);

/// Splitting data for an algebra already in almost abelian form. Throws
/// Error when `e0` does not complement an abelian ideal and MetricNotAdapted
/// when e0 is not a unit vector orthogonal to it.
AlmostAbelianData from_algebra(const MetricLieAlgebra& alg, std::optional<int> e0 = std::nullopt);

/// ad_{e0} restricted to the ideal spanned by the other basis vectors.
RationalMatrix restricted_ad(const MetricLieAlgebra& alg, int e0);

struct FormSplit {
  PForm alpha;  ///< degree p - 1 form on u
  PForm beta;   ///< degree p form on u
};

/// w = e^0 ^ alpha + beta.
FormSplit split_form(const PForm& w, const AlmostAbelianData& data);

PForm join_form(const FormSplit& parts, const AlmostAbelianData& data);

/// Subspace e^0 ^ Λ^{p-1}u* of degree-p forms on g.
Subspace e0_part(const AlmostAbelianData& data, int p);

/// Subspace Λ^p u* of degree-p forms on g.
Subspace u_part(const AlmostAbelianData& data, int p);

/// Parallel p-forms assembled from the S/A data alone: beta-part with
/// A*beta = 0 and (Su) ⌟ beta = 0, alpha-part with A*alpha = 0 and
/// (Su)^flat ^ alpha = 0, for every u.
Subspace predicted_parallel_space(const AlmostAbelianData& data, int p);

struct KernelsCriterion {
  bool holds = false;
  std::optional<RationalVector> witness;  ///< vector of g in Ker(A+S) \ (Ker A ∩ Ker S)
};

/// Ker A ∩ Ker S ⊊ Ker(A+S).
KernelsCriterion kernels_criterion(const AlmostAbelianData& data);

struct ScaleIsomorphism {
  bool isomorphic = false;
  std::optional<Rational> scale;  ///< c with M1 similar to c M2
};

/// Searches rational scales c with M1 ~ c M2. A false result means no
/// rational scale was found, not that none exists over the reals.
ScaleIsomorphism iso_up_to_scale(const RationalMatrix& m1, const RationalMatrix& m2);

/// Every CKY basis form splits as a *-Killing e^0-part plus a Killing
/// u-part, and the CKY space is the sum of those two pieces.
bool cky_splits_into_killing_parts(const AlmostAbelianData& data, const SolutionSpaces& spaces);

/// Killing forms on u lie in the sum over eigenvalues of S of the forms on
/// each eigenspace. nullopt when the spectrum of S is not rational.
std::optional<bool> killing_forms_respect_spectrum(const AlmostAbelianData& data,
                                                   const SolutionSpaces& spaces);

/// All eigenvalues of m are real (exact Sturm count).
bool has_real_spectrum(const RationalMatrix& m);

}  // namespace ckyforms

#endif  // CKYFORMS_ALMOST_ABELIAN_HPP

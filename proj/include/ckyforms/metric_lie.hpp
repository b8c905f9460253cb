#ifndef CKYFORMS_METRIC_LIE_HPP
#define CKYFORMS_METRIC_LIE_HPP

#include "ckyforms/exterior.hpp"

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace ckyforms {

/// One structure constant: [e_i, e_j] has coefficient c on e_k (i < j).
struct BracketTerm {
  int i = 0;
  int j = 0;
  int k = 0;
  Rational c;
};

/// A finite-dimensional real Lie algebra with rational structure constants
/// in a fixed basis, together with an inner product.
class MetricLieAlgebra {
 public:
  MetricLieAlgebra() = default;

  /// Terms with i > j are stored as their antisymmetric counterpart; terms
  /// with i == j must have c == 0. Repeated (i, j, k) entries accumulate.
  MetricLieAlgebra(std::vector<std::string> basis_names, const std::vector<BracketTerm>& structure,
                   MetricData metric);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const MetricData& metric() const { return metric_; }

  /// Nonzero structure constants with i < j, sorted by (i, j, k).
  std::vector<BracketTerm> structure() const;

  /// [e_i, e_j] as a coefficient vector.
  const RationalVector& bracket(int i, int j) const;
  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;

  /// Matrix of ad_{e_i}; column j is [e_i, e_j].
  RationalMatrix ad(int i) const;
  RationalMatrix ad(const RationalVector& x) const;

  MetricLieAlgebra with_metric(MetricData metric) const;

 private:
  std::vector<std::string> names_;
  std::vector<RationalVector> table_;  // n*n brackets, row-major in (i, j)
  MetricData metric_;
};

struct JacobiViolation {
  std::array<int, 3> triple;
  RationalVector value;  ///< the nonzero cyclic sum
};

struct MetricViolation {
  Index minor;  ///< 1-based leading minor size; 0 means a non-symmetric Gram matrix
};

using Violation = std::variant<JacobiViolation, MetricViolation>;

/// First Jacobi violation over basis triples i < j < k, or a metric
/// violation; nullopt when the algebra is valid.
std::optional<Violation> validate(const MetricLieAlgebra& alg);

std::string describe(const Violation& v);

/// Thrown by validate_or_throw.
class ValidationError : public Error {
 public:
  explicit ValidationError(Violation v) : Error(describe(v)), violation_(std::move(v)) {}
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

void validate_or_throw(const MetricLieAlgebra& alg);

/// Levi-Civita connection of a left-invariant metric. gamma[i] is the matrix
/// of v -> nabla_{e_i} v (column j holds nabla_{e_i} e_j).
struct ConnectionCoefficients {
  std::vector<RationalMatrix> gamma;

  /// Matrix of v -> nabla_x v.
  RationalMatrix along(const RationalVector& x) const;
  RationalVector nabla(int i, int j) const { return gamma[static_cast<std::size_t>(i)].col(j); }
};

/// Koszul formula: 2<nabla_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>.
ConnectionCoefficients levi_civita(const MetricLieAlgebra& alg);

/// Matrix on degree-p forms of B*w(x_1..x_p) = sum_i w(x_1, .., B x_i, .., x_p),
/// with B acting on column vectors.
RationalMatrix lift_endomorphism(const RationalMatrix& b, int p);

/// Matrix on degree-p forms of w -> nabla_x w.
RationalMatrix nabla_matrix(const ConnectionCoefficients& conn, const RationalVector& x, int p);

PForm nabla_form(const ConnectionCoefficients& conn, const RationalVector& x, const PForm& w);

/// Chevalley-Eilenberg differential from degree p to p + 1.
RationalMatrix cediff_matrix(const MetricLieAlgebra& alg, int p);

PForm cediff(const MetricLieAlgebra& alg, const PForm& w);

/// Codifferential -sum_{ij} g^{ij} e_i ⌟ nabla_{e_j}, degree p to p - 1.
RationalMatrix codiff_matrix(const MetricLieAlgebra& alg, const ConnectionCoefficients& conn, int p);

PForm codiff(const MetricLieAlgebra& alg, const ConnectionCoefficients& conn, const PForm& w);

/// Unit vector e_i of Q^n.
RationalVector unit_vector(int n, int i);

/// Length of the lower central series until it vanishes (the nilpotency
/// step), or nullopt when the algebra is not nilpotent. The abelian algebra
/// has step 1, the zero algebra step 0.
std::optional<int> nilpotency_step(const MetricLieAlgebra& alg);

}  // namespace ckyforms

#endif  // CKYFORMS_METRIC_LIE_HPP

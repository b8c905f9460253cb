#ifndef CKYFORMS_CKY_SOLVER_HPP
#define CKYFORMS_CKY_SOLVER_HPP

#include "ckyforms/exact_linalg.hpp"
#include "ckyforms/metric_lie.hpp"

#include <optional>

namespace ckyforms {

/// Signals a broken inclusion among computed solution spaces. Never raised
/// for valid input on a correct build.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Kernel is the space of parallel p-forms; one block of binom(n, p) rows
/// per basis vector.
RationalMatrix parallel_operator(const MetricLieAlgebra& alg, int p);

/// Kernel is the space of Killing p-forms, via the polarized condition
/// e_i ⌟ nabla_{e_j} w + e_j ⌟ nabla_{e_i} w = 0 for i <= j.
RationalMatrix killing_operator(const MetricLieAlgebra& alg, int p);

/// Kernel is the space of *-Killing p-forms:
/// nabla_{e_i} w + 1/(n-p+1) e_i^flat ^ d*w = 0 for every i.
RationalMatrix star_killing_operator(const MetricLieAlgebra& alg, int p);

/// Kernel is the space of conformal Killing-Yano p-forms:
/// nabla_{e_i} w - 1/(p+1) e_i ⌟ dw + 1/(n-p+1) e_i^flat ^ d*w = 0.
RationalMatrix cky_operator(const MetricLieAlgebra& alg, int p);

struct SolutionSpaces {
  int p = 0;
  int n = 0;
  Subspace parallel;
  Subspace killing;
  Subspace star_killing;
  Subspace cky;
};

/// All four solution spaces in degree p (0 <= p <= n). Degree 0 and degree
/// n are the constant and volume cases. Throws InvariantViolation if the
/// inclusions P ⊆ K ⊆ CK, P ⊆ *K ⊆ CK or K ∩ *K = P fail.
SolutionSpaces solve(const MetricLieAlgebra& alg, int p);

struct StrictnessReport {
  int p = 0;
  Index dim_parallel = 0;
  Index dim_killing = 0;
  Index dim_star_killing = 0;
  Index dim_cky = 0;
  bool has_nonparallel_cky = false;
  bool has_strict_cky = false;
  bool has_strict_killing = false;
  bool has_strict_star_killing = false;
  /// A basis form of the CKY space outside the Killing space, when one exists.
  std::optional<PForm> witness;
};

StrictnessReport classify(const SolutionSpaces& spaces);

/// Forms of a solution subspace as PForm values.
std::vector<PForm> basis_forms(const Subspace& s, int n, int p);

}  // namespace ckyforms

#endif  // CKYFORMS_CKY_SOLVER_HPP

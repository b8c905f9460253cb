#ifndef CKYFORMS_LATTICE_HPP
#define CKYFORMS_LATTICE_HPP

#include "ckyforms/metric_lie.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ckyforms {

/// tr ad_{e_i} = 0 for every basis vector.
bool is_unimodular(const MetricLieAlgebra& alg);

/// nullopt unless the algebra is nilpotent. Otherwise whether its structure
/// constants are rational in the stored basis, which always holds for exact
/// input.
std::optional<bool> malcev_rational(const MetricLieAlgebra& alg);

struct ScanOptions {
  double t_max = 20.0;
  int steps = 20000;
  double tol = 1e-6;
};

struct LatticeCandidate {
  double t0 = 0;
  std::vector<double> char_poly;  ///< ascending coefficients of det(x - exp(t0 M))
  double integer_distance = 0;    ///< max deviation of a coefficient from its nearest integer
};

struct LatticeScanResult {
  bool unimodular = false;
  std::optional<bool> nilpotent_rational;
  std::vector<LatticeCandidate> candidates;
  /// "candidate-found", "no-candidate-in-range" or "not-unimodular". The
  /// caller may upgrade to "certified-by-paper" from catalog data.
  std::string verdict;
  ScanOptions options;
};

/// Necessary-condition screen for lattices of R ⋉_{exp(tM)} R^d: grid points
/// t0 = k t_max / steps whose exp(t0 M) has an integral characteristic
/// polynomial with determinant 1, up to tol. Local minima of the integer
/// distance are refined by golden-section search before the tolerance test;
/// points whose coefficients are too large to resolve at tol in double
/// precision are skipped.
LatticeScanResult exp_scan(const RationalMatrix& M, const ScanOptions& options = {});

}  // namespace ckyforms

#endif  // CKYFORMS_LATTICE_HPP

#include "ckyforms/lattice.hpp"

#include "ckyforms/exact_linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <limits>

namespace ckyforms {

bool is_unimodular(const MetricLieAlgebra& alg) {
  for (int i = 0; i < alg.dim(); ++i)
    if (!alg.ad(i).trace().is_zero()) return false;
  return true;
}

std::optional<bool> malcev_rational(const MetricLieAlgebra& alg) {
  if (!nilpotency_step(alg)) return std::nullopt;
  return true;  // structure constants are stored as rationals
}

namespace {

// Relative error budget of expm followed by Berkowitz in double precision.
constexpr double kRelativeError = 1e-12;
constexpr double kUnresolved = std::numeric_limits<double>::infinity();

struct Sample {
  double distance = kUnresolved;
  std::vector<double> char_poly;
};

Sample sample(const Eigen::MatrixXd& m, double t, double tol) {
  const Eigen::MatrixXd e = (t * m).exp();
  Sample s;
  s.char_poly = char_poly(e);
  const std::size_t d = s.char_poly.size() - 1;
  double scale = 1.0, dist = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double c = s.char_poly[k];
    scale = std::max(scale, std::abs(c));
    dist = std::max(dist, std::abs(c - std::round(c)));
  }
  // constant coefficient is (-1)^d det
  const double det = d % 2 == 0 ? s.char_poly[0] : -s.char_poly[0];
  dist = std::max(dist, std::abs(det - 1.0));
  if (scale * kRelativeError > tol) return s;  // integrality cannot be resolved here
  s.distance = dist;
  return s;
}

}  // namespace

LatticeScanResult exp_scan(const RationalMatrix& M, const ScanOptions& options) {
  if (M.rows() != M.cols()) throw DimensionMismatch("exp_scan: matrix is not square");
  if (!(options.t_max > 0) || options.steps < 1 || !(options.tol > 0 && options.tol < 0.5))
    throw Error("exp_scan: need t_max > 0, steps >= 1, 0 < tol < 0.5");
  LatticeScanResult result;
  result.options = options;
  result.unimodular = M.trace().is_zero();
  if (nilpotency_index(M)) result.nilpotent_rational = true;
  if (!result.unimodular) {
    result.verdict = "not-unimodular";
    return result;
  }

  const Eigen::MatrixXd m = M.unaryExpr([](const Rational& r) { return to_double(r); });
  const double h = options.t_max / options.steps;
  auto grid = [&](int k) { return k * options.t_max / options.steps; };

  std::vector<Sample> samples(static_cast<std::size_t>(options.steps) + 2);
  for (int k = 1; k <= options.steps; ++k) samples[static_cast<std::size_t>(k)] = sample(m, grid(k), options.tol);

  // For non-nilpotent M the characteristic polynomial of exp(tM) is close to
  // (x-1)^d only because t is small; the run of passing points starting at
  // the first grid point is that neighbourhood of t = 0, not a candidate.
  int first = 1;
  if (!result.nilpotent_rational)
    while (first <= options.steps && samples[static_cast<std::size_t>(first)].distance <= options.tol) ++first;

  auto distance_at = [&](int k) {
    return k < first || k > options.steps ? kUnresolved : samples[static_cast<std::size_t>(k)].distance;
  };

  for (int k = first; k <= options.steps; ++k) {
    const Sample& s = samples[static_cast<std::size_t>(k)];
    if (s.distance == kUnresolved) continue;
    if (s.distance <= options.tol) {
      result.candidates.push_back({grid(k), s.char_poly, s.distance});
      continue;
    }
    if (s.distance > distance_at(k - 1) || s.distance > distance_at(k + 1)) continue;

    // Golden-section search for the minimum of the distance around grid(k).
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = std::max(grid(k) - h, grid(first)), b = grid(k) + h;
    double x1 = b - ratio * (b - a), x2 = a + ratio * (b - a);
    Sample s1 = sample(m, x1, options.tol), s2 = sample(m, x2, options.tol);
    for (int iter = 0; iter < 80 && b - a > 1e-15 * std::max(1.0, b); ++iter) {
      if (s1.distance <= s2.distance) {
        b = x2;
        x2 = x1;
        s2 = std::move(s1);
        x1 = b - ratio * (b - a);
        s1 = sample(m, x1, options.tol);
      } else {
        a = x1;
        x1 = x2;
        s1 = std::move(s2);
        x2 = a + ratio * (b - a);
        s2 = sample(m, x2, options.tol);
      }
    }
    const double t = s1.distance <= s2.distance ? x1 : x2;
    Sample best = s1.distance <= s2.distance ? std::move(s1) : std::move(s2);
    if (best.distance > options.tol) continue;
    if (!result.candidates.empty() && std::abs(result.candidates.back().t0 - t) < h / 2) continue;
    result.candidates.push_back({t, std::move(best.char_poly), best.distance});
  }
  result.verdict = result.candidates.empty() ? "no-candidate-in-range" : "candidate-found";
  return result;
}

}  // namespace ckyforms

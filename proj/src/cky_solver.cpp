#include "ckyforms/cky_solver.hpp"

#include <string>

namespace ckyforms {

namespace {

void require_degree(int p, int lo, int hi, const char* what) {
  if (p < lo || p > hi)
    throw DimensionMismatch(std::string(what) + ": degree " + std::to_string(p) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

RationalMatrix stack(const std::vector<RationalMatrix>& blocks, Index cols) {
  Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  RationalMatrix out(rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

/// Residual blocks  nabla_{e_i} - a e_i ⌟ d + b e_i^flat ^ d*,  one per basis vector.
RationalMatrix conformal_operator(const MetricLieAlgebra& alg, int p, const Rational& a,
                                  const Rational& b) {
  const int n = alg.dim();
  const ConnectionCoefficients conn = levi_civita(alg);
  const RationalMatrix d = a.is_zero() ? RationalMatrix() : cediff_matrix(alg, p);
  const RationalMatrix codiff = b.is_zero() ? RationalMatrix() : codiff_matrix(alg, conn, p);
  std::vector<RationalMatrix> blocks;
  for (int i = 0; i < n; ++i) {
    const RationalVector ei = unit_vector(n, i);
    RationalMatrix block = nabla_matrix(conn, ei, p);
    if (!a.is_zero()) block -= a * (contract_matrix(ei, p + 1) * d);
    if (!b.is_zero()) block += b * (wedge_matrix(flat(ei, alg.metric()), p - 1) * codiff);
    blocks.push_back(std::move(block));
  }
  return stack(blocks, binomial(n, p));
}

}  // namespace

RationalMatrix parallel_operator(const MetricLieAlgebra& alg, int p) {
  require_degree(p, 0, alg.dim(), "parallel_operator");
  return conformal_operator(alg, p, Rational(0), Rational(0));
}

RationalMatrix killing_operator(const MetricLieAlgebra& alg, int p) {
  const int n = alg.dim();
  require_degree(p, 1, n, "killing_operator");
  const ConnectionCoefficients conn = levi_civita(alg);
  std::vector<RationalMatrix> nablas, contracts;
  for (int i = 0; i < n; ++i) {
    nablas.push_back(nabla_matrix(conn, unit_vector(n, i), p));
    contracts.push_back(contract_matrix(unit_vector(n, i), p));
  }
  std::vector<RationalMatrix> blocks;
  for (std::size_t i = 0; i < nablas.size(); ++i)
    for (std::size_t j = i; j < nablas.size(); ++j)
      blocks.push_back(contracts[i] * nablas[j] + contracts[j] * nablas[i]);
  return stack(blocks, binomial(n, p));
}

RationalMatrix star_killing_operator(const MetricLieAlgebra& alg, int p) {
  const int n = alg.dim();
  require_degree(p, 1, n - 1, "star_killing_operator");
  return conformal_operator(alg, p, Rational(0), Rational(1, n - p + 1));
}

RationalMatrix cky_operator(const MetricLieAlgebra& alg, int p) {
  const int n = alg.dim();
  require_degree(p, 1, n - 1, "cky_operator");
  return conformal_operator(alg, p, Rational(1, p + 1), Rational(1, n - p + 1));
}

SolutionSpaces solve(const MetricLieAlgebra& alg, int p) {
  const int n = alg.dim();
  require_degree(p, 0, n, "solve");
  SolutionSpaces s;
  s.p = p;
  s.n = n;
  if (p == 0) {
    s.parallel = s.killing = s.star_killing = s.cky = Subspace::full(1);
    return s;
  }
  s.parallel = kernel_basis(parallel_operator(alg, p));
  if (p == n) {
    s.killing = s.star_killing = s.cky = Subspace::full(1);
  } else {
    s.killing = kernel_basis(killing_operator(alg, p));
    s.star_killing = kernel_basis(star_killing_operator(alg, p));
    s.cky = kernel_basis(cky_operator(alg, p));
  }

  auto check = [&](bool ok, const char* what) {
    if (!ok) throw InvariantViolation("solve(p=" + std::to_string(p) + "): " + what);
  };
  check(subspace_contains(s.killing, s.parallel), "parallel ⊄ killing");
  check(subspace_contains(s.cky, s.killing), "killing ⊄ cky");
  check(subspace_contains(s.star_killing, s.parallel), "parallel ⊄ star_killing");
  check(subspace_contains(s.cky, s.star_killing), "star_killing ⊄ cky");
  check(subspace_intersect(s.killing, s.star_killing) == s.parallel, "killing ∩ star_killing ≠ parallel");
  return s;
}

StrictnessReport classify(const SolutionSpaces& spaces) {
  StrictnessReport r;
  r.p = spaces.p;
  r.dim_parallel = spaces.parallel.dim();
  r.dim_killing = spaces.killing.dim();
  r.dim_star_killing = spaces.star_killing.dim();
  r.dim_cky = spaces.cky.dim();
  r.has_nonparallel_cky = r.dim_cky > r.dim_parallel;
  r.has_strict_cky = r.dim_cky > r.dim_killing;
  r.has_strict_killing = r.dim_killing > r.dim_parallel;
  r.has_strict_star_killing = r.dim_star_killing > r.dim_parallel;
  if (r.has_strict_cky) {
    for (const auto& v : spaces.cky.basis_vectors()) {
      if (!spaces.killing.contains(v)) {
        r.witness = PForm(spaces.p, spaces.n, v);
        break;
      }
    }
  }
  return r;
}

std::vector<PForm> basis_forms(const Subspace& s, int n, int p) {
  std::vector<PForm> out;
  for (const auto& v : s.basis_vectors()) out.emplace_back(p, n, v);
  return out;
}

}  // namespace ckyforms

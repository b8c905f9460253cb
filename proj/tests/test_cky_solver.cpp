#include "support.hpp"

#include <doctest.h>

using namespace ckyforms;

namespace {

struct Sample {
  std::string label;
  MetricLieAlgebra alg;
};

std::vector<Sample> oracle_samples() {
  std::vector<Sample> out;
  for (const auto& inst : default_instances())
    if (inst.algebra.dim() <= 4) out.push_back({inst.entry->name, inst.algebra});
  out.push_back({"aff t=0", instantiate("aff(R)xR", {{"t", Rational(0)}}).algebra});
  out.push_back({"h3 q=2", instantiate("h3", {{"q", Rational(2)}}).algebra});
  std::mt19937 rng(29);
  for (int i = 0; i < 5; ++i) out.push_back({"random " + std::to_string(i), testing_support::random_almost_abelian(rng, 3 + i % 2).first});
  int k = 0;
  for (auto& a : testing_support::non_almost_abelian_samples())
    if (a.dim() <= 4) out.push_back({"non almost abelian " + std::to_string(k++), a});
  return out;
}

std::vector<MetricLieAlgebra> property_samples() {
  std::vector<MetricLieAlgebra> out;
  for (const auto& inst : default_instances()) out.push_back(inst.algebra);
  std::mt19937 rng(31);
  for (int i = 0; i < 6; ++i) out.push_back(testing_support::random_almost_abelian(rng, 3 + i % 3).first);
  for (auto& a : testing_support::non_almost_abelian_samples()) out.push_back(a);
  return out;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("abelian algebra: every form is parallel") {
  const auto alg = build(RationalMatrix::Zero(3, 3), MetricSpec::standard(4)).first;
  for (int p = 0; p <= 4; ++p) {
    const auto s = solve(alg, p);
    CHECK(s.parallel.dim() == binomial(4, p));
    CHECK(s.cky.dim() == binomial(4, p));
  }
}

TEST_CASE("three dimensional examples") {
  for (int q : {1, 2}) {
    const auto h3 = instantiate("h3", {{"q", Rational(q)}}).algebra;
    const auto s = solve(h3, 2);
    const RationalVector f12 = PForm::basis(3, {0, 1}).coeffs;
    CHECK(s.cky.contains(f12));
    CHECK_FALSE(s.killing.contains(f12));
    CHECK(s.star_killing.contains(f12));
    const auto r = classify(s);
    CHECK(r.has_strict_cky);
    REQUIRE(r.witness);
  }
  const RationalVector f12 = PForm::basis(3, {0, 1}).coeffs;
  const auto flat = solve(instantiate("aff(R)xR", {{"t", Rational(0)}}).algebra, 2);
  CHECK(flat.parallel.contains(f12));
  CHECK_FALSE(classify(flat).has_strict_cky);
  const auto tilted = solve(instantiate("aff(R)xR", {{"t", Rational(1)}}).algebra, 2);
  CHECK(tilted.cky.contains(f12));
  CHECK_FALSE(tilted.killing.contains(f12));
  CHECK(classify(tilted).has_strict_cky);
}

TEST_CASE("solution spaces agree with the tensor evaluator") {
  for (const auto& sample : oracle_samples()) {
    CAPTURE(sample.label);
    const int n = sample.alg.dim();
    const auto ref = testing_support::to_oracle(sample.alg);
    for (int p = 0; p <= n; ++p) {
      CAPTURE(p);
      const auto s = solve(sample.alg, p);
      const Index ambient = binomial(n, p);
      CHECK(s.parallel == testing_support::to_subspace(oracle::solution_space(ref, oracle::Condition::parallel, p), ambient));
      CHECK(s.killing == testing_support::to_subspace(oracle::solution_space(ref, oracle::Condition::killing, p), ambient));
      CHECK(s.star_killing ==
            testing_support::to_subspace(oracle::solution_space(ref, oracle::Condition::star_killing, p), ambient));
      CHECK(s.cky == testing_support::to_subspace(oracle::solution_space(ref, oracle::Condition::cky, p), ambient));
    }
  }
}

TEST_CASE("inclusions and the dimension bound") {
  for (const auto& alg : property_samples()) {
    const int n = alg.dim();
    for (int p = 0; p <= n; ++p) {
      const auto s = solve(alg, p);
      CHECK(subspace_contains(s.killing, s.parallel));
      CHECK(subspace_contains(s.star_killing, s.parallel));
      CHECK(subspace_contains(s.cky, s.killing));
      CHECK(subspace_contains(s.cky, s.star_killing));
      CHECK(subspace_intersect(s.killing, s.star_killing) == s.parallel);
      CHECK(s.cky.dim() <= binomial(n + 2, p + 1));
    }
  }
}

TEST_CASE("Hodge star exchanges Killing and *-Killing forms") {
  for (const auto& alg : property_samples()) {
    if (!alg.metric().volume_scale()) continue;
    const int n = alg.dim();
    for (int p = 0; p <= n; ++p) {
      const auto s = solve(alg, p), dual = solve(alg, n - p);
      const RationalMatrix star = hodge_star_matrix(alg.metric(), p);
      CHECK(image(star, s.killing) == dual.star_killing);
      CHECK(image(star, s.cky) == dual.cky);
      CHECK(image(star, s.parallel) == dual.parallel);
    }
  }
}

TEST_CASE("CKY equals Killing in degree one and *-Killing in degree n-1 on the catalog") {
  for (const auto& inst : default_instances()) {
    CAPTURE(inst.entry->name);
    const int n = inst.algebra.dim();
    const auto one = solve(inst.algebra, 1), top = solve(inst.algebra, n - 1);
    CHECK(one.cky == one.killing);
    CHECK(top.cky == top.star_killing);
  }
}

TEST_CASE("only degrees 1 and n-1 carry non-parallel CKY forms") {
  for (const auto& inst : default_instances()) {
    CAPTURE(inst.entry->name);
    const int n = inst.algebra.dim();
    for (int p = 2; p <= n - 2; ++p) {
      const auto s = solve(inst.algebra, p);
      CHECK(s.cky == s.parallel);
    }
  }
}

TEST_CASE("degree 0 and degree n") {
  for (const auto& alg : property_samples()) {
    const int n = alg.dim();
    const auto zero = solve(alg, 0);
    CHECK(zero.parallel.dim() == 1);
    CHECK(zero.cky.dim() == 1);
    // the volume form is parallel
    CHECK(solve(alg, n).parallel.dim() == 1);
  }
}

TEST_CASE("operators annihilate their kernels") {
  const auto alg = instantiate("n4").algebra;
  for (int p = 1; p < 4; ++p) {
    const auto s = solve(alg, p);
    for (const auto& v : s.cky.basis_vectors()) CHECK(is_zero(RationalMatrix(cky_operator(alg, p) * v)));
    CHECK(kernel_basis(killing_operator(alg, p)) == s.killing);
    CHECK(kernel_basis(parallel_operator(alg, p)) == s.parallel);
    CHECK(kernel_basis(star_killing_operator(alg, p)) == s.star_killing);
  }
}

}

#include "ckyforms/lattice.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace ckyforms;

namespace {

bool has_candidate_near(const LatticeScanResult& r, double t, double eps) {
  for (const auto& c : r.candidates)
    if (std::abs(c.t0 - t) < eps) return true;
  return false;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("unimodularity across the catalog") {
  for (const auto& inst : default_instances()) {
    CAPTURE(inst.entry->name);
    CHECK(is_unimodular(inst.algebra) == (inst.entry->name != "aff(R)xR"));
  }
  CHECK(is_unimodular(build(RationalMatrix::Zero(2, 2), MetricSpec::standard(3)).first));
}

TEST_CASE("Malcev rationality applies to nilpotent algebras only") {
  for (const auto& inst : default_instances()) {
    CAPTURE(inst.entry->name);
    if (inst.expected.nilpotent_step) CHECK(malcev_rational(inst.algebra) == true);
    else CHECK_FALSE(malcev_rational(inst.algebra));
  }
  CHECK_FALSE(malcev_rational(instantiate("r_3,-1 x R").algebra));
}

TEST_CASE("zero matrix: every grid point") {
  const auto r = exp_scan(RationalMatrix::Zero(3, 3), {5.0, 50, 1e-6});
  CHECK(r.unimodular);
  CHECK(r.nilpotent_rational == true);
  CHECK(r.candidates.size() == 50);
  CHECK(r.verdict == "candidate-found");
  for (const auto& c : r.candidates) CHECK(c.integer_distance <= 1e-6);
}

TEST_CASE("rotation generator: traces 1, 0, -1, -2") {
  const auto r = exp_scan(make_matrix({{0, -1}, {1, 0}}), {4.0, 4000, 1e-6});
  const double pi = std::acos(-1.0);
  // at pi the trace touches -2 quadratically, so unrefined grid points pass
  for (double t : {pi / 3, pi / 2, 2 * pi / 3, pi}) CHECK(has_candidate_near(r, t, 1e-3));
  for (const auto& c : r.candidates) {
    REQUIRE(c.char_poly.size() == 3);
    CHECK(c.char_poly[0] == doctest::Approx(1.0));
    CHECK(std::abs(c.char_poly[1] - std::round(c.char_poly[1])) <= 1e-6);
  }
  CHECK_FALSE(has_candidate_near(r, 0.3, 0.2));
}

TEST_CASE("integer nilpotent matrix: every integer time is a candidate") {
  const RationalMatrix m = make_matrix({{0, 1, 2}, {0, 0, 1}, {0, 0, 0}});
  const auto r = exp_scan(m, {10.0, 200, 1e-6});
  for (int t = 1; t <= 10; ++t) CHECK(has_candidate_near(r, t, 1e-9));
}

TEST_CASE("catalog screens") {
  const auto scan = [](const char* name) { return exp_scan(instantiate(name).data.M); };
  const double pi = std::acos(-1.0);
  const auto e2 = scan("e(2)xR");
  CHECK(e2.verdict == "candidate-found");
  CHECK(has_candidate_near(e2, pi / 3, 1e-4));
  CHECK(scan("r'_3,0 x R^2").verdict == "candidate-found");
  const auto g58 = scan("g_5,8^-1");
  CHECK(g58.verdict == "candidate-found");
  // trace 2 cosh t + 1 = 4
  CHECK(has_candidate_near(g58, std::acosh(1.5), 1e-4));
  CHECK(scan("r_4,-1/2 x R").verdict == "no-candidate-in-range");
  CHECK(exp_scan(instantiate("aff(R)xR").data.M).verdict == "not-unimodular");
  CHECK(exp_scan(instantiate("aff(R)xR").data.M).candidates.empty());
}

TEST_CASE("every paper-certified entry passes a screen") {
  for (const auto& inst : default_instances()) {
    if (inst.expected.lattice != "yes") continue;
    CAPTURE(inst.entry->name);
    CHECK((malcev_rational(inst.algebra) == true || !exp_scan(inst.data.M).candidates.empty()));
  }
}

TEST_CASE("scan is deterministic and validates options") {
  const RationalMatrix m = instantiate("e(2)xR").data.M;
  const auto a = exp_scan(m, {7.0, 700, 1e-6}), b = exp_scan(m, {7.0, 700, 1e-6});
  REQUIRE(a.candidates.size() == b.candidates.size());
  for (std::size_t i = 0; i < a.candidates.size(); ++i) CHECK(a.candidates[i].t0 == b.candidates[i].t0);
  CHECK_THROWS_AS(exp_scan(m, {0.0, 10, 1e-6}), Error);
  CHECK_THROWS_AS(exp_scan(m, {1.0, 0, 1e-6}), Error);
  CHECK_THROWS_AS(exp_scan(m, {1.0, 10, 0.5}), Error);
  CHECK_THROWS_AS(exp_scan(RationalMatrix::Zero(2, 3)), DimensionMismatch);
}

}

#include "ckyforms/exterior.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ckyforms;

namespace {

PForm random_form(std::mt19937& rng, int n, int p) {
  return PForm(p, n, testing_support::random_matrix(rng, static_cast<int>(binomial(n, p)), 1));
}

}  // namespace

TEST_SUITE("exterior") {

TEST_CASE("multi-index basics") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
  const auto idx = basis_multi_indices(4, 2);
  REQUIRE(idx.size() == 6);
  CHECK(idx.front() == MultiIndex{0, 1});
  CHECK(idx.back() == MultiIndex{2, 3});
  for (std::size_t k = 0; k < idx.size(); ++k) CHECK(multi_index_position(4, idx[k]) == static_cast<Index>(k));
  MultiIndex swapped{2, 0, 1};
  CHECK(sort_with_sign(swapped) == 1);
  CHECK(swapped == MultiIndex{0, 1, 2});
  MultiIndex odd{1, 0};
  CHECK(sort_with_sign(odd) == -1);
  MultiIndex repeated{1, 1};
  CHECK(sort_with_sign(repeated) == 0);
}

TEST_CASE("basis forms evaluate with the determinant convention") {
  const PForm w = PForm::basis(3, {1, 0});  // e^1 ^ e^0 = -e^0 ^ e^1
  CHECK(w[{0, 1}] == -1);
  std::vector<RationalVector> args{unit_vector(3, 0), unit_vector(3, 1)};
  CHECK(evaluate(w, args) == -1);
  const RationalMatrix vs = make_matrix({{1, 2, 0}, {3, 4, 5}, {0, 1, 1}});
  std::vector<RationalVector> cols;
  for (Index i = 0; i < 3; ++i) cols.emplace_back(vs.col(i));
  CHECK(evaluate(PForm::basis(3, {0, 1, 2}), cols) == determinant(vs));
}

TEST_CASE("wedge is associative and graded commutative") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5;
    const int p = trial % 3, q = 1 + trial % 2, r = 1;
    const PForm a = random_form(rng, n, p), b = random_form(rng, n, q), c = random_form(rng, n, r);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    const PForm ba = wedge(b, a);
    CHECK(wedge(a, b) == ((p * q) % 2 == 0 ? ba : -ba));
    CHECK(wedge_matrix(a, q) * b.coeffs == wedge(a, b).coeffs);
  }
}

TEST_CASE("interior product is an antiderivation") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4, p = 1 + trial % 2, q = 1 + trial % 3 % 2;
    const PForm a = random_form(rng, n, p), b = random_form(rng, n, q);
    const RationalVector x = testing_support::random_matrix(rng, n, 1);
    const PForm lhs = contract(x, wedge(a, b));
    const PForm rhs = wedge(contract(x, a), b) + (p % 2 == 0 ? wedge(a, contract(x, b)) : -wedge(a, contract(x, b)));
    CHECK(lhs == rhs);
    CHECK(contract(x, contract(x, a)).is_zero());
    CHECK(contract_matrix(x, p) * a.coeffs == contract(x, a).coeffs);
  }
}

TEST_CASE("metric from an orthonormal frame") {
  const MetricData g = MetricData::from_orthonormal_frame(make_matrix({{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}));
  // e1 + e2 and e2 orthonormal: e1 = f1 - f2, e2 = f2
  CHECK(g.gram() == make_matrix({{1, 0, 0}, {0, 2, -1}, {0, -1, 1}}));
  CHECK(g.volume_scale() == Rational(1));
  CHECK(g.frame().has_value());
  CHECK_THROWS_AS(MetricData::from_gram(make_matrix({{1, 2}, {2, 1}})), NotPositiveDefinite);
  Index minor = 0;
  try {
    MetricData::from_gram(make_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}));
  } catch (const NotPositiveDefinite& e) {
    minor = e.minor();
  }
  CHECK(minor == 3);
}

TEST_CASE("flat and sharp are inverse") {
  const MetricData g = MetricData::from_gram(make_matrix({{2, 1}, {1, 1}}));
  const RationalVector x = make_matrix({{1}, {-3}});
  CHECK(sharp(flat(x, g), g) == x);
  CHECK(flat(x, g)[{0}] == -1);
}

TEST_CASE("Hodge star on random frames") {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 3 + trial % 3;
    const MetricData g = MetricData::from_orthonormal_frame(testing_support::random_frame(rng, n));
    const PForm vol = volume_form(g);
    CHECK(form_inner(vol, vol, g) == 1);
    for (int p = 0; p <= n; ++p) {
      const PForm a = random_form(rng, n, p), b = random_form(rng, n, p);
      const PForm star_b = hodge_star(b, g);
      // a ^ *b = <a, b> vol
      CHECK(wedge(a, star_b) == form_inner(a, b, g) * vol);
      const PForm twice = hodge_star(star_b, g);
      CHECK(twice == ((p * (n - p)) % 2 == 0 ? b : -b));
    }
  }
}

TEST_CASE("induced Gram matrix is the form inner product") {
  const MetricData g = MetricData::from_orthonormal_frame(make_matrix({{1, 1, 0}, {0, 1, 0}, {0, 1, 1}}));
  const RationalMatrix ig = induced_gram(g, 2);
  const auto idx = basis_multi_indices(3, 2);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      CHECK(ig(static_cast<Index>(a), static_cast<Index>(b)) ==
            form_inner(PForm::basis(3, idx[a]), PForm::basis(3, idx[b]), g));
}

TEST_CASE("irrational volume is reported") {
  const MetricData g = MetricData::from_gram(make_matrix({{2, 0}, {0, 1}}));
  CHECK_FALSE(g.volume_scale());
  CHECK_THROWS_AS(hodge_star_matrix(g, 1), IrrationalVolume);
}

}

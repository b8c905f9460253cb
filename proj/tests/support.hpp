#ifndef CKYFORMS_TESTS_SUPPORT_HPP
#define CKYFORMS_TESTS_SUPPORT_HPP

#include "ckyforms/almost_abelian.hpp"
#include "ckyforms/catalog.hpp"
#include "ckyforms/cky_solver.hpp"
#include "oracle/naive_cky.hpp"

#include <random>

namespace testing_support {

using namespace ckyforms;

inline oracle::Algebra to_oracle(const MetricLieAlgebra& alg) {
  const int n = alg.dim();
  oracle::Algebra g;
  g.n = n;
  g.bracket.assign(static_cast<std::size_t>(n), oracle::Table(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const RationalVector& b = alg.bracket(i, j);
      g.bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::vector<Rational>(b.data(), b.data() + n);
    }
  g.gram.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = alg.metric().gram()(i, j);
  return g;
}

inline Subspace to_subspace(const std::vector<std::vector<Rational>>& rows, Index ambient) {
  std::vector<RationalVector> vs;
  for (const auto& r : rows) vs.push_back(Eigen::Map<const RationalVector>(r.data(), static_cast<Index>(r.size())));
  return Subspace::span(vs, ambient);
}

inline Rational small_rational(std::mt19937& rng, int range = 3) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 2);
  return Rational(num(rng), den(rng));
}

inline RationalMatrix random_matrix(std::mt19937& rng, int rows, int cols, int range = 3) {
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = small_rational(rng, range);
  return m;
}

/// Unit upper triangular rows: an orthonormal frame with rational volume.
inline RationalMatrix random_frame(std::mt19937& rng, int n) {
  RationalMatrix f = RationalMatrix::Identity(n, n);
  std::uniform_int_distribution<int> entry(-1, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) f(i, j) = entry(rng);
  return f;
}

/// Random almost abelian algebra with e0 unit and orthogonal to u, built
/// from a random frame on u.
inline std::pair<MetricLieAlgebra, AlmostAbelianData> random_almost_abelian(std::mt19937& rng, int n) {
  RationalMatrix frame = RationalMatrix::Identity(n, n);
  frame.bottomRightCorner(n - 1, n - 1) = random_frame(rng, n - 1);
  return build(random_matrix(rng, n - 1, n - 1, 2), MetricSpec::frame(frame));
}

/// A few algebras that are not almost abelian.
inline std::vector<MetricLieAlgebra> non_almost_abelian_samples() {
  std::vector<MetricLieAlgebra> out;
  const auto names = [](int n) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back("e" + std::to_string(i));
    return v;
  };
  // so(3) with the bi-invariant metric
  out.emplace_back(names(3), std::vector<BracketTerm>{{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}}, MetricData::identity(3));
  // sl(2, R) with a left-invariant metric
  out.emplace_back(names(3), std::vector<BracketTerm>{{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}, MetricData::identity(3));
  // aff(R) x aff(R) with a non-diagonal metric
  out.emplace_back(names(4), std::vector<BracketTerm>{{0, 1, 1, 1}, {2, 3, 3, 1}},
                   MetricData::from_orthonormal_frame(make_matrix({{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}})));
  // h3 x aff(R)
  out.emplace_back(names(5), std::vector<BracketTerm>{{0, 1, 2, 1}, {3, 4, 4, 1}}, MetricData::identity(5));
  return out;
}

}  // namespace testing_support

#endif

#ifndef CKYFORMS_TESTS_NAIVE_CKY_HPP
#define CKYFORMS_TESTS_NAIVE_CKY_HPP

// Reference evaluator built on full antisymmetric tensors. It shares only the
// Rational scalar with the library: brackets are read from a plain table,
// the inverse metric, Christoffel symbols, d, d* and the kernels are all
// recomputed here, and d comes from antisymmetrizing nabla rather than from
// brackets.

#include "ckyforms/rational.hpp"

#include <vector>

namespace oracle {

using ckyforms::Rational;
using Table = std::vector<std::vector<Rational>>;

struct Algebra {
  int n = 0;
  std::vector<Table> bracket;  ///< bracket[i][j][k] = coefficient of e_k in [e_i, e_j]
  Table gram;
};

/// Dense tensor with n^p entries, index (i_1..i_p) at sum i_a n^(p-a).
struct Tensor {
  int n = 0;
  int p = 0;
  std::vector<Rational> data;
  Rational& at(const std::vector<int>& idx);
  Rational at(const std::vector<int>& idx) const;
};

Table invert(Table m);
/// gamma[i][j][k]: coefficient of e_k in nabla_{e_i} e_j.
std::vector<Table> christoffel(const Algebra& g);

/// e^{i_1} ^ ... ^ e^{i_p} for strictly increasing indices.
Tensor basis_form(int n, const std::vector<int>& idx);
Tensor nabla(const Algebra& g, const std::vector<Table>& gamma, int i, const Tensor& w);
Tensor exterior_derivative(const Algebra& g, const std::vector<Table>& gamma, const Tensor& w);
Tensor codifferential(const Algebra& g, const std::vector<Table>& gamma, const Tensor& w);
Tensor interior(int i, const Tensor& w);
Tensor flat_wedge(const Algebra& g, int i, const Tensor& w);

enum class Condition { cky, killing, star_killing, parallel };

/// Residual of the chosen condition along e_i, flattened.
std::vector<Rational> residual(const Algebra& g, const std::vector<Table>& gamma, Condition c, int i,
                               const Tensor& w);

/// Strictly increasing p-tuples of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> increasing_tuples(int n, int p);

/// Null space, in coordinates over the lexicographic basis of p-forms, of
/// the linear map w -> (residual along e_0, ..., residual along e_{n-1}).
/// Rows are basis vectors in reduced echelon form.
std::vector<std::vector<Rational>> solution_space(const Algebra& g, Condition c, int p);

/// Reduced row echelon form with zero rows dropped.
std::vector<std::vector<Rational>> echelon(std::vector<std::vector<Rational>> rows);

/// Determinant by expansion over permutations.
Rational leibniz_det(const Table& m);

}  // namespace oracle

#endif

#ifndef CKYFORMS_POLYNOMIAL_HPP
#define CKYFORMS_POLYNOMIAL_HPP

#include "ckyforms/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ckyforms {

/// Univariate polynomial over the rationals. Coefficients are stored in
/// ascending order and never carry trailing zeros, so the zero polynomial
/// has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(const Rational& constant);  // NOLINT: implicit scalar promotion

  static Polynomial monomial(const Rational& c, int degree);
  static Polynomial x() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: returns (quotient, remainder).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (zero when both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Rational roots of p, ascending, without multiplicity. Uses the rational
/// root theorem on the integer-normalized polynomial; returns nullopt when a
/// coefficient is too large to enumerate divisors of.
std::optional<std::vector<Rational>> rational_roots(const Polynomial& p);

/// Number of distinct real roots (Sturm sequence).
int count_real_roots(const Polynomial& p);

}  // namespace ckyforms

#endif  // CKYFORMS_POLYNOMIAL_HPP

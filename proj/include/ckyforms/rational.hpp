#ifndef CKYFORMS_RATIONAL_HPP
#define CKYFORMS_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ckyforms {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Parses "p/q", "p", or a decimal such as "-0.25".
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Exact square root when the argument is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& value);

/// Exact k-th root (k >= 1) when one exists over the rationals. For even k
/// only the non-negative root is returned.
std::optional<Rational> rational_root(const Rational& value, unsigned k);

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

inline bool is_zero(const Rational& value) { return value.is_zero(); }

inline RationalMatrix identity(Index n) {
  return RationalMatrix::Identity(n, n);
}

/// Builds a rational matrix from nested initializer lists of integers or
/// strings; convenient for tables of structure constants.
RationalMatrix make_matrix(std::initializer_list<std::initializer_list<Rational>> rows);

inline bool is_zero(const RationalMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace ckyforms

#endif  // CKYFORMS_RATIONAL_HPP

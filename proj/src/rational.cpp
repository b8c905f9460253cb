#include "ckyforms/rational.hpp"

#include <gmp.h>

#include <cctype>

namespace ckyforms {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw ParseError("empty integer in rational '" + std::string(whole) + "'");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size())
    throw ParseError("missing digits in rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("invalid character in rational '" + std::string(whole) + "'");
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<Integer> integer_root(const Integer& value, unsigned k) {
  if (value < 0) return std::nullopt;
  Integer root;
  if (mpz_root(root.backend().data(), value.backend().data(), k) == 0) return std::nullopt;
  return root;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(trim(s.substr(0, slash)), s);
    Integer den = parse_integer(trim(s.substr(slash + 1)), s);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view frac = s.substr(dot + 1);
    std::string_view head = s.substr(0, dot);
    bool negative = !head.empty() && head[0] == '-';
    Integer ip = (head.empty() || head == "-" || head == "+") ? Integer(0) : parse_integer(head, s);
    if (ip < 0) ip = -ip;
    Integer fp = frac.empty() ? Integer(0) : parse_integer(frac, s);
    if (!frac.empty() && (frac[0] == '-' || frac[0] == '+'))
      throw ParseError("invalid decimal '" + std::string(s) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational value = Rational(ip) + Rational(fp, scale);
    return negative ? Rational(-value) : value;
  }
  return Rational(parse_integer(s, s));
}

std::string to_string(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Rational> rational_root(const Rational& value, unsigned k) {
  if (k == 0) return std::nullopt;
  if (k == 1) return value;
  bool negative = value < 0;
  if (negative && k % 2 == 0) return std::nullopt;
  Integer num = numerator(value);
  if (negative) num = -num;
  auto rn = integer_root(num, k);
  auto rd = integer_root(denominator(value), k);
  if (!rn || !rd) return std::nullopt;
  Rational root(*rn, *rd);
  return negative ? Rational(-root) : root;
}

std::optional<Rational> rational_sqrt(const Rational& value) { return rational_root(value, 2); }

RationalMatrix make_matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  RationalMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw DimensionMismatch("ragged matrix literal");
    Index j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace ckyforms

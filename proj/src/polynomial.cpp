#include "ckyforms/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace ckyforms {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  normalize();
}

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(prod);
  normalize();
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  Polynomial rem = *this;
  if (rem.degree() < divisor.degree()) return {Polynomial(), rem};
  std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1);
  const Rational lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const int shift = rem.degree() - divisor.degree();
    const Rational factor = rem.leading() / lead;
    quot[static_cast<std::size_t>(shift)] = factor;
    for (int k = 0; k <= divisor.degree(); ++k)
      rem.coeffs_[static_cast<std::size_t>(k + shift)] -= factor * divisor.coeffs_[static_cast<std::size_t>(k)];
    rem.normalize();
  }
  return {Polynomial(std::move(quot)), rem};
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coefficient(k);
    if (c.is_zero()) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0 || c != 1) os << to_string(c);
    if (k >= 1) os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

std::optional<std::vector<Integer>> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  if (n > Integer(1000000000000LL)) return std::nullopt;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const Polynomial& p) {
  std::vector<Rational> roots;
  if (p.is_zero() || p.degree() == 0) return roots;
  // Integer-normalize.
  Integer lcm_den = 1;
  for (const auto& c : p.coefficients()) {
    Integer d = denominator(c);
    lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
  }
  std::vector<Integer> ic;
  for (const auto& c : p.coefficients()) ic.push_back(numerator(Rational(c * lcm_den)));
  std::size_t low = 0;
  while (ic[low] == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  if (low + 1 == ic.size()) return roots;
  auto num_divs = positive_divisors(ic[low]);
  auto den_divs = positive_divisors(ic.back());
  if (!num_divs || !den_divs) return std::nullopt;
  for (const auto& a : *num_divs) {
    for (const auto& b : *den_divs) {
      for (int s : {1, -1}) {
        Rational cand(Integer(a * s), b);
        if (p(cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int count_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error("count_real_roots: zero polynomial");
  if (p.degree() == 0) return 0;
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Polynomial r = chain[chain.size() - 2].divmod(chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  std::vector<int> at_minus, at_plus;
  for (const auto& q : chain) {
    const int lead = sign_of(q.leading());
    at_plus.push_back(lead);
    at_minus.push_back(q.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_minus) - sign_changes(at_plus);
}

}  // namespace ckyforms

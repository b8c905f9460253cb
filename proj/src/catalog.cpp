#include "ckyforms/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ckyforms {

bool CatalogParameter::admits(const Rational& value) const {
  if (bound == Bound::positive && value <= 0) return false;
  if (bound == Bound::nonnegative && value < 0) return false;
  return std::find(excluded.begin(), excluded.end(), value) == excluded.end();
}

std::string CatalogParameter::describe_constraint() const {
  std::string out;
  if (bound == Bound::positive) out = name + " > 0";
  if (bound == Bound::nonnegative) out = name + " >= 0";
  for (const auto& v : excluded) out += (out.empty() ? "" : ", ") + name + " != " + to_string(v);
  return out.empty() ? "any rational" : out;
}

namespace {

using Param = CatalogParameter;

std::vector<std::string> names(const std::string& prefix, int first, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(first + i));
  return out;
}

/// Zero matrix on u = span{e1..e_{n-1}}; set(j, i, c) records [e0, e_j] += c e_i.
struct Brackets {
  RationalMatrix m;
  explicit Brackets(int n) : m(RationalMatrix::Zero(n - 1, n - 1)) {}
  Brackets& set(int j, int i, const Rational& c) {
    m(i - 1, j - 1) = c;
    return *this;
  }
};

/// Orthonormal frame given as the standard basis with the row of `target`
/// replaced by e_target + e_extra.
RationalMatrix tilted_frame(int n, int target, int extra) {
  RationalMatrix f = RationalMatrix::Identity(n, n);
  f(target, extra) = 1;
  return f;
}

MetricSpec standard_metric(int n) { return MetricSpec::standard(n); }

ExpectedFacts facts(std::vector<int> strict, std::optional<int> step, bool completely_solvable,
                    std::string lattice) {
  return {std::move(strict), step, completely_solvable, std::move(lattice)};
}

CatalogEntry fixed(std::string name, int n, std::string metric_label, RationalMatrix m, MetricSpec metric,
                   ExpectedFacts expected) {
  CatalogEntry e;
  e.name = std::move(name);
  e.dim = n;
  e.basis = names("e", 0, n);
  e.metric_label = std::move(metric_label);
  e.matrix = [m](const ParameterValues&) { return m; };
  e.metric = [metric](const ParameterValues&) { return metric; };
  e.expected = [expected](const ParameterValues&) { return expected; };
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e;
    e.name = "h3";
    e.dim = 3;
    e.basis = names("f", 1, 3);
    e.parameters = {{"q", Rational(1), Param::Bound::positive, {}}};
    e.metric_label = "g_q = diag(1, 1, q^2)";
    e.matrix = [](const ParameterValues&) { return Brackets(3).set(1, 2, 1).m; };
    e.metric = [](const ParameterValues& v) {
      const Rational& q = v.at("q");
      return MetricSpec::gram(make_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, q * q}}));
    };
    e.expected = [](const ParameterValues&) { return facts({2}, 2, true, "unknown"); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "aff(R)xR";
    e.dim = 3;
    e.basis = names("f", 1, 3);
    e.parameters = {{"t", Rational(1), Param::Bound::nonnegative, {}}};
    e.metric_label = "g_{1,t} = [[1,0,0],[0,1+t^2,t],[0,t,1]]";
    e.matrix = [](const ParameterValues&) { return Brackets(3).set(1, 1, 1).m; };
    e.metric = [](const ParameterValues& v) {
      const Rational& t = v.at("t");
      return MetricSpec::gram(make_matrix({{1, 0, 0}, {0, 1 + t * t, t}, {0, t, 1}}));
    };
    e.expected = [](const ParameterValues& v) {
      return facts(v.at("t").is_zero() ? std::vector<int>{} : std::vector<int>{2}, std::nullopt, true, "no");
    };
    out.push_back(std::move(e));
  }

  const std::string standard = "standard basis orthonormal";
  out.push_back(fixed("h3xR", 4, standard, Brackets(4).set(3, 2, 1).m, standard_metric(4),
                      facts({3}, 2, true, "yes")));
  out.push_back(fixed("n4", 4, standard, Brackets(4).set(2, 1, 1).set(3, 2, 1).m, standard_metric(4),
                      facts({3}, 3, true, "yes")));
  out.push_back(fixed("r_3,-1 x R", 4, "{e0,e1,e2+e3,e3} orthonormal", Brackets(4).set(1, 1, 1).set(2, 2, -1).m,
                      MetricSpec::frame(tilted_frame(4, 2, 3)), facts({3}, std::nullopt, true, "yes")));
  out.push_back(fixed("e(2)xR", 4, "{e0,e1+e2,e2,e3} orthonormal", Brackets(4).set(2, 3, 1).set(3, 2, -1).m,
                      MetricSpec::frame(tilted_frame(4, 1, 2)), facts({3}, std::nullopt, false, "yes")));

  out.push_back(fixed("g_5,2", 5, standard, Brackets(5).set(2, 1, 1).set(3, 2, 1).set(4, 3, 1).m,
                      standard_metric(5), facts({4}, 4, true, "yes")));
  out.push_back(fixed("n4xR", 5, standard, Brackets(5).set(2, 1, 1).set(3, 2, 1).m, standard_metric(5),
                      facts({4}, 3, true, "yes")));
  out.push_back(fixed("g_5,1", 5, standard, Brackets(5).set(2, 1, 1).set(4, 3, 1).m, standard_metric(5),
                      facts({4}, 2, true, "yes")));
  out.push_back(fixed("h3xR^2", 5, standard, Brackets(5).set(2, 1, 1).m, standard_metric(5),
                      facts({4}, 2, true, "yes")));
  out.push_back(fixed("g_5,8^-1", 5, standard, Brackets(5).set(2, 1, 1).set(3, 3, 1).set(4, 4, -1).m,
                      standard_metric(5), facts({4}, std::nullopt, true, "yes")));
  out.push_back(fixed("r_4,-1/2 x R", 5, "{e0,e1,e2,e3+e4,e4} orthonormal",
                      Brackets(5).set(1, 1, 1).set(2, 1, 1).set(2, 2, 1).set(3, 3, -2).m,
                      MetricSpec::frame(tilted_frame(5, 3, 4)), facts({4}, std::nullopt, true, "no")));
  out.push_back(fixed("r_3,-1 x R^2", 5, "{e0,e1,e2+e3,e3,e4} orthonormal", Brackets(5).set(1, 1, 1).set(2, 2, -1).m,
                      MetricSpec::frame(tilted_frame(5, 2, 3)), facts({4}, std::nullopt, true, "yes")));
  {
    CatalogEntry e;
    e.name = "r_4,mu,-1-mu x R";
    e.dim = 5;
    e.basis = names("e", 0, 5);
    e.parameters = {{"mu", Rational(1), Param::Bound::none, {Rational(0), Rational(-1)}}};
    e.metric_label = "{e0,e1,e2,e3+e4,e4} orthonormal";
    e.matrix = [](const ParameterValues& v) {
      const Rational& mu = v.at("mu");
      return Brackets(5).set(1, 1, 1).set(2, 2, mu).set(3, 3, -(1 + mu)).m;
    };
    e.metric = [](const ParameterValues&) { return MetricSpec::frame(tilted_frame(5, 3, 4)); };
    e.expected = [](const ParameterValues&) { return facts({4}, std::nullopt, true, "countable-parameters"); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "r'_4,-2lambda,lambda x R";
    e.dim = 5;
    e.basis = names("e", 0, 5);
    e.parameters = {{"lambda", Rational(1), Param::Bound::none, {Rational(0)}}};
    e.metric_label = "{e0,e1,e2,e3+e4,e4} orthonormal";
    e.matrix = [](const ParameterValues& v) {
      const Rational& l = v.at("lambda");
      return Brackets(5).set(1, 1, l).set(1, 2, 1).set(2, 1, -1).set(2, 2, l).set(3, 3, -2 * l).m;
    };
    e.metric = [](const ParameterValues&) { return MetricSpec::frame(tilted_frame(5, 3, 4)); };
    e.expected = [](const ParameterValues&) {
      return facts({4}, std::nullopt, false, "countable-parameters");
    };
    out.push_back(std::move(e));
  }
  out.push_back(fixed("r'_3,0 x R^2", 5, "{e0,e1,e2+e3,e3,e4} orthonormal", Brackets(5).set(1, 2, 1).set(2, 1, -1).m,
                      MetricSpec::frame(tilted_frame(5, 2, 3)), facts({4}, std::nullopt, false, "yes")));
  return out;
}

std::string normalize_name(std::string_view name) {
  std::string out;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}')
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::string term(const Rational& c, const std::string& name, bool first) {
  std::string sign = c < 0 ? "-" : (first ? "" : "+");
  const Rational a = abs(c);
  if (a == 1) return sign + name;
  return sign + to_string(a) + (boost::multiprecision::denominator(a) == 1 ? "" : "*") + name;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& find_entry(std::string_view name) {
  const std::string key = normalize_name(name);
  for (const auto& e : catalog())
    if (normalize_name(e.name) == key) return e;
  throw UnknownEntry("unknown catalog entry '" + std::string(name) + "'");
}

ParameterValues resolve_parameters(const CatalogEntry& entry, const ParameterValues& overrides) {
  ParameterValues values;
  for (const auto& p : entry.parameters) values[p.name] = p.default_value;
  for (const auto& [name, value] : overrides) {
    auto it = std::find_if(entry.parameters.begin(), entry.parameters.end(),
                           [&](const CatalogParameter& p) { return p.name == name; });
    if (it == entry.parameters.end())
      throw InvalidParameter("entry '" + entry.name + "' has no parameter '" + name + "'");
    if (!it->admits(value))
      throw InvalidParameter("parameter " + name + " = " + to_string(value) + " violates " +
                             it->describe_constraint());
    values[name] = value;
  }
  return values;
}

CatalogInstance instantiate(const CatalogEntry& entry, const ParameterValues& overrides) {
  ParameterValues values = resolve_parameters(entry, overrides);
  auto [alg, data] = build(entry.matrix(values), entry.metric(values), entry.basis);
  return {&entry, values, std::move(alg), std::move(data), entry.expected(values)};
}

CatalogInstance instantiate(std::string_view name, const ParameterValues& overrides) {
  return instantiate(find_entry(name), overrides);
}

std::vector<CatalogInstance> default_instances() {
  std::vector<CatalogInstance> out;
  for (const auto& e : catalog()) out.push_back(instantiate(e));
  return out;
}

std::vector<CatalogInstance> instances_of_dim(int dim) {
  std::vector<CatalogInstance> out;
  for (const auto& e : catalog())
    if (e.dim == dim) out.push_back(instantiate(e));
  return out;
}

std::string bracket_summary(const MetricLieAlgebra& alg) {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = i + 1; j < alg.dim(); ++j) {
      const RationalVector& b = alg.bracket(i, j);
      if (is_zero(RationalMatrix(b))) continue;
      os << (any ? ", " : "") << "[" << alg.basis_names()[static_cast<std::size_t>(i)] << ","
         << alg.basis_names()[static_cast<std::size_t>(j)] << "]=";
      bool first = true;
      for (int k = 0; k < alg.dim(); ++k)
        if (!b(k).is_zero()) {
          os << term(b(k), alg.basis_names()[static_cast<std::size_t>(k)], first);
          first = false;
        }
      any = true;
    }
  return any ? os.str() : "abelian";
}

}  // namespace ckyforms

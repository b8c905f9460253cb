#include "ckyforms/io.hpp"

#include <sstream>

namespace ckyforms {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

int integer_field(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string index_key(const MultiIndex& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i]);
  return out;
}

MultiIndex parse_index_key(const std::string& key) {
  MultiIndex idx;
  if (key.empty()) return idx;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      idx.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      fail("bad multi-index '" + key + "'");
    }
  }
  return idx;
}

Json flags_json(const StrictnessReport& r) {
  return {{"nonparallel_cky", r.has_nonparallel_cky},
          {"strict_cky", r.has_strict_cky},
          {"strict_killing", r.has_strict_killing},
          {"strict_star_killing", r.has_strict_star_killing}};
}

Json basis_json(const Subspace& s, int n, int p) {
  Json out = Json::array();
  for (const auto& w : basis_forms(s, n, p)) out.push_back(to_json(w));
  return out;
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail("rational must be a \"p/q\" string or an integer");
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("matrix must be a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  RationalMatrix m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail("matrix rows must be arrays of equal length");
    for (std::size_t k = 0; k < cols; ++k) m(static_cast<Index>(i), static_cast<Index>(k)) = rational_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const PForm& w) {
  Json coeffs = Json::object();
  const auto indices = basis_multi_indices(w.dim, w.degree);
  for (std::size_t k = 0; k < indices.size(); ++k)
    if (!w.coeffs(static_cast<Index>(k)).is_zero())
      coeffs[index_key(indices[k])] = to_json(w.coeffs(static_cast<Index>(k)));
  return {{"degree", w.degree}, {"dim", w.dim}, {"coeffs", coeffs}};
}

PForm form_from_json(const Json& j) {
  const int p = integer_field(field(j, "degree"), "degree");
  const int n = integer_field(field(j, "dim"), "dim");
  if (n < 0 || p < 0 || p > n) fail("form degree out of range");
  PForm w = PForm::zero(n, p);
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_object()) fail("coeffs must be an object");
  for (const auto& [key, value] : coeffs.items()) {
    MultiIndex idx = parse_index_key(key);
    if (static_cast<int>(idx.size()) != p) fail("multi-index '" + key + "' has the wrong length");
    for (int i : idx)
      if (i < 0 || i >= n) fail("multi-index '" + key + "' out of range");
    const int sign = sort_with_sign(idx);
    if (sign == 0) fail("multi-index '" + key + "' repeats an index");
    const Rational c = rational_from_json(value);
    w.coeffs(multi_index_position(n, idx)) += sign > 0 ? c : Rational(-c);
  }
  return w;
}

Json to_json(const MetricLieAlgebra& alg) {
  const int n = alg.dim();
  Json brackets = Json::array();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Json terms = Json::array();
      for (int k = 0; k < n; ++k)
        if (!alg.bracket(i, j)(k).is_zero()) terms.push_back(Json::array({k, to_json(alg.bracket(i, j)(k))}));
      if (!terms.empty()) brackets.push_back(Json::array({i, j, terms}));
    }
  Json metric;
  if (alg.metric().frame())
    metric["orthonormal_frame"] = to_json(*alg.metric().frame());
  else
    metric["gram"] = to_json(alg.metric().gram());
  return {{"dim", n}, {"basis", alg.basis_names()}, {"brackets", brackets}, {"metric", metric}};
}

MetricLieAlgebra algebra_from_json(const Json& j) {
  try {
    const int n = integer_field(field(j, "dim"), "dim");
    if (n < 1) fail("dim must be positive");
    std::vector<std::string> basis;
    if (j.contains("basis")) {
      const Json& b = j.at("basis");
      if (!b.is_array() || static_cast<int>(b.size()) != n) fail("basis must list dim names");
      for (const auto& name : b) {
        if (!name.is_string()) fail("basis names must be strings");
        basis.push_back(name.get<std::string>());
      }
    } else {
      for (int i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i));
    }

    std::vector<BracketTerm> terms;
    const Json& brackets = field(j, "brackets");
    if (!brackets.is_array()) fail("brackets must be an array");
    for (const auto& entry : brackets) {
      if (!entry.is_array() || entry.size() != 3 || !entry[2].is_array())
        fail("each bracket must be [i, j, [[k, c], ...]]");
      const int a = integer_field(entry[0], "bracket index");
      const int b = integer_field(entry[1], "bracket index");
      for (const auto& t : entry[2]) {
        if (!t.is_array() || t.size() != 2) fail("bracket term must be [k, c]");
        const int k = t[0].is_string() ? std::stoi(t[0].get<std::string>()) : integer_field(t[0], "bracket index");
        if (a < 0 || b < 0 || k < 0 || a >= n || b >= n || k >= n) fail("bracket index out of range");
        terms.push_back({a, b, k, rational_from_json(t[1])});
      }
    }

    const Json& metric = field(j, "metric");
    MetricData g;
    if (metric.contains("gram"))
      g = MetricData::from_gram(matrix_from_json(metric.at("gram")));
    else if (metric.contains("orthonormal_frame"))
      g = MetricData::from_orthonormal_frame(matrix_from_json(metric.at("orthonormal_frame")));
    else
      fail("metric needs 'gram' or 'orthonormal_frame'");
    if (g.dim() != n) fail("metric size differs from dim");
    return MetricLieAlgebra(std::move(basis), terms, std::move(g));
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  } catch (const std::invalid_argument& e) {
    fail(std::string("bad index: ") + e.what());
  } catch (const DimensionMismatch& e) {
    fail(e.what());
  }
}

Json to_json(const DegreeReport& report) {
  const SolutionSpaces& s = report.spaces;
  const StrictnessReport& r = report.strictness;
  Json out = {{"p", s.p},
              {"dims",
               {{"parallel", r.dim_parallel},
                {"killing", r.dim_killing},
                {"star_killing", r.dim_star_killing},
                {"cky", r.dim_cky}}},
              {"flags", flags_json(r)},
              {"bases",
               {{"parallel", basis_json(s.parallel, s.n, s.p)},
                {"killing", basis_json(s.killing, s.n, s.p)},
                {"star_killing", basis_json(s.star_killing, s.n, s.p)},
                {"cky", basis_json(s.cky, s.n, s.p)}}}};
  out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return out;
}

Json solve_report(const MetricLieAlgebra& alg, const std::vector<DegreeReport>& degrees) {
  Json list = Json::array();
  for (const auto& d : degrees) list.push_back(to_json(d));
  return {{"algebra", to_json(alg)}, {"degrees", list}};
}

Json to_json(const ExpectedFacts& facts) {
  return {{"strict_cky_degrees", facts.strict_cky_degrees},
          {"nilpotent_step", facts.nilpotent_step ? Json(*facts.nilpotent_step) : Json(nullptr)},
          {"completely_solvable", facts.completely_solvable},
          {"lattice", facts.lattice}};
}

Json to_json(const CatalogInstance& instance) {
  Json out = to_json(instance.algebra);
  out["name"] = instance.entry->name;
  Json params = Json::object();
  for (const auto& [name, value] : instance.parameters) params[name] = to_json(value);
  out["parameters"] = params;
  out["metric_label"] = instance.entry->metric_label;
  out["expected"] = to_json(instance.expected);
  return out;
}

Json to_json(const LatticeScanResult& result, std::size_t max_listed) {
  Json candidates = Json::array();
  for (std::size_t i = 0; i < result.candidates.size() && i < max_listed; ++i) {
    const auto& c = result.candidates[i];
    candidates.push_back({{"t0", c.t0}, {"char_poly", c.char_poly}, {"integer_distance", c.integer_distance}});
  }
  return {{"unimodular", result.unimodular},
          {"nilpotent_rational", result.nilpotent_rational ? Json(*result.nilpotent_rational) : Json("not-applicable")},
          {"verdict", result.verdict},
          {"candidate_count", result.candidates.size()},
          {"candidates", candidates},
          {"options", {{"t_max", result.options.t_max}, {"steps", result.options.steps}, {"tol", result.options.tol}}}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace ckyforms

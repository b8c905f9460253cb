#ifndef CKYFORMS_IO_HPP
#define CKYFORMS_IO_HPP

#include "ckyforms/catalog.hpp"
#include "ckyforms/cky_solver.hpp"
#include "ckyforms/lattice.hpp"

#include <json.hpp>

namespace ckyforms {

using Json = nlohmann::json;

/// Rationals travel as strings "p/q"; plain JSON integers are accepted on input.
Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

/// {"degree": p, "dim": n, "coeffs": {"0,1": "1", ...}} with zero entries omitted.
Json to_json(const PForm& w);
PForm form_from_json(const Json& j);

/// {"dim", "basis", "brackets": [[i, j, [[k, "c"], ...]], ...], "metric": {...}}.
/// The metric is written as the declaring frame when there is one.
Json to_json(const MetricLieAlgebra& alg);
/// Throws ParseError on malformed documents; does not validate Jacobi.
MetricLieAlgebra algebra_from_json(const Json& j);

struct DegreeReport {
  SolutionSpaces spaces;
  StrictnessReport strictness;
};

Json to_json(const DegreeReport& report);
Json solve_report(const MetricLieAlgebra& alg, const std::vector<DegreeReport>& degrees);

/// Algebra JSON plus "name", "parameters" and "expected".
Json to_json(const CatalogInstance& instance);
Json to_json(const ExpectedFacts& facts);

Json to_json(const LatticeScanResult& result, std::size_t max_listed = 100);

/// Parses a whole JSON document, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace ckyforms

#endif  // CKYFORMS_IO_HPP

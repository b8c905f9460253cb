#ifndef CKYFORMS_CATALOG_HPP
#define CKYFORMS_CATALOG_HPP

#include "ckyforms/almost_abelian.hpp"

#include <functional>
#include <map>
#include <string_view>

namespace ckyforms {

class UnknownEntry : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

using ParameterValues = std::map<std::string, Rational>;

struct CatalogParameter {
  enum class Bound { none, positive, nonnegative };
  std::string name;
  Rational default_value;
  Bound bound = Bound::none;
  std::vector<Rational> excluded;  ///< values outside the family

  bool admits(const Rational& value) const;
  std::string describe_constraint() const;  // e.g. "q > 0"
};

/// Classification facts recorded for an entry. The test suite checks them;
/// the solver never reads them.
struct ExpectedFacts {
  std::vector<int> strict_cky_degrees;
  std::optional<int> nilpotent_step;
  bool completely_solvable = false;
  std::string lattice;  ///< "yes", "no", "countable-parameters" or "unknown"
};

struct CatalogEntry {
  std::string name;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<CatalogParameter> parameters;
  std::string metric_label;  ///< short human description of the designated metric
  std::function<RationalMatrix(const ParameterValues&)> matrix;
  std::function<MetricSpec(const ParameterValues&)> metric;
  std::function<ExpectedFacts(const ParameterValues&)> expected;
};

/// The sixteen built-in entries, dimension 3 first.
const std::vector<CatalogEntry>& catalog();

/// Lookup ignoring case and whitespace. Throws UnknownEntry.
const CatalogEntry& find_entry(std::string_view name);

/// Defaults overridden by `overrides`. Throws InvalidParameter for unknown
/// names or values violating a constraint.
ParameterValues resolve_parameters(const CatalogEntry& entry, const ParameterValues& overrides = {});

struct CatalogInstance {
  const CatalogEntry* entry = nullptr;
  ParameterValues parameters;
  MetricLieAlgebra algebra;
  AlmostAbelianData data;
  ExpectedFacts expected;
};

CatalogInstance instantiate(const CatalogEntry& entry, const ParameterValues& overrides = {});
CatalogInstance instantiate(std::string_view name, const ParameterValues& overrides = {});

/// Every entry at its default parameters.
std::vector<CatalogInstance> default_instances();

/// Entries of one dimension at their default parameters.
std::vector<CatalogInstance> instances_of_dim(int dim);

/// "[e0,e1]=e1, [e0,e2]=-e1+2e2" style bracket listing.
std::string bracket_summary(const MetricLieAlgebra& alg);

}  // namespace ckyforms

#endif  // CKYFORMS_CATALOG_HPP

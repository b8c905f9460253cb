#ifndef CKYFORMS_CLI_HPP
#define CKYFORMS_CLI_HPP

#include "ckyforms/catalog.hpp"
#include "ckyforms/cky_solver.hpp"

#include <iosfwd>

namespace ckyforms::cli {

enum ExitCode : int {
  ok = 0,
  mismatch = 1,
  parse_error = 2,
  validation_error = 3,
  unknown_entry = 4,
};

/// One classification row: computed facts for a catalog entry beside the
/// recorded ones.
struct ClassifyRow {
  std::string name;
  int dim = 0;
  std::vector<StrictnessReport> degrees;  ///< p = 0..n
  bool kernels_criterion = false;
  std::vector<int> strict_cky_degrees;
  std::optional<int> nilpotent_step;
  bool completely_solvable = false;
  ExpectedFacts expected;
  std::vector<std::string> mismatches;

  bool matches() const { return mismatches.empty(); }
};

ClassifyRow classify_instance(const CatalogInstance& instance);
std::vector<ClassifyRow> classify_dimension(int dim);

/// "2*e0^e1 - 1/2*e2^e3" using the given basis names.
std::string format_form(const PForm& w, const std::vector<std::string>& names);

/// Runs the command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ckyforms::cli

#endif  // CKYFORMS_CLI_HPP

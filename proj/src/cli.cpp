#include "ckyforms/cli.hpp"

#include "ckyforms/io.hpp"
#include "ckyforms/lattice.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace ckyforms::cli {

ClassifyRow classify_instance(const CatalogInstance& instance) {
  ClassifyRow row;
  row.name = instance.entry->name;
  row.dim = instance.algebra.dim();
  row.expected = instance.expected;
  const int n = row.dim;
  for (int p = 0; p <= n; ++p) {
    row.degrees.push_back(classify(solve(instance.algebra, p)));
    if (row.degrees.back().has_strict_cky) row.strict_cky_degrees.push_back(p);
  }
  row.kernels_criterion = kernels_criterion(instance.data).holds;
  row.nilpotent_step = nilpotency_step(instance.algebra);
  row.completely_solvable = has_real_spectrum(instance.data.M);

  auto check = [&](bool ok, const std::string& what) {
    if (!ok) row.mismatches.push_back(what);
  };
  check(row.strict_cky_degrees == row.expected.strict_cky_degrees, "strict CKY degrees");
  const bool expect_top = std::find(row.expected.strict_cky_degrees.begin(), row.expected.strict_cky_degrees.end(),
                                    n - 1) != row.expected.strict_cky_degrees.end();
  check(row.kernels_criterion == expect_top, "kernels criterion");
  check(row.kernels_criterion == row.degrees[1].has_strict_killing, "kernels criterion vs strict Killing 1-forms");
  check(row.nilpotent_step == row.expected.nilpotent_step, "nilpotency step");
  check(row.completely_solvable == row.expected.completely_solvable, "complete solvability");
  for (int p = 2; p <= n - 2; ++p)
    if (row.degrees[static_cast<std::size_t>(p)].has_nonparallel_cky)
      check(false, "non-parallel CKY in degree " + std::to_string(p));
  return row;
}

std::vector<ClassifyRow> classify_dimension(int dim) {
  std::vector<ClassifyRow> rows;
  for (const auto& inst : instances_of_dim(dim)) rows.push_back(classify_instance(inst));
  return rows;
}

std::string format_form(const PForm& w, const std::vector<std::string>& names) {
  std::ostringstream os;
  const auto indices = basis_multi_indices(w.dim, w.degree);
  bool first = true;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const Rational& c = w.coeffs(static_cast<Index>(k));
    if (c.is_zero()) continue;
    std::string mono;
    for (std::size_t i = 0; i < indices[k].size(); ++i)
      mono += (i ? "^" : "") + names[static_cast<std::size_t>(indices[k][i])];
    if (mono.empty()) mono = "1";
    const Rational a = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (a != 1 || mono == "1") os << to_string(a) << (mono == "1" ? "" : "*");
    if (mono != "1") os << mono;
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {

struct Source {
  MetricLieAlgebra algebra;
  std::optional<CatalogInstance> instance;
};

ParameterValues parse_params(const std::vector<std::string>& raw) {
  ParameterValues out;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("--param expects NAME=value, got '" + item + "'");
    out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return out;
}

Source load_source(const std::string& source_arg, const ParameterValues& params) {
  std::string name = source_arg;
  bool from_catalog = false;
  if (source_arg.rfind("catalog:", 0) == 0) {
    name = source_arg.substr(8);
    from_catalog = true;
  }
  if (!from_catalog && std::filesystem::is_regular_file(source_arg)) {
    std::ifstream in(source_arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const Json doc = parse_json(buffer.str());
    if (doc.is_object() && doc.contains("M")) {
      const Json& metric = doc.contains("metric") ? doc.at("metric") : Json(nullptr);
      const RationalMatrix m = matrix_from_json(doc.at("M"));
      MetricSpec g = MetricSpec::standard(static_cast<int>(m.rows()) + 1);
      if (metric.is_object() && metric.contains("gram")) g = MetricSpec::gram(matrix_from_json(metric.at("gram")));
      if (metric.is_object() && metric.contains("orthonormal_frame"))
        g = MetricSpec::frame(matrix_from_json(metric.at("orthonormal_frame")));
      return {build(m, g).first, std::nullopt};
    }
    MetricLieAlgebra alg = algebra_from_json(doc);
    validate_or_throw(alg);
    return {std::move(alg), std::nullopt};
  }
  CatalogInstance inst = instantiate(find_entry(name), params);
  MetricLieAlgebra alg = inst.algebra;
  return {std::move(alg), std::move(inst)};
}

std::vector<int> parse_degrees(const std::string& text, int n) {
  std::vector<int> out;
  if (text == "all") {
    for (int p = 0; p <= n; ++p) out.push_back(p);
    return out;
  }
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    int p = 0;
    try {
      std::size_t used = 0;
      p = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ParseError("bad degree '" + part + "'");
    }
    if (p < 0 || p > n) throw ParseError("degree " + part + " outside 0.." + std::to_string(n));
    out.push_back(p);
  }
  return out;
}

std::string verdict(const StrictnessReport& r) {
  if (r.has_strict_cky) return "CKY";
  if (r.has_strict_killing) return "KY";
  if (r.dim_cky > 0) return "P";
  return "-";
}

std::string representative(const SolutionSpaces& s, const StrictnessReport& r, const std::vector<std::string>& names) {
  if (r.witness) return format_form(*r.witness, names);
  if (s.p == 0 || s.p == s.n || s.cky.is_zero()) return "-";
  for (const auto& v : s.cky.basis_vectors())
    if (!s.parallel.contains(v)) return format_form(PForm(s.p, s.n, v), names);
  return format_form(PForm(s.p, s.n, s.cky.basis_vector(0)), names);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string markdown_cell(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out.empty() ? "none" : out;
}

std::string step_text(const std::optional<int>& s) { return s ? std::to_string(*s) : "-"; }

int cmd_solve(const std::string& source, const std::string& degrees_text, const ParameterValues& params,
              const std::string& format, std::ostream& out) {
  Source src = load_source(source, params);
  const MetricLieAlgebra& alg = src.algebra;
  std::vector<DegreeReport> reports;
  for (int p : parse_degrees(degrees_text, alg.dim())) {
    SolutionSpaces s = solve(alg, p);
    StrictnessReport r = classify(s);
    reports.push_back({std::move(s), std::move(r)});
  }
  const std::string label = src.instance ? src.instance->entry->name : source;

  if (format == "json") {
    Json doc = solve_report(alg, reports);
    if (src.instance) {
      doc["catalog"] = {{"name", src.instance->entry->name}, {"expected", to_json(src.instance->expected)}};
      Json params_json = Json::object();
      for (const auto& [k, v] : src.instance->parameters) params_json[k] = to_json(v);
      doc["catalog"]["parameters"] = params_json;
    }
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    out << "algebra,p,parallel,killing,star_killing,cky,strict_cky,strict_killing,strict_star_killing,verdict\n";
    for (const auto& d : reports) {
      const auto& r = d.strictness;
      out << csv_field(label) << "," << r.p << "," << r.dim_parallel << "," << r.dim_killing << ","
          << r.dim_star_killing << "," << r.dim_cky << "," << r.has_strict_cky << "," << r.has_strict_killing << ","
          << r.has_strict_star_killing << "," << verdict(r) << "\n";
    }
  } else {
    const std::string metric = src.instance ? src.instance->entry->metric_label : "as given";
    out << "| Lie algebra | bracket | metric | p | ω | verdict |\n|---|---|---|---|---|---|\n";
    for (const auto& d : reports)
      out << "| " << markdown_cell(label) << " | " << markdown_cell(bracket_summary(alg)) << " | "
          << markdown_cell(metric) << " | " << d.spaces.p << " | "
          << markdown_cell(representative(d.spaces, d.strictness, alg.basis_names())) << " | "
          << verdict(d.strictness) << " |\n";
  }
  return ok;
}

int cmd_classify(int dim, const std::string& format, std::ostream& out) {
  if (dim < 3 || dim > 5) throw ParseError("classify: dimension must be 3, 4 or 5");
  const auto rows = classify_dimension(dim);
  bool all_match = true;
  for (const auto& r : rows) all_match = all_match && r.matches();

  auto dims_text = [](const StrictnessReport& r) {
    return std::to_string(r.dim_parallel) + "/" + std::to_string(r.dim_killing) + "/" +
           std::to_string(r.dim_star_killing) + "/" + std::to_string(r.dim_cky);
  };
  if (format == "json") {
    Json list = Json::array();
    for (const auto& r : rows) {
      Json per = Json::array();
      for (const auto& d : r.degrees)
        per.push_back({{"p", d.p},
                       {"parallel", d.dim_parallel},
                       {"killing", d.dim_killing},
                       {"star_killing", d.dim_star_killing},
                       {"cky", d.dim_cky},
                       {"strict_cky", d.has_strict_cky},
                       {"strict_killing", d.has_strict_killing},
                       {"strict_star_killing", d.has_strict_star_killing}});
      list.push_back({{"name", r.name},
                      {"degrees", per},
                      {"kernels_criterion", r.kernels_criterion},
                      {"strict_cky_degrees", r.strict_cky_degrees},
                      {"nilpotent_step", r.nilpotent_step ? Json(*r.nilpotent_step) : Json(nullptr)},
                      {"completely_solvable", r.completely_solvable},
                      {"expected", to_json(r.expected)},
                      {"status", r.matches() ? "MATCH" : "MISMATCH"},
                      {"mismatches", r.mismatches}});
    }
    out << Json{{"dim", dim}, {"rows", list}, {"all_match", all_match}}.dump(2) << "\n";
  } else {
    const bool csv = format == "csv";
    std::vector<std::string> header{"name"};
    for (int p = 0; p <= dim; ++p) header.push_back("p" + std::to_string(p) + " P/K/*K/CK");
    for (const char* h : {"strict CKY", "kernels", "expected strict CKY", "nilpotent step", "completely solvable",
                          "lattice (recorded)", "status"})
      header.emplace_back(h);
    auto emit = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i)
        out << (csv ? (i ? "," : "") : (i ? " | " : "| ")) << (csv ? csv_field(cells[i]) : markdown_cell(cells[i]));
      out << (csv ? "\n" : " |\n");
    };
    emit(header);
    if (!csv) {
      out << "|";
      for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
      out << "\n";
    }
    for (const auto& r : rows) {
      std::vector<std::string> cells{r.name};
      for (const auto& d : r.degrees) cells.push_back(dims_text(d));
      cells.push_back(join_ints(r.strict_cky_degrees));
      cells.push_back(r.kernels_criterion ? "holds" : "fails");
      cells.push_back(join_ints(r.expected.strict_cky_degrees));
      cells.push_back(step_text(r.nilpotent_step));
      cells.push_back(r.completely_solvable ? "yes" : "no");
      cells.push_back(r.expected.lattice);
      std::string status = r.matches() ? "MATCH" : "MISMATCH";
      for (const auto& m : r.mismatches) status += "; " + m;
      cells.push_back(status);
      emit(cells);
    }
  }
  return all_match ? ok : mismatch;
}

int cmd_lattice(const std::string& source, const ParameterValues& params, const ScanOptions& options,
                const std::string& format, std::ostream& out) {
  Source src = load_source(source, params);
  const AlmostAbelianData data = src.instance ? src.instance->data : from_algebra(src.algebra);
  LatticeScanResult result = exp_scan(data.M, options);
  Json doc = to_json(result);
  doc["unimodular"] = is_unimodular(src.algebra);
  const auto malcev = malcev_rational(src.algebra);
  doc["nilpotent_rational"] = malcev ? Json(*malcev) : Json("not-applicable");
  doc["scan_verdict"] = result.verdict;
  if (src.instance) {
    doc["name"] = src.instance->entry->name;
    doc["recorded_status"] = src.instance->expected.lattice;
    if (src.instance->expected.lattice == "yes") doc["verdict"] = "certified-by-paper";
  }
  if (format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    const bool csv = format == "csv";
    std::vector<std::pair<std::string, std::string>> fields{
        {"unimodular", doc["unimodular"].dump()},
        {"nilpotent_rational", doc["nilpotent_rational"].dump()},
        {"verdict", doc["verdict"].get<std::string>()},
        {"scan_verdict", result.verdict},
        {"candidate_count", std::to_string(result.candidates.size())},
        {"first_t0", result.candidates.empty() ? "-" : std::to_string(result.candidates.front().t0)}};
    if (src.instance) fields.insert(fields.begin(), {"name", src.instance->entry->name});
    if (src.instance) fields.push_back({"recorded_status", src.instance->expected.lattice});
    if (!csv) out << "| field | value |\n|---|---|\n";
    for (const auto& [k, v] : fields)
      out << (csv ? k + "," + csv_field(v) : "| " + k + " | " + markdown_cell(v) + " |") << "\n";
  }
  return ok;
}

int cmd_catalog_list(const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json list = Json::array();
    for (const auto& e : catalog()) {
      Json params = Json::array();
      for (const auto& p : e.parameters)
        params.push_back({{"name", p.name}, {"default", to_json(p.default_value)}, {"constraint", p.describe_constraint()}});
      list.push_back({{"name", e.name}, {"dim", e.dim}, {"parameters", params}, {"metric", e.metric_label}});
    }
    out << list.dump(2) << "\n";
    return ok;
  }
  const bool csv = format == "csv";
  out << (csv ? "name,dim,parameters,metric\n" : "| name | dim | parameters | metric |\n|---|---|---|---|\n");
  for (const auto& e : catalog()) {
    std::string params;
    for (const auto& p : e.parameters)
      params += (params.empty() ? "" : "; ") + p.name + "=" + to_string(p.default_value) + " (" +
                p.describe_constraint() + ")";
    if (params.empty()) params = "-";
    if (csv)
      out << csv_field(e.name) << "," << e.dim << "," << csv_field(params) << "," << csv_field(e.metric_label) << "\n";
    else
      out << "| " << markdown_cell(e.name) << " | " << e.dim << " | " << markdown_cell(params) << " | "
          << markdown_cell(e.metric_label) << " |\n";
  }
  return ok;
}

int cmd_catalog_show(const std::string& name, const ParameterValues& params, std::ostream& out) {
  out << to_json(instantiate(find_entry(name), params)).dump(2) << "\n";
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parallel, Killing, *-Killing and conformal Killing-Yano forms on metric Lie algebras", "ckyforms"};
  app.require_subcommand(1);
  std::string format = "json", out_file;
  std::vector<std::string> raw_params;
  app.add_option("--format", format, "json, csv or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  app.add_option("--param", raw_params, "catalog parameter NAME=p/q (repeatable)");
  app.add_option("--out", out_file, "write the report to FILE");
  app.fallthrough();

  std::string source, degrees = "all";
  auto* solve_cmd = app.add_subcommand("solve", "solution spaces of an algebra file or catalog entry");
  solve_cmd->add_option("source", source, "catalog:NAME, NAME or a JSON file")->required();
  solve_cmd->add_option("--degrees", degrees, "'all' or a comma list such as 1,2");

  int dim = 0;
  auto* classify_cmd = app.add_subcommand("classify", "reproduce the classification for one dimension");
  classify_cmd->add_option("dim", dim, "3, 4 or 5")->required();

  ScanOptions scan;
  std::string lattice_source;
  auto* lattice_cmd = app.add_subcommand("lattice", "lattice screening for an almost abelian algebra");
  lattice_cmd->add_option("source", lattice_source, "catalog:NAME, NAME or a JSON file")->required();
  lattice_cmd->add_option("--tmax", scan.t_max, "largest t0 scanned")->check(CLI::PositiveNumber);
  lattice_cmd->add_option("--steps", scan.steps, "number of grid points")->check(CLI::PositiveNumber);
  lattice_cmd->add_option("--tol", scan.tol, "integrality tolerance")
      ->check(CLI::PositiveNumber & CLI::Range(0.0, 0.5 - 1e-12));

  auto* catalog_cmd = app.add_subcommand("catalog", "list or show built-in entries");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "names, dimensions and parameters");
  std::string show_name;
  auto* show_cmd = catalog_cmd->add_subcommand("show", "full algebra JSON of one entry");
  show_cmd->add_option("name", show_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  }

  std::ofstream file;
  if (!out_file.empty()) {
    file.open(out_file);
    if (!file) {
      err << "error: cannot open " << out_file << "\n";
      return parse_error;
    }
  }
  std::ostream& sink = out_file.empty() ? out : file;

  try {
    const ParameterValues params = parse_params(raw_params);
    if (*solve_cmd) return cmd_solve(source, degrees, params, format, sink);
    if (*classify_cmd) return cmd_classify(dim, format, sink);
    if (*lattice_cmd) return cmd_lattice(lattice_source, params, scan, format, sink);
    if (*show_cmd) return cmd_catalog_show(show_name, params, sink);
    return cmd_catalog_list(format, sink);
  } catch (const UnknownEntry& e) {
    err << "error: " << e.what() << "\n";
    return unknown_entry;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return parse_error;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return validation_error;
  } catch (const NotPositiveDefinite& e) {
    err << "validation error: " << e.what() << "\n";
    return validation_error;
  } catch (const MetricNotAdapted& e) {
    err << "validation error: " << e.what() << "\n";
    return validation_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return mismatch;
  }
}

}  // namespace ckyforms::cli

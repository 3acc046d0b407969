#include "eigenbound/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "eigenbound/geometry.hpp"
#include "eigenbound/operator_bounds.hpp"
#include "eigenbound/shape_io.hpp"
#include "eigenbound/verification.hpp"

namespace eigenbound::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "eigenbound 1.0.0";

// Usage errors detected after CLI11 has parsed the arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double rounded(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

ordered_json number_json(double value)
{
  if (!std::isfinite(value)) return nullptr;
  return rounded(value);
}

using Cell = std::variant<double, int, bool>;

struct Column {
  std::string name;
  bool in_csv = true;
};

// One result table, rendered as an aligned text table, CSV or JSON rows.
struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  std::string text(const Cell& c) const
  {
    if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? format_number(*d) : "nan";
    if (const auto* i = std::get_if<int>(&c)) return std::to_string(*i);
    return std::get<bool>(c) ? "true" : "false";
  }

  void write_csv(std::ostream& out) const
  {
    bool first = true;
    for (const auto& col : columns) {
      if (!col.in_csv) continue;
      out << (first ? "" : ",") << col.name;
      first = false;
    }
    out << '\n';
    for (const auto& row : rows) {
      first = true;
      for (std::size_t k = 0; k < columns.size(); ++k) {
        if (!columns[k].in_csv) continue;
        out << (first ? "" : ",") << text(row[k]);
        first = false;
      }
      out << '\n';
    }
  }

  void write_table(std::ostream& out) const
  {
    std::vector<std::size_t> width(columns.size());
    for (std::size_t k = 0; k < columns.size(); ++k) {
      width[k] = columns[k].name.size();
      for (const auto& row : rows) width[k] = std::max(width[k], text(row[k]).size());
    }
    for (std::size_t k = 0; k < columns.size(); ++k)
      out << (k ? "  " : "") << std::setw(int(width[k])) << columns[k].name;
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t k = 0; k < columns.size(); ++k)
        out << (k ? "  " : "") << std::setw(int(width[k])) << text(row[k]);
      out << '\n';
    }
  }

  ordered_json json_rows() const
  {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json obj = ordered_json::object();
      for (std::size_t k = 0; k < columns.size(); ++k) {
        const Cell& c = row[k];
        if (const auto* d = std::get_if<double>(&c)) obj[columns[k].name] = number_json(*d);
        else if (const auto* i = std::get_if<int>(&c)) obj[columns[k].name] = *i;
        else obj[columns[k].name] = std::get<bool>(c);
      }
      arr.push_back(std::move(obj));
    }
    return arr;
  }
};

enum class Format { table, json, csv };

Format parse_format(const std::string& text)
{
  if (text == "table") return Format::table;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw UsageError("unknown format '" + text + "' (expected table, json or csv)");
}

int parse_int(const std::string& text, const std::string& what)
{
  std::size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(text, &pos);
  } catch (const std::exception&) {
    throw UsageError(what + " must be an integer, got '" + text + "'");
  }
  if (pos != text.size()) throw UsageError(what + " must be an integer, got '" + text + "'");
  return static_cast<int>(value);
}

// "a..b" (inclusive) or a single integer.
std::pair<int, int> parse_m_range(const std::string& text)
{
  const auto dots = text.find("..");
  int lo, hi;
  if (dots == std::string::npos) {
    lo = hi = parse_int(text, "--m");
  } else {
    lo = parse_int(text.substr(0, dots), "--m range start");
    hi = parse_int(text.substr(dots + 2), "--m range end");
  }
  if (lo < 1 || hi < lo) throw UsageError("--m range must satisfy 1 <= a <= b, got '" + text + "'");
  return {lo, hi};
}

void emit(Format format, const Table& table, const ordered_json& inputs, const ordered_json& summary,
          std::ostream& out)
{
  switch (format) {
    case Format::csv: table.write_csv(out); break;
    case Format::table: {
      table.write_table(out);
      for (const auto& [key, value] : summary.items()) out << "# " << key << ": " << value.dump() << '\n';
      break;
    }
    case Format::json: {
      ordered_json doc;
      doc["inputs"] = inputs;
      doc["rows"] = table.json_rows();
      doc["summary"] = summary;
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

ordered_json geometry_json(const GeometrySummary& g)
{
  return {{"n", g.n}, {"volume", number_json(g.volume)}, {"inertia", number_json(g.inertia)}};
}

void require_supported(OperatorKind kind, int n)
{
  if (kind == OperatorKind::dirichlet_bilaplacian && n != 2)
    throw UnsupportedError("the bi-Laplacian bounds are available in dimension 2 only (shape has n = " +
                           std::to_string(n) + ")");
}

// --- bound ------------------------------------------------------------------

struct BoundArgs {
  std::string shape;
  std::string op = "laplace";
  std::string m = "1";
  std::string format = "table";
};

int cmd_bound(const BoundArgs& args, bool verbose, std::ostream& out)
{
  const Format format = parse_format(args.format);
  const OperatorKind kind = parse_operator(args.op);
  const auto [lo, hi] = parse_m_range(args.m);
  const DomainShape shape = read_shape_file(args.shape);
  const GeometrySummary geom = summarize(shape);
  require_supported(kind, geom.n);
  const auto ml = ml_constants(kind, geom);

  Table table;
  table.columns = {{"m"},        {"liyau"},   {"melas"},   {"exact"},
                   {"asymptotic"}, {"theorem"}, {"epsilon"}, {"degenerate", false}};
  if (verbose) table.columns.insert(table.columns.end(), {{"m_star"}, {"theorem_lemma"}});

  int degenerate_rows = 0;
  for (int m = lo; m <= hi; ++m) {
    const BoundReport r = bound_exact(kind, geom, m);
    degenerate_rows += r.degenerate;
    std::vector<Cell> row{m, r.liyau, r.melas, r.exact, r.asymptotic, r.theorem_form, r.epsilon, r.degenerate};
    if (verbose) {
      const double lemma = theorem_supported(kind, geom.n) ? bound_theorem_234(kind, geom, m, true)
                                                           : std::nan("");
      row.insert(row.end(), {r.m_star, lemma});
    }
    table.rows.push_back(std::move(row));
  }

  ordered_json inputs;
  inputs["shape"] = ordered_json::parse(shape_to_json(shape));
  inputs["operator"] = std::string(to_string(kind));
  inputs["m"] = {lo, hi};
  inputs["geometry"] = geometry_json(geom);
  inputs["M"] = number_json(ml.M);
  inputs["L"] = number_json(ml.L);

  ordered_json summary;
  summary["rows"] = hi - lo + 1;
  summary["degenerate_rows"] = degenerate_rows;
  summary["m_star_at_first_m"] = number_json(bound_exact(kind, geom, lo).m_star);
  if (kind != OperatorKind::dirichlet_bilaplacian)
    summary["m_star_floor"] = number_json(m_star_floor(kind, geom.n));

  emit(format, table, inputs, summary, out);
  return ExitCode::ok;
}

// --- audit ------------------------------------------------------------------

struct AuditArgs {
  std::string shape;
  std::string op = "laplace";
  int m_max = 100;
  std::string format = "table";
  std::string spectrum;
  unsigned workers = 1;
};

int cmd_audit(const AuditArgs& args, std::ostream& out)
{
  const Format format = parse_format(args.format);
  const OperatorKind kind = parse_operator(args.op);
  if (args.m_max < 1) throw UsageError("--m-max must be >= 1");
  const DomainShape shape = read_shape_file(args.shape);
  const GeometrySummary geom = summarize(shape);
  require_supported(kind, geom.n);

  AuditOptions options;
  options.workers = args.workers;
  if (!args.spectrum.empty()) {
    std::ifstream in(args.spectrum);
    if (!in) throw UsageError("cannot open spectrum file '" + args.spectrum + "'");
    try {
      options.spectrum = read_spectrum_csv(in, kind);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("spectrum file: ") + e.what());
    }
  }
  const AuditReport report = audit(kind, shape, args.m_max, options);

  Table table;
  table.columns = {{"m"}, {"spectrum_sum"}, {"liyau"}, {"exact"}, {"theorem"}, {"slack"},
                   {"theorem_below_exact", false}};
  for (const auto& r : report.rows)
    table.rows.push_back({r.m, r.spectrum_sum, r.liyau, r.exact, r.theorem_form, r.slack, r.theorem_below_exact});

  ordered_json inputs;
  inputs["shape"] = ordered_json::parse(shape_to_json(shape));
  inputs["operator"] = std::string(to_string(kind));
  inputs["m_max"] = args.m_max;
  inputs["spectrum"] = report.has_spectrum ? (args.spectrum.empty() ? "exact_box" : "external") : "none";
  inputs["geometry"] = geometry_json(geom);

  ordered_json summary;
  summary["ok"] = report.ok();
  summary["min_slack"] = number_json(report.min_slack);
  summary["argmin_slack"] = report.has_spectrum ? ordered_json(report.argmin_slack) : ordered_json(nullptr);
  int theorem_below = 0;
  for (const auto& r : report.rows) theorem_below += r.theorem_below_exact;
  summary["theorem_below_exact_rows"] = theorem_below;
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations) violations.push_back({{"m", v.m}, {"what", v.what}});
  summary["violations"] = violations;

  emit(format, table, inputs, summary, out);
  if (format == Format::csv)
    for (const auto& v : report.violations) out << "# violation at m=" << v.m << ": " << v.what << '\n';
  return report.ok() ? ExitCode::ok : ExitCode::violation;
}

// --- oracle -----------------------------------------------------------------

struct OracleArgs {
  int n = 2;
  double M = 1;
  double L = 1;
  double m = 1;
  std::vector<int> grids{400};
  double r_max = 0;
  std::string format = "table";
};

int cmd_oracle(const OracleArgs& args, std::ostream& out)
{
  const Format format = parse_format(args.format);
  const MinimizationInput in{args.n, args.M, args.L, args.m};
  try {
    validate(in);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (int g : args.grids)
    if (g < 50) throw UsageError("--grid values must be >= 50");

  const double exact = sigma_exact(in);
  const auto profile = minimizer_profile(in);
  const double r_max = args.r_max > 0 ? args.r_max : default_lp_radius(in);
  auto residual = [&](double gamma) {
    const double closed = profile_moment(profile, gamma);
    return std::abs(quadrature_moment(profile, gamma) - closed) / closed;
  };
  const double mass_residual = residual(args.n - 1);
  const double moment_residual = residual(args.n + 1);

  Table table;
  table.columns = {{"grid"}, {"sigma_exact"}, {"lp"}, {"relative_gap"}};
  for (int g : args.grids) {
    // an infeasible LP throws domain_error, mapped to exit 5 below
    const LpOracleResult lp = lp_minimize(args.n, args.M, args.L, args.m, g, r_max);
    table.rows.push_back({g, exact, lp.objective, std::abs(lp.objective - exact) / exact});
  }

  ordered_json inputs;
  inputs["n"] = args.n;
  inputs["M"] = number_json(args.M);
  inputs["L"] = number_json(args.L);
  inputs["m"] = number_json(args.m);
  inputs["grid"] = args.grids;
  inputs["r_max"] = number_json(r_max);

  ordered_json summary;
  summary["m_star"] = number_json(scaled_mass(in));
  summary["degenerate"] = profile.kind == ProfileKind::triangular;
  summary["profile"] = profile.kind == ProfileKind::triangular ? "triangular" : "plateau_ramp";
  if (profile.kind == ProfileKind::triangular) summary["peak"] = number_json(profile.h);
  else summary["t"] = number_json(profile.t);
  summary["sigma_exact"] = number_json(exact);
  summary["quadrature_mass_residual"] = number_json(mass_residual);
  summary["quadrature_moment_residual"] = number_json(moment_residual);

  emit(format, table, inputs, summary, out);
  return ExitCode::ok;
}

}  // namespace

std::string format_number(double value)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Lower bounds for sums of Dirichlet Laplacian, Stokes and bi-Laplacian eigenvalues"};
  app.name(args.empty() ? "eigenbound" : args.front());
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Print the version banner and extra columns");

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate the lower bounds for a shape");
  bound_cmd->add_option("--shape", bound.shape, "Shape document (JSON)")->required();
  bound_cmd->add_option("--operator", bound.op, "laplace | stokes | bilaplace");
  bound_cmd->add_option("--m", bound.m, "Number of eigenvalues, N or A..B");
  bound_cmd->add_option("--format", bound.format, "table | json | csv");

  AuditArgs audit_args;
  auto* audit_cmd = app.add_subcommand("audit", "Check bound orderings and spectral dominance");
  audit_cmd->add_option("--shape", audit_args.shape, "Shape document (JSON)")->required();
  audit_cmd->add_option("--operator", audit_args.op, "laplace | stokes | bilaplace");
  audit_cmd->add_option("--m-max", audit_args.m_max, "Largest m to audit");
  audit_cmd->add_option("--format", audit_args.format, "table | json | csv");
  audit_cmd->add_option("--spectrum", audit_args.spectrum, "External eigenvalue list (CSV)");
  audit_cmd->add_option("--workers", audit_args.workers, "Threads for lattice enumeration");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare the closed form with the LP discretization");
  oracle_cmd->add_option("--n", oracle.n, "Dimension")->required();
  oracle_cmd->add_option("--M", oracle.M, "Cap")->required();
  oracle_cmd->add_option("--L", oracle.L, "Slope bound")->required();
  oracle_cmd->add_option("--m", oracle.m, "Mass (real)")->required();
  oracle_cmd->add_option("--grid", oracle.grids, "Grid sizes, comma separated")->delimiter(',');
  oracle_cmd->add_option("--r-max", oracle.r_max, "Grid extent (default: 1.25 x support)");
  oracle_cmd->add_option("--format", oracle.format, "table | json | csv");

  for (auto* sub : {bound_cmd, audit_cmd, oracle_cmd}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return ExitCode::ok;
    }
    err << "error: " << e.what() << '\n';
    return ExitCode::parse_error;
  }

  if (verbose) err << kVersion << '\n';
  try {
    if (*bound_cmd) return cmd_bound(bound, verbose, out);
    if (*audit_cmd) return cmd_audit(audit_args, out);
    if (*oracle_cmd) return cmd_oracle(oracle, out);
  } catch (const ShapeParseError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::parse_error;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::parse_error;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::unsupported;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return *oracle_cmd ? ExitCode::infeasible : ExitCode::unsupported;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::parse_error;
  }
  return ExitCode::parse_error;
}

}  // namespace eigenbound::cli

#include "confrac/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "confrac/autodiff.hpp"
#include "confrac/conformable.hpp"
#include "confrac/errors.hpp"
#include "confrac/expr.hpp"
#include "confrac/oracle.hpp"

namespace confrac::cli {

using Json = nlohmann::ordered_json;

std::string_view name_of(Command c) noexcept {
  switch (c) {
    case Command::jacobian: return "jacobian";
    case Command::partial: return "partial";
    case Command::tangent: return "tangent";
    case Command::chain_check: return "chain-check";
    case Command::verify: return "verify";
  }
  return "?";
}

double parse_decimal(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&] {
    const std::size_t from = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    return i > from;
  };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  bool ok = digits();
  if (ok && i < text.size() && text[i] == '.') {
    ++i;
    ok = digits();
  }
  if (ok && i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    ok = digits();
  }
  if (!ok || i != text.size()) {
    throw ArgumentError("'" + std::string(text) + "' is not a decimal literal");
  }
  const std::string s(text.front() == '+' ? text.substr(1) : text);
  return std::strtod(s.c_str(), nullptr);
}

namespace {

std::vector<std::string> split(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string item(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    out.push_back(first == std::string::npos ? "" : item.substr(first, last - first + 1));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Json to_json(const JacobianMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const double x : m.row(i)) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Relative deviation from the reference, or absolute when the reference is 0.
double entry_delta(double reference, double other) {
  const double d = std::abs(reference - other);
  return reference == 0.0 ? d : d / std::abs(reference);
}

struct Report {
  Json result;
  std::optional<Json> oracle;
  std::optional<double> max_delta;
  std::string status = "ok";
  int exit_code = kSuccess;
};

Report plain(Json result) {
  Report r;
  r.result = std::move(result);
  return r;
}

FDConfig fd_config(const JobSpec& spec) {
  FDConfig cfg;
  if (spec.h0) cfg.h0 = *spec.h0;
  if (spec.levels) cfg.levels = *spec.levels;
  cfg.validate();
  return cfg;
}

std::size_t resolve_index(const JobSpec& spec, const FunctionDef& f) {
  if (!spec.index) throw ArgumentError("partial requires --index");
  const std::string& text = *spec.index;
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
    if (ec != std::errc() || k < 1 || k > f.n()) {
      throw IndexError("--index " + text + " is outside [1, " + std::to_string(f.n()) + "]");
    }
    return k - 1;
  }
  const std::size_t j = f.index_of(text);
  if (j == f.n()) throw IndexError("--index '" + text + "' names no declared variable");
  return j;
}

Report jacobian(const FunctionDef& f, const PositivePoint& a, Order alpha) {
  return plain(to_json(conformable_jacobian(f, a, alpha)));
}

Report partial(const JobSpec& spec, const FunctionDef& f, const PositivePoint& a, Order alpha) {
  const std::size_t j = resolve_index(spec, f);
  return plain(Json(conformable_partial(f, a, j, alpha)));
}

Report tangent(const FunctionDef& f, const PositivePoint& a, Order alpha) {
  if (f.n() != 1 || f.m() != 1) {
    throw DimensionError("tangent needs one expression in one variable");
  }
  return plain(Json(t_alpha(f, a[0], alpha)));
}

Report verify(const JobSpec& spec, const FunctionDef& f, const PositivePoint& a, Order alpha) {
  const double tol = spec.tol.value_or(1e-5);
  const JacobianMatrix analytic = conformable_jacobian(f, a, alpha);
  const FdJacobian oracle = fd_conformable_jacobian(f, a, alpha, fd_config(spec));

  Json deltas = Json::array();
  double max_delta = 0.0;
  bool pass = true;
  for (std::size_t i = 0; i < analytic.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < analytic.cols(); ++j) {
      const double d = entry_delta(analytic(i, j), oracle.jacobian(i, j));
      row.push_back(d);
      max_delta = std::max(max_delta, d);
      pass = pass && (analytic(i, j) == 0.0 ? d <= spec.zero_tol : d <= tol);
    }
    deltas.push_back(std::move(row));
  }
  Report r;
  r.result = Json{{"analytic", to_json(analytic)}, {"deltas", deltas}, {"tolerance", tol}};
  r.oracle = Json{{"jacobian", to_json(oracle.jacobian)}, {"error_estimate", oracle.max_error}};
  r.max_delta = max_delta;
  r.status = pass ? "PASS" : "FAIL";
  r.exit_code = pass ? kSuccess : kFail;
  return r;
}

Report chain_check(const JobSpec& spec, const FunctionDef& f, const PositivePoint& a,
                   Order alpha) {
  const FunctionDef g = spec.outer_vars ? parse(spec.expr, *spec.outer_vars)
                                        : parse_inferring_variables(spec.expr);
  const double tol = spec.tol.value_or(1e-8);
  const JacobianMatrix rhs = chain_rhs(g, f, a, alpha);
  const JacobianMatrix direct = conformable_jacobian(substitute(g, f), a, alpha);

  double max_abs = 0.0;
  double scale = 1.0;
  for (std::size_t k = 0; k < direct.data().size(); ++k) {
    max_abs = std::max(max_abs, std::abs(direct.data()[k] - rhs.data()[k]));
    scale = std::max(scale, std::abs(direct.data()[k]));
  }
  Report r;
  r.result = Json{{"outer_vars", g.variables()},
                  {"direct", to_json(direct)},
                  {"chain_rhs", to_json(rhs)},
                  {"tolerance", tol}};
  r.max_delta = max_abs;
  const bool pass = max_abs <= tol * scale;
  r.status = pass ? "PASS" : "FAIL";
  r.exit_code = pass ? kSuccess : kFail;
  return r;
}

void write_matrix(std::ostream& out, const Json& m, const std::string& indent) {
  for (const auto& row : m) {
    out << indent << "[";
    for (const auto& x : row) out << ' ' << format_number(x.get<double>());
    out << " ]\n";
  }
}

void write_value(std::ostream& out, const std::string& key, const Json& v,
                 const std::string& indent) {
  if (v.is_number()) {
    out << indent << key << ": " << format_number(v.get<double>()) << '\n';
  } else if (v.is_array() && !v.empty() && v.front().is_array()) {
    out << indent << key << ":\n";
    write_matrix(out, v, indent + "  ");
  } else if (v.is_object()) {
    out << indent << key << ":\n";
    for (const auto& [k, x] : v.items()) write_value(out, k, x, indent + "  ");
  } else if (v.is_array()) {
    out << indent << key << ":";
    for (const auto& x : v) out << ' ' << (x.is_string() ? x.get<std::string>() : format_number(x.get<double>()));
    out << '\n';
  } else {
    out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

std::string echo_inputs(const JobSpec& spec) {
  std::ostringstream os;
  os << "expr=\"" << spec.expr << "\"";
  if (spec.inner) os << " inner=\"" << *spec.inner << "\"";
  os << " vars=";
  for (std::size_t i = 0; i < spec.vars.size(); ++i) os << (i ? "," : "") << spec.vars[i];
  os << " point=";
  for (std::size_t i = 0; i < spec.point.size(); ++i) {
    os << (i ? "," : "") << format_number(spec.point[i]);
  }
  os << " alpha=" << format_number(spec.alpha);
  return os.str();
}

}  // namespace

int run(const JobSpec& spec, OutputMode mode, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    const Order alpha(spec.alpha);
    const FunctionDef f = parse(spec.command == Command::chain_check
                                    ? spec.inner.value_or(std::string())
                                    : spec.expr,
                                spec.vars);
    if (spec.point.size() != f.n()) {
      throw DimensionError("--point has " + std::to_string(spec.point.size()) +
                           " coordinates but --vars declares " + std::to_string(f.n()));
    }
    const PositivePoint a(spec.point);
    switch (spec.command) {
      case Command::jacobian: report = jacobian(f, a, alpha); break;
      case Command::partial: report = partial(spec, f, a, alpha); break;
      case Command::tangent: report = tangent(f, a, alpha); break;
      case Command::chain_check: report = chain_check(spec, f, a, alpha); break;
      case Command::verify: report = verify(spec, f, a, alpha); break;
    }
  } catch (const Error& e) {
    err << "confrac " << name_of(spec.command) << ": error: " << e.what() << " ["
        << echo_inputs(spec) << "]\n";
    return kUsageError;
  }

  Json doc;
  doc["command"] = name_of(spec.command);
  doc["alpha"] = spec.alpha;
  doc["vars"] = spec.vars;
  doc["point"] = spec.point;
  doc["result"] = report.result;
  if (report.oracle) doc["oracle"] = *report.oracle;
  if (report.max_delta) doc["max_delta"] = *report.max_delta;
  doc["status"] = report.status;

  if (mode == OutputMode::json) {
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& [k, v] : doc.items()) write_value(out, k, v, "");
  }
  return report.exit_code;
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conformable fractional derivatives, partials and Jacobians", "confrac"};
  app.require_subcommand(1);

  JobSpec spec;
  std::string vars, point, alpha, format = "json", outer_vars, tol, h0;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--expr", spec.expr, "Comma-separated component expressions")->required();
    sub->add_option("--vars", vars, "Comma-separated variable names")->required();
    sub->add_option("--point", point, "Comma-separated evaluation point (decimal literals)")
        ->required();
    sub->add_option("--alpha", alpha, "Fractional order in (0, 1]")->required();
    sub->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
  };

  auto* jac = app.add_subcommand("jacobian", "Conformable Jacobian matrix");
  common(jac);
  auto* part = app.add_subcommand("partial", "One conformable partial derivative");
  common(part);
  part->add_option("--index", spec.index, "Variable: 1-based position or name")->required();
  auto* tan = app.add_subcommand("tangent", "One-variable conformable derivative");
  common(tan);
  auto* chain = app.add_subcommand("chain-check", "Compare both sides of the chain rule");
  common(chain);
  chain->add_option("--inner", spec.inner, "Inner function f over --vars")->required();
  chain->add_option("--outer-vars", outer_vars,
                    "Variables of the outer function (--expr); default: order of appearance");
  chain->add_option("--tol", tol, "Relative tolerance (default 1e-8)");
  auto* ver = app.add_subcommand("verify", "Check the analytic Jacobian against the oracle");
  common(ver);
  ver->add_option("--tol", tol, "Relative tolerance (default 1e-5)");
  ver->add_option("--h0", h0, "Initial finite-difference step");
  ver->add_option("--levels", spec.levels, "Richardson levels");

  std::vector<std::string> argv(args.begin(), args.end());
  std::reverse(argv.begin(), argv.end());
  if (!argv.empty()) argv.pop_back();  // program name
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "confrac: usage error: " << e.what() << '\n';
    return kUsageError;
  }

  if (jac->parsed()) spec.command = Command::jacobian;
  else if (part->parsed()) spec.command = Command::partial;
  else if (tan->parsed()) spec.command = Command::tangent;
  else if (chain->parsed()) spec.command = Command::chain_check;
  else spec.command = Command::verify;

  try {
    spec.vars = split(vars);
    for (const auto& p : split(point)) spec.point.push_back(parse_decimal(p));
    spec.alpha = parse_decimal(alpha);
    if (!outer_vars.empty()) spec.outer_vars = split(outer_vars);
    if (!tol.empty()) spec.tol = parse_decimal(tol);
    if (!h0.empty()) spec.h0 = parse_decimal(h0);
  } catch (const Error& e) {
    err << "confrac " << name_of(spec.command) << ": usage error: " << e.what() << '\n';
    return kUsageError;
  }
  return run(spec, format == "table" ? OutputMode::table : OutputMode::json, out, err);
}

}  // namespace confrac::cli

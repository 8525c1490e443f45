#include "apparent/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "apparent/error.hpp"
#include "apparent/json_io.hpp"

namespace apparent::cli {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& source, std::istream& in) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) return source;
  std::ostringstream buf;
  if (source == "-") {
    buf << in.rdbuf();
    if (in.bad()) throw UsageError("failed to read standard input");
    return buf.str();
  }
  std::ifstream f(source);
  if (!f) throw UsageError("cannot open input file '" + source + "'");
  buf << f.rdbuf();
  return buf.str();
}

Json parse_document(const std::string& source, std::istream& in) {
  const std::string text = read_input(source, in);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

Json header(const std::string& command) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["schema"] = io::kSchema;
  j["command"] = command;
  return j;
}

std::string join(const std::vector<BigRat>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "}";
}

void print_ode(std::ostream& out, const LinearODE& ode) {
  out << "order " << ode.order() << " equation, coefficients ascending in z:\n";
  for (int k = 0; k <= ode.order(); ++k) out << "  P_" << k << " = " << ode.coeff(k).to_string() << "\n";
}

Json analysis(const LinearODE& ode, std::vector<std::string>& warnings) {
  Json j;
  j["ode"] = io::to_json(ode);
  j["follows_degree_convention"] = ode.follows_degree_convention();
  if (!ode.follows_degree_convention())
    warnings.push_back("deg P_0 is not maximal or does not exceed the order");
  SingularPointSet set = singular_points(ode);
  Json pts = Json::array();
  Json apparent = Json::array();
  for (const auto& sp : set.points) {
    pts.push_back(io::to_json(sp));
    if (sp.kind == PointKind::ApparentSingular) apparent.push_back(io::to_json(sp.location));
  }
  j["singular_points"] = std::move(pts);
  if (set.has_unresolved()) {
    j["unresolved_factor"] = io::to_json(set.unresolved_factor);
    warnings.push_back("P_0 has irrational roots that were not classified");
  }
  j["apparent_points"] = std::move(apparent);
  FuchsReport fr = fuchs_check(ode);
  j["fuchs"] = io::to_json(fr);
  j["riemann_symbol"] = fr.fuchsian ? io::to_json(riemann_symbol(ode)) : Json(nullptr);
  return j;
}

void print_analysis(std::ostream& out, const LinearODE& ode) {
  print_ode(out, ode);
  SingularPointSet set = singular_points(ode);
  out << "singular points:\n";
  for (const auto& sp : set.points)
    out << "  " << std::left << std::setw(8) << sp.location.to_string() << std::setw(18) << kind_name(sp.kind)
        << join(sp.exponents) << (sp.exponent_residual.degree() > 0 ? " + roots of " + sp.exponent_residual.to_string() : "")
        << "\n";
  FuchsReport fr = fuchs_check(ode);
  if (fr.fuchsian) {
    out << "Fuchs relation: s = " << fr.singular_count << ", exponent sum " << to_string(fr.exponent_sum)
        << ", expected " << to_string(fr.expected_sum) << (fr.identity_holds ? " (holds)" : " (FAILS)") << "\n";
    out << "Riemann symbol:\n" << riemann_symbol(ode).to_text();
  } else {
    out << "not Fuchsian: irregular at";
    for (const auto& l : fr.irregular_points) out << " " << l.to_string();
    out << "\n";
  }
}

struct Options {
  std::string format = "json";
  std::string input;
  int times = 1;
  std::vector<std::string> points;
  int max_slack = 1;
  // polymer
  std::string b, W, tau = "1", sweep, csv;
  std::optional<double> nu_min, nu_max;
  int count = 1;
  int precision_bits = 256;
  int series_order = 200;
  int grid = 400;
  bool strict = false;
  bool samples = false;
};

std::vector<UndeformTarget> parse_targets(const std::vector<std::string>& points) {
  std::vector<UndeformTarget> out;
  for (const auto& p : points) {
    const auto colon = p.find(':');
    UndeformTarget t{parse_rational(p.substr(0, colon)), std::nullopt};
    if (colon != std::string::npos) {
      try {
        t.multiplicity = std::stoi(p.substr(colon + 1));
      } catch (const std::exception&) {
        throw UsageError("bad multiplicity in --point '" + p + "'");
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

int cmd_analyze(const Options& o, std::istream& in, std::ostream& out) {
  LinearODE ode = io::ode_from_json(parse_document(o.input, in));
  if (o.format == "text") {
    print_analysis(out, ode);
    return kOk;
  }
  Json j = header("analyze");
  std::vector<std::string> warnings;
  j.update(analysis(ode, warnings));
  j["warnings"] = warnings;
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_deform(const Options& o, std::istream& in, std::ostream& out) {
  LinearODE ode = io::ode_from_json(parse_document(o.input, in));
  auto chain = deform_iter(ode, o.times);
  if (o.format == "text") {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      out << "stage " << i + 1 << ": new apparent points";
      for (const auto& p : chain[i].new_apparent) out << " " << to_string(p.location) << " (multiplicity " << p.multiplicity << ")";
      out << "\n";
    }
    print_ode(out, chain.back().ode);
    return kOk;
  }
  Json j = header("deform");
  j["input"] = io::to_json(ode);
  j["ode"] = io::to_json(chain.back().ode);
  Json stages = Json::array();
  for (const auto& d : chain) stages.push_back(io::to_json(d));
  j["stages"] = std::move(stages);
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_undeform(const Options& o, std::istream& in, std::ostream& out) {
  LinearODE ode = io::ode_from_json(parse_document(o.input, in));
  std::optional<std::vector<UndeformTarget>> targets;
  if (!o.points.empty()) targets = parse_targets(o.points);
  UndeformResult r = undeform(ode, targets, {o.max_slack});
  if (o.format == "text") {
    out << "removed " << join(r.removed_points) << ", free parameters " << r.free_parameters << "\n";
    print_ode(out, r.ode);
    return kOk;
  }
  Json j = header("undeform");
  j["input"] = io::to_json(ode);
  j.update(io::to_json(r));
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_heun(const Options& o, std::istream& in, std::ostream& out) {
  Json doc = parse_document(o.input, in);
  LinearODE ode = io::heun_from_json(doc);
  if (o.format == "text") {
    print_analysis(out, ode);
    return kOk;
  }
  Json j = header("heun");
  j["family"] = doc.at("family");
  std::vector<std::string> warnings;
  j.update(analysis(ode, warnings));
  j["warnings"] = warnings;
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_riemann(const Options& o, std::istream& in, std::ostream& out) {
  LinearODE ode = io::ode_from_json(parse_document(o.input, in));
  RiemannSymbol rs = riemann_symbol(ode);
  if (o.format == "text") {
    out << rs.to_text();
    return kOk;
  }
  Json j = header("riemann");
  j["ode"] = io::to_json(ode);
  j["riemann_symbol"] = io::to_json(rs);
  j["text"] = rs.to_text();
  out << j.dump(2) << "\n";
  return kOk;
}

std::vector<BigRat> sweep_values(const std::string& source) {
  const auto a = source.find(':');
  const auto b = a == std::string::npos ? a : source.find(':', a + 1);
  if (b == std::string::npos) throw UsageError("--sweep expects START:STOP:STEP");
  const BigRat start = parse_rational(source.substr(0, a));
  const BigRat stop = parse_rational(source.substr(a + 1, b - a - 1));
  const BigRat step = parse_rational(source.substr(b + 1));
  if (step <= 0 || stop < start) throw UsageError("--sweep needs STEP > 0 and STOP >= START");
  std::vector<BigRat> out;
  for (BigRat w = start; w <= stop; w += step) out.push_back(w);
  return out;
}

int cmd_polymer(const Options& o, std::ostream& out) {
  if (o.b.empty()) throw UsageError("polymer needs --b");
  if (o.W.empty() && o.sweep.empty()) throw UsageError("polymer needs --W or --sweep");
  PolymerParams p{parse_rational(o.b), o.W.empty() ? BigRat(1) : parse_rational(o.W), parse_rational(o.tau)};
  SpectralOptions so;
  if (o.nu_min) so.nu_min = *o.nu_min;
  so.nu_max = o.nu_max;
  so.count = o.count;
  so.precision_bits = o.precision_bits;
  so.series_order = o.series_order;
  so.grid_points = o.grid;
  so.strict = o.strict;

  auto params_json = [](const PolymerParams& pp) {
    Json j;
    j["b"] = io::to_json(pp.b);
    j["W"] = io::to_json(pp.W);
    j["tau"] = io::to_json(pp.tau);
    j["kappa"] = io::to_json(pp.kappa());
    return j;
  };
  auto q_of = [](const PolymerParams& pp, double nu) -> Json {
    try {
      return apparent_location(pp.b.get_d(), pp.kappa().get_d(), nu);
    } catch (const Error&) {
      return nullptr;
    }
  };

  if (!o.sweep.empty()) {
    std::vector<BigRat> ws = sweep_values(o.sweep);
    std::ostringstream csv;
    csv << std::setprecision(12) << "W,nu_1,T_rel\n";
    Json rows = Json::array();
    for (const auto& w : ws) {
      PolymerParams pw = p;
      pw.W = w;
      SpectralResult r = solve_spectrum(pw, so);
      csv << w.get_d() << "," << r.eigenvalues.front() << "," << (r.T_rel ? *r.T_rel : 0.0) << "\n";
      Json row = params_json(pw);
      row["nu_1"] = r.eigenvalues.front();
      row["T_rel"] = r.T_rel ? Json(*r.T_rel) : Json(nullptr);
      row["q"] = q_of(pw, r.eigenvalues.front());
      rows.push_back(std::move(row));
    }
    if (o.csv == "-") {
      out << csv.str();
      return kOk;
    }
    if (!o.csv.empty()) {
      std::ofstream f(o.csv);
      if (!(f << csv.str())) throw UsageError("cannot write CSV file '" + o.csv + "'");
    }
    Json j = header("polymer");
    j["sweep"] = std::move(rows);
    out << j.dump(2) << "\n";
    return kOk;
  }

  SpectralResult r = solve_spectrum(p, so);
  Json q = q_of(p, r.eigenvalues.front());
  if (o.format == "text") {
    out << std::setprecision(12);
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) out << "nu_" << i + 1 << " = " << r.eigenvalues[i] << "\n";
    if (r.T_rel) out << "T_rel = " << *r.T_rel << "\n";
    if (!q.is_null()) out << "q = " << q.get<double>() << "\n";
    for (const auto& d : r.diagnostics) out << "note: " << d << "\n";
    return kOk;
  }
  Json j = header("polymer");
  j["params"] = params_json(p);
  j.update(io::to_json(r));
  j["q"] = q;
  if (o.samples) {
    Json s = Json::array();
    for (const auto& w : r.wronskian_samples) s.push_back({w.nu, w.value});
    j["wronskian_samples"] = std::move(s);
  }
  out << j.dump(2) << "\n";
  return kOk;
}

std::string error_code_help() {
  std::string s =
      "\nExit status: 0 success, 1 domain error, 2 usage or input error.\n"
      "Errors are printed on stdout as {\"error\": {\"code\": ..., \"message\": ...}}.\n"
      "Error codes:\n";
  for (ErrorCode c : all_error_codes()) s += "  " + std::string(code_name(c)) + "\n";
  s += "  UsageError\n";
  return s;
}

void emit_error(std::ostream& out, std::ostream& err, std::string_view code, const std::string& message) {
  Json j;
  j["error"] = {{"code", std::string(code)}, {"message", message}};
  out << j.dump(2) << "\n";
  err << "error [" << code << "]: " << message << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis and transformation of linear ODEs with polynomial coefficients", "apparent"};
  app.footer(error_code_help());
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  const char* input_help = "Equation JSON: a file path, '-' for stdin, or an inline document";
  auto* analyze = app.add_subcommand("analyze", "Singular points, exponents, Fuchs relation and Riemann symbol");
  analyze->add_option("input", o.input, input_help)->required();
  auto* deform_cmd = app.add_subcommand("deform", "Equation for the derivative of the unknown");
  deform_cmd->add_option("input", o.input, input_help)->required();
  deform_cmd->add_option("--times", o.times, "Number of successive derivatives")->check(CLI::PositiveNumber);
  auto* undeform_cmd = app.add_subcommand("undeform", "Remove apparent singular points by integration");
  undeform_cmd->add_option("input", o.input, input_help)->required();
  undeform_cmd->add_option("--point", o.points, "Point to remove, optionally with multiplicity as Q:M");
  undeform_cmd->add_option("--max-slack", o.max_slack, "Extra degree allowance for the antecedent")
      ->check(CLI::NonNegativeNumber);
  auto* heun = app.add_subcommand("heun", "Build a Heun-class equation from a parameter document and analyze it");
  heun->add_option("input", o.input,
                   "Parameter JSON with \"family\": general | multi | third_order | confluent")
      ->required();
  auto* riemann = app.add_subcommand("riemann", "Generalized Riemann symbol");
  riemann->add_option("input", o.input, input_help)->required();
  auto* polymer = app.add_subcommand("polymer", "Coil-stretch spectral problem by two-sided series shooting");
  polymer->add_option("--b", o.b, "Flexibility b > 0 (rational or decimal)");
  polymer->add_option("--W", o.W, "Weissenberg number W > 0");
  polymer->add_option("--tau", o.tau, "Equilibrium relaxation time");
  polymer->add_option("--nu-min", o.nu_min, "Lower end of the search window (default 0)");
  polymer->add_option("--nu-max", o.nu_max, "Upper end of the search window (default 10 b)");
  polymer->add_option("--count", o.count, "Number of eigenvalues")->check(CLI::PositiveNumber);
  polymer->add_option("--precision-bits", o.precision_bits, "Working precision")->check(CLI::Range(64, 1 << 20));
  polymer->add_option("--series-order", o.series_order, "Terms per local series")->check(CLI::Range(4, 1 << 20));
  polymer->add_option("--grid", o.grid, "Scan intervals over the window")->check(CLI::Range(2, 1 << 20));
  polymer->add_flag("--strict", o.strict, "Also report endpoint values of each eigenfunction");
  polymer->add_flag("--samples", o.samples, "Include the scanned Wronskian samples");
  polymer->add_option("--sweep", o.sweep, "Sweep W over START:STOP:STEP");
  polymer->add_option("--csv", o.csv, "With --sweep: write W,nu_1,T_rel rows to a file ('-' for stdout)");
  for (auto* sub : {analyze, deform_cmd, undeform_cmd, heun, riemann, polymer}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*analyze) return cmd_analyze(o, in, out);
    if (*deform_cmd) return cmd_deform(o, in, out);
    if (*undeform_cmd) return cmd_undeform(o, in, out);
    if (*heun) return cmd_heun(o, in, out);
    if (*riemann) return cmd_riemann(o, in, out);
    return cmd_polymer(o, out);
  } catch (const UsageError& e) {
    emit_error(out, err, "UsageError", e.what());
    return kUsageError;
  } catch (const Error& e) {
    emit_error(out, err, code_name(e.code()), e.what());
    return e.code() == ErrorCode::ParseError ? kUsageError : kDomainError;
  }
}

}  // namespace apparent::cli

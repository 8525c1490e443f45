#include "apparent/json_io.hpp"

#include "apparent/error.hpp"

namespace apparent::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::vector<BigRat> rationals_from_json(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<BigRat> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json rationals(const std::vector<BigRat>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

}  // namespace

Json to_json(const BigRat& q) { return to_string(q); }

Json to_json(const RatPoly& p) { return rationals(p.coeffs()); }

Json to_json(const Location& loc) { return loc.to_string(); }

Json to_json(const LinearODE& ode) {
  Json j;
  j["schema"] = kSchema;
  j["order"] = ode.order();
  Json coeffs = Json::array();
  for (const auto& c : ode.coeffs()) coeffs.push_back(to_json(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json to_json(const SingularPoint& sp) {
  Json j;
  j["location"] = to_json(sp.location);
  j["kind"] = std::string(kind_name(sp.kind));
  j["exponents"] = rationals(sp.exponents);
  if (sp.exponent_residual.degree() > 0) j["irrational_exponents_of"] = to_json(sp.exponent_residual);
  return j;
}

Json to_json(const RiemannSymbol& rs) {
  Json j;
  Json cols = Json::array();
  for (const auto& c : rs.columns) {
    Json col;
    col["location"] = to_json(c.location);
    col["exponents"] = rationals(c.exponents);
    if (c.exponent_residual.degree() > 0) col["irrational_exponents_of"] = to_json(c.exponent_residual);
    cols.push_back(std::move(col));
  }
  j["columns"] = std::move(cols);
  Json extra = Json::array();
  for (const auto& e : rs.extra) {
    Json x;
    x["location"] = to_json(e.location);
    x["role"] = e.role == ExtraPointRole::Apparent ? "apparent" : "accessory";
    extra.push_back(std::move(x));
  }
  j["extra"] = std::move(extra);
  return j;
}

Json to_json(const FuchsReport& fr) {
  Json j;
  j["fuchsian"] = fr.fuchsian;
  Json irr = Json::array();
  for (const auto& l : fr.irregular_points) irr.push_back(to_json(l));
  j["irregular_points"] = std::move(irr);
  j["singular_count"] = fr.singular_count;
  if (fr.fuchsian) {
    j["exponent_sum"] = to_json(fr.exponent_sum);
    j["expected_sum"] = to_json(fr.expected_sum);
    j["identity_holds"] = fr.identity_holds;
  }
  j["diagnostics"] = fr.diagnostics;
  return j;
}

Json to_json(const DeformResult& dr) {
  Json j;
  j["ode"] = to_json(dr.ode);
  Json pts = Json::array();
  for (const auto& p : dr.new_apparent) {
    Json x;
    x["location"] = to_json(p.location);
    x["multiplicity"] = p.multiplicity;
    if (p.expected_gap) x["expected_gap"] = *p.expected_gap;
    pts.push_back(std::move(x));
  }
  j["new_apparent"] = std::move(pts);
  j["clearing_factor"] = to_json(dr.clearing_factor);
  if (dr.unresolved_factor.degree() > 0) j["unresolved_factor"] = to_json(dr.unresolved_factor);
  return j;
}

Json to_json(const UndeformResult& ur) {
  Json j;
  j["ode"] = to_json(ur.ode);
  j["removed_points"] = rationals(ur.removed_points);
  j["free_parameters"] = ur.free_parameters;
  Json basis = Json::array();
  for (const auto& b : ur.basis) basis.push_back(to_json(b));
  j["basis"] = std::move(basis);
  j["slack_used"] = ur.slack_used;
  return j;
}

Json to_json(const SpectralResult& sr) {
  Json j;
  j["eigenvalues"] = sr.eigenvalues;
  j["T_rel"] = sr.T_rel ? Json(*sr.T_rel) : Json(nullptr);
  j["series_order"] = sr.series_order;
  j["precision_bits"] = sr.precision_bits;
  if (!sr.endpoints.empty()) {
    Json e = Json::array();
    for (const auto& v : sr.endpoints) e.push_back({{"nu", v.nu}, {"w_at_0", v.w0}, {"w_at_1", v.w1}});
    j["endpoints"] = std::move(e);
  }
  j["diagnostics"] = sr.diagnostics;
  return j;
}

BigRat rational_from_json(const Json& j) {
  if (j.is_number_integer()) return BigRat(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail("expected a rational as a string or an integer, got " + j.dump());
}

RatPoly poly_from_json(const Json& j) { return RatPoly(rationals_from_json(j, "polynomial")); }

LinearODE ode_from_json(const Json& j) {
  if (!j.is_object()) fail("equation document must be a JSON object");
  if (!j.contains("coeffs") && j.contains("ode")) return ode_from_json(j.at("ode"));
  if (j.contains("schema") && j.at("schema") != kSchema)
    fail("unsupported schema " + j.at("schema").dump() + ", expected \"" + kSchema + "\"");
  const Json& c = field(j, "coeffs");
  if (!c.is_array()) fail("\"coeffs\" must be an array of coefficient lists");
  std::vector<RatPoly> coeffs;
  for (const auto& p : c) coeffs.push_back(poly_from_json(p));
  return make_ode(std::move(coeffs));
}

LinearODE heun_from_json(const Json& j) {
  const std::string family = field(j, "family").is_string() ? j.at("family").get<std::string>() : "";
  auto r = [&](const char* name) { return rational_from_json(field(j, name)); };
  if (family == "general") {
    auto theta = rationals_from_json(field(j, "theta"), "theta");
    if (theta.size() != 3) fail("general Heun needs exactly three theta values");
    return general_heun({r("t"), {theta[0], theta[1], theta[2]}, r("theta_inf"), r("alpha"), r("q")});
  }
  if (family == "multi") {
    return multi_heun({rationals_from_json(field(j, "z"), "z"), rationals_from_json(field(j, "theta"), "theta"),
                       r("theta_inf"), r("alpha"), rationals_from_json(field(j, "q"), "q")});
  }
  if (family == "third_order")
    return third_order_example({r("t"), r("alpha"), r("beta"), r("theta2"), r("theta3"), r("kappa"), r("q")});
  if (family == "confluent")
    return confluent_heun({poly_from_json(field(j, "p0")), poly_from_json(field(j, "p1")), r("alpha"), r("q")});
  fail("\"family\" must be one of general, multi, third_order, confluent");
}

}  // namespace apparent::io

#pragma once

#include <json.hpp>

#include "apparent/frobenius.hpp"
#include "apparent/heun.hpp"
#include "apparent/polymer.hpp"
#include "apparent/singularities.hpp"
#include "apparent/transform.hpp"

namespace apparent::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "apparent/v1";

/// Rationals travel as strings ("3/16") so pipes stay exact.
Json to_json(const BigRat& q);
Json to_json(const RatPoly& p);
Json to_json(const Location& loc);
/// {"schema": ..., "coeffs": [[...], ...]} with ascending coefficient lists.
Json to_json(const LinearODE& ode);
Json to_json(const SingularPoint& sp);
Json to_json(const RiemannSymbol& rs);
Json to_json(const FuchsReport& fr);
Json to_json(const DeformResult& dr);
Json to_json(const UndeformResult& ur);
Json to_json(const SpectralResult& sr);

/// Accepts a string ("p/q", integer or exact decimal) or a JSON integer.
/// ParseError otherwise.
BigRat rational_from_json(const Json& j);
RatPoly poly_from_json(const Json& j);
/// Accepts an equation document, or any report carrying one under "ode".
LinearODE ode_from_json(const Json& j);

/// Parameter document with "family": "general" | "multi" | "third_order" |
/// "confluent"; returns the constructed equation.
LinearODE heun_from_json(const Json& j);

}  // namespace apparent::io

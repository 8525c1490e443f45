#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apparent/ode.hpp"
#include "apparent/recurrence.hpp"

namespace apparent {

enum class PointKind { Ordinary, RegularSingular, IrregularSingular, ApparentSingular };

std::string_view kind_name(PointKind kind);

struct SingularPoint {
  Location location;
  PointKind kind;
  /// Rational characteristic exponents, ascending, with multiplicity. Empty
  /// for ordinary and irregular points.
  std::vector<BigRat> exponents;
  /// Monic factor of the indicial polynomial carrying irrational exponents
  /// (1 when every exponent is rational).
  RatPoly exponent_residual;
};

struct IndicialResult {
  RatPoly polynomial;             // in the exponent variable
  std::vector<BigRat> exponents;  // rational roots, ascending, with multiplicity
  RatPoly residual;               // monic; 1 when all roots are rational
  bool all_rational() const { return residual.degree() == 0; }
};

/// The equation expanded around a point. Infinity is handled by the z = 1/zeta
/// pullback. Throws IrregularPoint when the Fuchs pole-order test fails.
LocalOperator<BigRat> local_operator(const LinearODE& ode, const Location& point);

/// True when every P_k/P_0 has a pole of order at most k at the point.
bool is_regular_at(const LinearODE& ode, const Location& point);
/// True when every P_k/P_0 is finite at the point.
bool is_ordinary_at(const LinearODE& ode, const Location& point);

IndicialResult indicial_exponents(const LinearODE& ode, const Location& point);

struct Obstruction {
  int offset;
  BigRat value;
};

struct FrobeniusSolution {
  BigRat point;
  BigRat exponent;
  std::vector<BigRat> coeffs;  // a_0 = 1, ..., a_N
  int truncation = 0;
  std::vector<Obstruction> obstructions;

  bool log_free() const;
};

/// Exact series x^rho * sum a_j x^j, x = z - point, through a_N. At each
/// resonance the obstruction is recorded and the free coefficient is set to 0.
FrobeniusSolution frobenius_series(const LinearODE& ode, const BigRat& point, const BigRat& exponent, int terms);

/// Residual coefficients r_j of L[x^rho * sum a_i x^i] indexed so that r_j
/// multiplies x^{rho - n + mu + j}; r_0..r_N vanish for a genuine truncated
/// solution of length N + 1.
std::vector<BigRat> series_residual(const LinearODE& ode, const BigRat& point, const BigRat& exponent,
                                    const std::vector<BigRat>& coeffs);

struct ApparentVerdict {
  bool is_apparent = false;
  std::vector<BigRat> exponents;
  std::optional<std::string> failed_condition;
};

/// NotSingular at ordinary points, IrregularPoint at irregular ones.
ApparentVerdict is_apparent(const LinearODE& ode, const BigRat& point);

SingularPoint classify_point(const LinearODE& ode, const Location& point);

}  // namespace apparent

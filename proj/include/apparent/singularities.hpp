#pragma once

#include <string>
#include <vector>

#include "apparent/frobenius.hpp"
#include "apparent/ode.hpp"

namespace apparent {

struct SingularPointSet {
  /// Rational roots of P_0 (ascending) and then infinity; ordinary points omitted.
  std::vector<SingularPoint> points;
  /// Monic factor of P_0 whose roots are irrational and were not classified.
  RatPoly unresolved_factor;

  bool has_unresolved() const { return unresolved_factor.degree() > 0; }
};

SingularPointSet singular_points(const LinearODE& ode);

struct RiemannColumn {
  Location location;
  std::vector<BigRat> exponents;
  RatPoly exponent_residual;  // 1 when every exponent is rational
};

enum class ExtraPointRole { Apparent, Accessory };

struct ExtraPoint {
  BigRat location;
  ExtraPointRole role;
};

/// Generalized Riemann symbol: one column per singular point plus the extra
/// column of apparent singularities and accessory zeros of P_n (roots of P_n
/// that are not roots of P_0).
struct RiemannSymbol {
  std::vector<RiemannColumn> columns;
  std::vector<ExtraPoint> extra;

  /// Matrix layout with the extra column after a bar.
  std::string to_text() const;
};

/// NotFuchsian if any point (including infinity) is irregular.
RiemannSymbol riemann_symbol(const LinearODE& ode);

struct FuchsReport {
  bool fuchsian = false;
  std::vector<Location> irregular_points;
  int singular_count = 0;   // s, including infinity when singular
  BigRat exponent_sum;      // over all singular points
  BigRat expected_sum;      // (s - 2) n (n - 1) / 2
  bool identity_holds = false;
  std::vector<std::string> diagnostics;
};

FuchsReport fuchs_check(const LinearODE& ode);

}  // namespace apparent

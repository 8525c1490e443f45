#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apparent/highfloat.hpp"
#include "apparent/ode.hpp"

namespace apparent {

/// Coil-stretch model parameters: flexibility b, Weissenberg number W and
/// equilibrium relaxation time tau. The stretching rate kappa = b W.
struct PolymerParams {
  BigRat b;
  BigRat W;
  BigRat tau{1};

  BigRat kappa() const { return b * W; }
  /// InvalidArgument unless b, W, tau are all positive.
  void validate() const;
};

/// z(z-1) w'' + (-kappa z(z-1) + 3(z-1)/2 + (b+1) z) w' + ((nu-kappa)(z-1) - 2 b kappa z) w = 0
LinearODE polymer_ode(const PolymerParams& p, const BigRat& nu);

/// Root of the w coefficient: (nu - kappa) / (nu - kappa - 2 b kappa).
/// DegenerateApparentPoint when the denominator vanishes.
BigRat apparent_location(const BigRat& b, const BigRat& kappa, const BigRat& nu);
double apparent_location(double b, double kappa, double nu);

/// The equation for u = w' written out directly (after clearing z - q),
/// independent of the general deform transform.
LinearODE polymer_deformed(const PolymerParams& p, const BigRat& nu);

struct SpectralOptions {
  /// Search window (nu_min, nu_max]; nu_max defaults to 10 b.
  double nu_min = 0.0;
  std::optional<double> nu_max;
  int count = 1;
  int precision_bits = 256;
  int series_order = 200;
  int grid_points = 400;
  double matching_point = 0.5;
  double rel_tol = 1e-10;
  /// Also report endpoint values of each eigenfunction.
  bool strict = false;
  int max_precision_bits = 4096;
  int max_series_order = 6400;
};

struct WronskianSample {
  double nu;
  double value;
};

/// Eigenfunction normalised to w(0) = 1; w1 is its value at z = 1.
struct EndpointValues {
  double nu;
  double w0;
  double w1;
};

struct SpectralResult {
  std::vector<double> eigenvalues;  // strictly increasing
  std::optional<double> T_rel;
  std::vector<WronskianSample> wronskian_samples;
  int series_order = 0;
  int precision_bits = 0;
  std::vector<EndpointValues> endpoints;  // strict mode only
  std::vector<std::string> diagnostics;
};

/// Value and first two derivatives of a solution at z.
struct PointValue {
  double z;
  double w;
  double dw;
  double d2w;
};

/// Bounded local solutions at z = 0 and z = 1 for one value of nu, evaluated
/// with MPFR arithmetic. Throws PrecisionExhausted when a truncated series is
/// not converged to working accuracy at a requested point.
class PolymerShooter {
 public:
  /// `accuracy_bits`: relative accuracy demanded of every series evaluation.
  PolymerShooter(const PolymerParams& p, double nu, int precision_bits, int series_order, int accuracy_bits = 50);

  /// w0 w1' - w0' w1 at z, with w0 bounded at 0 and w1 bounded at 1, both
  /// with leading coefficient 1.
  HighFloat wronskian(double z) const;

  /// The solution bounded at 0, continued past `matching_point` by the
  /// multiple of the solution bounded at 1 that matches its value there.
  PointValue matched(double z, double matching_point) const;

  /// Value at 1 of the matched solution (the scale factor of the right branch).
  double right_scale(double matching_point) const;

  /// |P_0 w'' + P_1 w' + P_2 w| / max(|P_0 w''|, |P_1 w'|, |P_2 w|) for the
  /// matched solution at z.
  double relative_residual(double z, double matching_point) const;

 private:
  struct Local {
    HighFloat w, dw, d2w;
  };
  Local evaluate(const std::vector<HighFloat>& a, const HighFloat& x) const;
  Local left(double z) const;
  Local right(double z) const;
  Local matched_local(double z, double matching_point) const;
  HighFloat right_factor(double matching_point) const;

  mpfr_prec_t prec_;
  long accuracy_bits_;
  HighFloat b_, kappa_, nu_;
  std::vector<HighFloat> left_, right_;
};

/// Grid scan of the matching Wronskian over the window, bisection on each
/// sign change. NoEigenvalueInWindow when no sign change is found.
SpectralResult solve_spectrum(const PolymerParams& p, const SpectralOptions& options = {});

}  // namespace apparent

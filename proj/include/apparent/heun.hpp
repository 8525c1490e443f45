#pragma once

#include <array>
#include <vector>

#include "apparent/ode.hpp"

namespace apparent {

/// General Heun equation with singular points 0, 1, t and infinity.
struct HeunParams {
  BigRat t;
  std::array<BigRat, 3> theta;
  BigRat theta_inf;
  BigRat alpha;
  BigRat q;
};

/// m finite Fuchsian points and m - 2 accessory zeros.
struct MultiHeunParams {
  std::vector<BigRat> z;      // m distinct points
  std::vector<BigRat> theta;  // m exponents
  BigRat theta_inf;
  BigRat alpha;
  std::vector<BigRat> q;      // m - 2 zeros of P_2, repeats allowed
};

/// The third-order Fuchsian example with points 0, 1, t and infinity.
struct ThirdOrderParams {
  BigRat t, alpha, beta, theta2, theta3, kappa, q;
};

/// Non-reduced confluent Heun class: deg P_0 <= 2, deg P_1 = 2, P_2 = alpha (z - q).
struct ConfluentHeunParams {
  RatPoly p0;
  RatPoly p1;
  BigRat alpha;
  BigRat q;
};

/// FuchsianIdentity when sum(theta) + theta_inf + alpha != 2,
/// DegenerateGeometry when t is 0 or 1.
LinearODE general_heun(const HeunParams& p);

/// P_0 = prod (z - z_j), P_1 = sum (1 - theta_k) P_0 / (z - z_k),
/// P_2 = alpha theta_inf prod (z - q_j); identity sum = m - 1.
LinearODE multi_heun(const MultiHeunParams& p);

LinearODE third_order_example(const ThirdOrderParams& p);

/// NotConfluentClass on a degree-pattern violation or when no irregular
/// singular point results.
LinearODE confluent_heun(const ConfluentHeunParams& p);

/// MultiHeunParams equivalent of a general Heun parameter set.
MultiHeunParams as_multi(const HeunParams& p);

}  // namespace apparent

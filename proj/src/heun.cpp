#include "apparent/heun.hpp"

#include <algorithm>

#include "apparent/error.hpp"
#include "apparent/frobenius.hpp"

namespace apparent {

MultiHeunParams as_multi(const HeunParams& p) {
  return {{BigRat(0), BigRat(1), p.t}, {p.theta.begin(), p.theta.end()}, p.theta_inf, p.alpha, {p.q}};
}

LinearODE general_heun(const HeunParams& p) {
  if (p.t == 0 || p.t == 1) throw Error(ErrorCode::DegenerateGeometry, "t must differ from 0 and 1");
  return multi_heun(as_multi(p));
}

LinearODE multi_heun(const MultiHeunParams& p) {
  const std::size_t m = p.z.size();
  if (m < 3) throw Error(ErrorCode::InvalidArgument, "need at least three finite singular points");
  if (p.theta.size() != m) throw Error(ErrorCode::InvalidArgument, "one theta per finite singular point");
  if (p.q.size() != m - 2) throw Error(ErrorCode::InvalidArgument, "need m - 2 accessory zeros q_j");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (p.z[i] == p.z[j]) throw Error(ErrorCode::DegenerateGeometry, "coincident singular points at " + to_string(p.z[i]));

  BigRat sum = p.theta_inf + p.alpha;
  for (const auto& th : p.theta) sum += th;
  if (sum != BigRat(static_cast<long>(m) - 1))
    throw Error(ErrorCode::FuchsianIdentity, "sum of exponent parameters is " + to_string(sum) + ", expected " +
                                                 std::to_string(m - 1));

  const RatPoly p0 = RatPoly::from_roots(p.z);
  RatPoly p1;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<BigRat> others;
    for (std::size_t j = 0; j < m; ++j)
      if (j != k) others.push_back(p.z[j]);
    p1 += RatPoly::from_roots(others, 1 - p.theta[k]);
  }
  const RatPoly p2 = RatPoly::from_roots(p.q, p.alpha * p.theta_inf);
  return make_ode({p0, p1, p2});
}

LinearODE third_order_example(const ThirdOrderParams& p) {
  if (p.t == 0 || p.t == 1) throw Error(ErrorCode::DegenerateGeometry, "t must differ from 0 and 1");
  const RatPoly z = RatPoly::identity();
  const RatPoly zm1 = RatPoly::linear_factor(1);
  const RatPoly zmt = RatPoly::linear_factor(p.t);
  const RatPoly p0 = z * z * zm1 * zmt;
  const RatPoly p1 = z * zm1 * zmt * BigRat(3 - p.alpha - p.beta) - z * z * zmt * p.theta2 - z * z * zm1 * p.theta3;
  const RatPoly p2 = zm1 * zmt * BigRat((p.alpha - 1) * (p.beta - 1));
  const RatPoly p3 = RatPoly::linear_factor(p.q) * p.kappa;
  return make_ode({p0, p1, p2, p3});
}

LinearODE confluent_heun(const ConfluentHeunParams& p) {
  if (p.p0.is_zero() || p.p0.degree() > 2)
    throw Error(ErrorCode::NotConfluentClass, "P_0 must be a nonzero polynomial of degree at most 2");
  if (p.p1.degree() != 2) throw Error(ErrorCode::NotConfluentClass, "P_1 must have degree exactly 2");
  if (p.alpha == 0) throw Error(ErrorCode::NotConfluentClass, "P_2 = alpha (z - q) must have degree 1");
  LinearODE ode = make_ode({p.p0, p.p1, RatPoly::linear_factor(p.q) * p.alpha});
  if (ode.coeff(2).degree() != 1 || ode.coeff(1).degree() != 2)
    throw Error(ErrorCode::NotConfluentClass, "common factor removal broke the degree pattern");
  if (classify_point(ode, Location::infinity()).kind != PointKind::IrregularSingular)
    throw Error(ErrorCode::NotConfluentClass, "no irregular singular point");
  return ode;
}

}  // namespace apparent

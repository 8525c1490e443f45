#include "apparent/polymer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "apparent/error.hpp"
#include "apparent/ratfunc.hpp"
#include "apparent/recurrence.hpp"

namespace apparent {

void PolymerParams::validate() const {
  if (b <= 0) throw Error(ErrorCode::InvalidArgument, "b must be positive");
  if (W <= 0) throw Error(ErrorCode::InvalidArgument, "W must be positive");
  if (tau <= 0) throw Error(ErrorCode::InvalidArgument, "tau must be positive");
}

namespace {

struct Coefficients {
  RatPoly p0, p1, p2;
};

Coefficients polymer_coefficients(const PolymerParams& p, const BigRat& nu) {
  const BigRat kappa = p.kappa();
  const RatPoly z = RatPoly::identity();
  const RatPoly zm1 = RatPoly::linear_factor(1);
  Coefficients c;
  c.p0 = z * zm1;
  c.p1 = -(z * zm1 * kappa) + zm1 * BigRat(3, 2) + z * BigRat(p.b + 1);
  c.p2 = zm1 * BigRat(nu - kappa) - z * BigRat(2 * p.b * kappa);
  return c;
}

}  // namespace

LinearODE polymer_ode(const PolymerParams& p, const BigRat& nu) {
  p.validate();
  auto c = polymer_coefficients(p, nu);
  return make_ode({c.p0, c.p1, c.p2});
}

BigRat apparent_location(const BigRat& b, const BigRat& kappa, const BigRat& nu) {
  BigRat den = nu - kappa - 2 * b * kappa;
  if (den == 0) throw Error(ErrorCode::DegenerateApparentPoint, "nu - kappa - 2 b kappa = 0: the w coefficient is constant");
  return BigRat((nu - kappa) / den);
}

double apparent_location(double b, double kappa, double nu) {
  double den = nu - kappa - 2 * b * kappa;
  if (den == 0) throw Error(ErrorCode::DegenerateApparentPoint, "nu - kappa - 2 b kappa = 0: the w coefficient is constant");
  return (nu - kappa) / den;
}

LinearODE polymer_deformed(const PolymerParams& p, const BigRat& nu) {
  p.validate();
  const BigRat q = apparent_location(p.b, p.kappa(), nu);
  auto c = polymer_coefficients(p, nu);
  const RatFunc zmq(RatPoly::linear_factor(q));
  // u = w' satisfies P_0 u'' + (P_1 + P_0' - P_0/(z-q)) u' + (P_2 + P_1' - P_1/(z-q)) u = 0
  RatFunc a2(c.p0);
  RatFunc a1 = RatFunc(c.p1) + RatFunc(poly_derivative(c.p0)) - RatFunc(c.p0) / zmq;
  RatFunc a0 = RatFunc(c.p2) + RatFunc(poly_derivative(c.p1)) - RatFunc(c.p1) / zmq;
  std::vector<RatPoly> out;
  for (const RatFunc& f : {a2, a1, a0}) {
    RatFunc cleared = f * zmq;
    if (!cleared.is_polynomial()) throw Error(ErrorCode::InvalidArgument, "coefficient not polynomial after clearing z - q");
    out.push_back(cleared.num() * BigRat(1 / cleared.den().lead()));
  }
  return make_ode(std::move(out));
}

namespace {

using HFPoly = std::vector<HighFloat>;

// p(x0 + x) by repeated synthetic division.
HFPoly shift(HFPoly p, const HighFloat& x0) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) p[j - 1] += x0 * p[j];
  return p;
}

HighFloat horner(const HFPoly& p, const HighFloat& x) {
  HighFloat r(0L);
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

// Coefficients of the three polynomials in ascending order.
std::vector<HFPoly> numeric_coefficients(const HighFloat& b, const HighFloat& kappa, const HighFloat& nu) {
  const HighFloat three_halves = HighFloat(3L) / HighFloat(2L);
  return {
      {HighFloat(0L), HighFloat(-1L), HighFloat(1L)},
      {-three_halves, kappa + three_halves + b + HighFloat(1L), -kappa},
      {kappa - nu, nu - kappa - HighFloat(2L) * b * kappa},
  };
}

}  // namespace

PolymerShooter::PolymerShooter(const PolymerParams& p, double nu, int precision_bits, int series_order,
                               int accuracy_bits)
    : prec_(std::max<mpfr_prec_t>(precision_bits, HighFloat::kMinPrecision)), accuracy_bits_(accuracy_bits) {
  p.validate();
  if (series_order < 4) throw Error(ErrorCode::InvalidArgument, "series order must be at least 4");
  if (!std::isfinite(nu)) throw Error(ErrorCode::InvalidArgument, "nu must be finite");
  ScopedPrecision guard(prec_);
  b_ = HighFloat(p.b, prec_);
  kappa_ = HighFloat(p.kappa(), prec_);
  nu_ = HighFloat(nu);
  auto coeffs = numeric_coefficients(b_, kappa_, nu_);

  LocalOperator<HighFloat> at_zero(coeffs, 1);
  left_ = at_zero.series(HighFloat(0L), series_order);

  std::vector<HFPoly> shifted;
  for (const auto& c : coeffs) shifted.push_back(shift(c, HighFloat(1L)));
  LocalOperator<HighFloat> at_one(std::move(shifted), 1);
  right_ = at_one.series(HighFloat(0L), series_order);
}

PolymerShooter::Local PolymerShooter::evaluate(const std::vector<HighFloat>& a, const HighFloat& x) const {
  ScopedPrecision guard(prec_);
  Local out{HighFloat(0L), HighFloat(0L), HighFloat(0L)};
  HighFloat abs_sum(0L);
  HighFloat abs_d1(0L);
  HighFloat tail(0L);
  HighFloat xp(1L);    // x^j
  HighFloat xpm1(0L);  // x^(j-1)
  HighFloat xpm2(0L);  // x^(j-2)
  const std::size_t n = a.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (j == 1) xpm1 = HighFloat(1L);
    if (j == 2) xpm2 = HighFloat(1L);
    const HighFloat term = a[j] * xp;
    out.w += term;
    abs_sum += abs(term);
    if (j >= 1) {
      const HighFloat d1 = HighFloat(static_cast<long>(j)) * a[j] * xpm1;
      out.dw += d1;
      abs_d1 += abs(d1);
      if (j + 4 >= n && abs(d1) > tail) tail = abs(d1);
    }
    if (j >= 2) out.d2w += HighFloat(static_cast<long>(j * (j - 1))) * a[j] * xpm2;
    if (j + 4 >= n && abs(term) > tail) tail = abs(term);
    xpm2 = xpm1;
    xpm1 = xp;
    xp *= x;
  }
  auto lost_bits = [](const HighFloat& total, const HighFloat& value) {
    if (value.is_zero()) return total.is_zero() ? 0L : 1L << 20;
    return total.exponent2() - value.exponent2();
  };
  const HighFloat scale = abs_sum > abs_d1 ? abs_sum : abs_d1;
  const long budget = static_cast<long>(prec_) - accuracy_bits_ - 16;
  const bool truncated = !tail.is_zero() && scale.exponent2() - tail.exponent2() < accuracy_bits_;
  if (truncated || lost_bits(abs_sum, out.w) > budget || lost_bits(abs_d1, out.dw) > budget) {
    std::ostringstream msg;
    msg << "local series at |x| = " << std::abs(x.to_double()) << " not converged with " << (n - 1)
        << " terms at " << prec_ << " bits; raise precision_bits or series_order";
    throw Error(ErrorCode::PrecisionExhausted, msg.str());
  }
  return out;
}

PolymerShooter::Local PolymerShooter::left(double z) const {
  ScopedPrecision guard(prec_);
  return evaluate(left_, HighFloat(z));
}

PolymerShooter::Local PolymerShooter::right(double z) const {
  ScopedPrecision guard(prec_);
  return evaluate(right_, HighFloat(z) - HighFloat(1L));
}

HighFloat PolymerShooter::wronskian(double z) const {
  if (!(z > 0 && z < 1)) throw Error(ErrorCode::InvalidArgument, "matching point must lie in (0, 1)");
  ScopedPrecision guard(prec_);
  Local l = left(z);
  Local r = right(z);
  return l.w * r.dw - l.dw * r.w;
}

HighFloat PolymerShooter::right_factor(double matching_point) const {
  ScopedPrecision guard(prec_);
  Local l = left(matching_point);
  Local r = right(matching_point);
  if (abs(r.w) >= abs(r.dw)) return l.w / r.w;
  return l.dw / r.dw;
}

PolymerShooter::Local PolymerShooter::matched_local(double z, double matching_point) const {
  if (!(z >= 0 && z <= 1)) throw Error(ErrorCode::InvalidArgument, "z must lie in [0, 1]");
  if (!(matching_point > 0 && matching_point < 1))
    throw Error(ErrorCode::InvalidArgument, "matching point must lie in (0, 1)");
  ScopedPrecision guard(prec_);
  if (z <= matching_point) return left(z);
  const HighFloat c = right_factor(matching_point);
  Local r = right(z);
  return {c * r.w, c * r.dw, c * r.d2w};
}

PointValue PolymerShooter::matched(double z, double matching_point) const {
  Local v = matched_local(z, matching_point);
  return {z, v.w.to_double(), v.dw.to_double(), v.d2w.to_double()};
}

double PolymerShooter::right_scale(double matching_point) const { return right_factor(matching_point).to_double(); }

double PolymerShooter::relative_residual(double z, double matching_point) const {
  ScopedPrecision guard(prec_);
  Local v = matched_local(z, matching_point);
  auto coeffs = numeric_coefficients(b_, kappa_, nu_);
  const HighFloat x(z);
  const HighFloat t0 = horner(coeffs[0], x) * v.d2w;
  const HighFloat t1 = horner(coeffs[1], x) * v.dw;
  const HighFloat t2 = horner(coeffs[2], x) * v.w;
  HighFloat biggest = abs(t0);
  if (abs(t1) > biggest) biggest = abs(t1);
  if (abs(t2) > biggest) biggest = abs(t2);
  if (biggest.is_zero()) return 0.0;
  return (abs(t0 + t1 + t2) / biggest).to_double();
}

namespace {

struct Attempt {
  int bits;
  int order;
};

SpectralResult scan(const PolymerParams& p, const SpectralOptions& o, double nu_max, Attempt at) {
  SpectralResult res;
  res.series_order = at.order;
  res.precision_bits = at.bits;
  const int accuracy = static_cast<int>(std::ceil(-std::log2(o.rel_tol))) + 16;
  auto wronskian = [&](double nu) {
    return PolymerShooter(p, nu, at.bits, at.order, accuracy).wronskian(o.matching_point);
  };

  const int grid = o.grid_points;
  std::vector<double> nus(static_cast<std::size_t>(grid) + 1);
  std::vector<int> signs(nus.size());
  for (int i = 0; i <= grid; ++i) {
    const double nu = i == grid ? nu_max : o.nu_min + (nu_max - o.nu_min) * i / grid;
    HighFloat d = wronskian(nu);
    nus[static_cast<std::size_t>(i)] = nu;
    signs[static_cast<std::size_t>(i)] = d.sign();
    res.wronskian_samples.push_back({nu, d.to_double()});
  }

  for (std::size_t i = 1; i < nus.size() && static_cast<int>(res.eigenvalues.size()) < o.count; ++i) {
    if (signs[i] == 0) {
      res.eigenvalues.push_back(nus[i]);
      continue;
    }
    if (signs[i - 1] == 0 || signs[i - 1] == signs[i]) continue;
    double lo = nus[i - 1];
    double hi = nus[i];
    int lo_sign = signs[i - 1];
    for (int iter = 0; iter < 200; ++iter) {
      if (hi - lo <= o.rel_tol * std::max(std::abs(lo), std::abs(hi))) break;
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const int s = wronskian(mid).sign();
      if (s == 0) {
        lo = hi = mid;
        break;
      }
      if (s == lo_sign) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    res.eigenvalues.push_back(0.5 * (lo + hi));
  }
  return res;
}

}  // namespace

SpectralResult solve_spectrum(const PolymerParams& p, const SpectralOptions& o) {
  p.validate();
  const double b = p.b.get_d();
  const double nu_max = o.nu_max.value_or(10.0 * b);
  if (!(o.nu_min < nu_max)) throw Error(ErrorCode::InvalidArgument, "need nu_min < nu_max");
  if (o.count < 1) throw Error(ErrorCode::InvalidArgument, "count must be at least 1");
  if (o.grid_points < 2) throw Error(ErrorCode::InvalidArgument, "grid_points must be at least 2");
  if (!(o.rel_tol > 0)) throw Error(ErrorCode::InvalidArgument, "rel_tol must be positive");
  if (o.precision_bits < HighFloat::kMinPrecision)
    throw Error(ErrorCode::InvalidArgument, "precision_bits must be at least 64");
  if (!(o.matching_point > 0 && o.matching_point < 1))
    throw Error(ErrorCode::InvalidArgument, "matching point must lie in (0, 1)");

  Attempt at{o.precision_bits, o.series_order};
  std::vector<std::string> notes;
  SpectralResult res;
  for (;;) {
    try {
      res = scan(p, o, nu_max, at);
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
      Attempt next{std::min(at.bits + 64, std::max(o.max_precision_bits, at.bits)),
                   std::min(at.order * 2, std::max(o.max_series_order, at.order))};
      if (next.bits == at.bits && next.order == at.order) throw;
      notes.push_back("raised precision to " + std::to_string(next.bits) + " bits and series order to " +
                      std::to_string(next.order) + " (" + e.what() + ")");
      at = next;
    }
  }
  res.diagnostics = std::move(notes);

  if (res.eigenvalues.empty()) {
    std::ostringstream msg;
    msg << "matching Wronskian has no sign change on (" << o.nu_min << ", " << nu_max << "] with " << o.grid_points
        << " grid intervals";
    throw Error(ErrorCode::NoEigenvalueInWindow, msg.str());
  }

  const double tau = p.tau.get_d();
  for (double nu : res.eigenvalues) {
    if (nu > 0) {
      res.T_rel = b * tau / nu;
      break;
    }
  }
  if (!res.T_rel) res.diagnostics.push_back("no positive eigenvalue found; relaxation time undefined");

  const int accuracy = static_cast<int>(std::ceil(-std::log2(o.rel_tol))) + 16;
  if (o.strict) {
    for (double nu : res.eigenvalues) {
      PolymerShooter s(p, nu, res.precision_bits, res.series_order, accuracy);
      res.endpoints.push_back({nu, 1.0, s.right_scale(o.matching_point)});
    }
  }
  return res;
}

}  // namespace apparent

#include "apparent/ode.hpp"

#include <algorithm>

#include "apparent/error.hpp"

namespace apparent {

bool LinearODE::follows_degree_convention() const {
  const int d0 = leading().degree();
  for (const auto& p : coeffs_)
    if (p.degree() > d0) return false;
  return d0 > order();
}

LinearODE make_ode(std::vector<RatPoly> coeffs) {
  if (coeffs.size() < 2) throw Error(ErrorCode::NotAnODE, "an equation needs at least two coefficients");
  if (coeffs.front().is_zero()) throw Error(ErrorCode::DegenerateLeading, "leading coefficient P_0 is zero");

  RatPoly common = coeffs.front();
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) common = poly_gcd(common, coeffs[k]);
  common = common.monic();
  if (common.degree() > 0)
    for (auto& p : coeffs)
      if (!p.is_zero()) p = exact_div(p, common);

  BigInt den_lcm(1), num_gcd(0);
  for (const auto& p : coeffs)
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& p : coeffs)
    for (const auto& c : p.coeffs()) {
      BigInt n = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
  BigRat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (coeffs.front().lead() < 0) scale = -scale;
  for (auto& p : coeffs) p *= scale;

  LinearODE ode;
  ode.coeffs_ = std::move(coeffs);
  return ode;
}

Moebius Moebius::compose(const Moebius& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Location Moebius::preimage(const Location& z) const {
  // zeta = (d z - b) / (-c z + a)
  if (z.is_infinite()) {
    if (c == 0) return Location::infinity();
    return Location(BigRat(-d / c));
  }
  BigRat den = a - c * z.value();
  if (den == 0) return Location::infinity();
  return Location(BigRat((d * z.value() - b) / den));
}

LinearODE moebius_transform(const LinearODE& ode, const Moebius& map) {
  const BigRat det = map.determinant();
  if (det == 0) throw Error(ErrorCode::SingularMoebius, "Moebius map with ad - bc = 0");
  const int n = ode.order();

  // d/dz = phi(zeta) d/dzeta with phi = (c zeta + d)^2 / det
  const RatPoly denom{map.d, map.c};
  const RatPoly numer{map.b, map.a};
  const RatPoly phi = denom * denom * BigRat(1 / det);

  // ops[j][i]: coefficient of (d/dzeta)^i in (phi d/dzeta)^j
  std::vector<std::vector<RatPoly>> ops(static_cast<std::size_t>(n) + 1);
  ops[0] = {RatPoly::constant(1)};
  for (int j = 0; j < n; ++j) {
    const auto& prev = ops[static_cast<std::size_t>(j)];
    std::vector<RatPoly> next(prev.size() + 1);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i] += phi * poly_derivative(prev[i]);
      next[i + 1] += phi * prev[i];
    }
    ops[static_cast<std::size_t>(j) + 1] = std::move(next);
  }

  int max_deg = 0;
  for (const auto& p : ode.coeffs()) max_deg = std::max(max_deg, p.degree());

  std::vector<RatPoly> numer_pows{RatPoly::constant(1)}, denom_pows{RatPoly::constant(1)};
  for (int i = 1; i <= max_deg; ++i) {
    numer_pows.push_back(numer_pows.back() * numer);
    denom_pows.push_back(denom_pows.back() * denom);
  }

  std::vector<RatPoly> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const RatPoly& p = ode.coeff(k);
    RatPoly h;
    for (int l = 0; l <= p.degree(); ++l)
      h += numer_pows[static_cast<std::size_t>(l)] * denom_pows[static_cast<std::size_t>(max_deg - l)] *
           p.coeffs()[static_cast<std::size_t>(l)];
    const auto& op = ops[static_cast<std::size_t>(n - k)];
    for (std::size_t i = 0; i < op.size(); ++i) out[static_cast<std::size_t>(n) - i] += h * op[i];
  }
  return make_ode(std::move(out));
}

}  // namespace apparent

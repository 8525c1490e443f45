#include "apparent/frobenius.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "apparent/error.hpp"

namespace apparent {

std::string_view kind_name(PointKind kind) {
  switch (kind) {
    case PointKind::Ordinary: return "Ordinary";
    case PointKind::RegularSingular: return "RegularSingular";
    case PointKind::IrregularSingular: return "IrregularSingular";
    case PointKind::ApparentSingular: return "ApparentSingular";
  }
  return "Unknown";
}

namespace {

// Coefficients shifted to the point, plus valuations there.
struct LocalData {
  std::vector<RatPoly> shifted;
  std::vector<int> orders;  // INT_MAX for zero coefficients
};

LocalData local_data(const LinearODE& ode, const Location& point) {
  if (point.is_infinite()) return local_data(moebius_transform(ode, Moebius::inversion()), Location(BigRat(0)));
  LocalData d;
  for (const auto& p : ode.coeffs()) {
    RatPoly s = p.shifted(point.value());
    d.orders.push_back(s.is_zero() ? INT_MAX : s.order_at(BigRat(0)));
    d.shifted.push_back(std::move(s));
  }
  return d;
}

bool regular(const LocalData& d) {
  const int mu = d.orders[0];
  for (std::size_t k = 1; k < d.orders.size(); ++k)
    if (d.orders[k] != INT_MAX && d.orders[k] + static_cast<int>(k) < mu) return false;
  return true;
}

bool ordinary(const LocalData& d) {
  const int mu = d.orders[0];
  for (std::size_t k = 1; k < d.orders.size(); ++k)
    if (d.orders[k] != INT_MAX && d.orders[k] < mu) return false;
  return true;
}

LocalOperator<BigRat> make_operator(const LocalData& d) {
  std::vector<std::vector<BigRat>> coeffs;
  for (const auto& p : d.shifted) coeffs.push_back(p.coeffs());
  return LocalOperator<BigRat>(std::move(coeffs), d.orders[0]);
}

RatPoly indicial_polynomial(const LocalData& d) {
  const int n = static_cast<int>(d.shifted.size()) - 1;
  const int mu = d.orders[0];
  RatPoly result;
  for (int k = 0; k <= n; ++k) {
    BigRat c = d.shifted[static_cast<std::size_t>(k)].coeff(mu - k);
    if (c == 0) continue;
    RatPoly falling = RatPoly::constant(c);
    for (int i = 0; i < n - k; ++i) falling *= RatPoly{BigRat(-i), BigRat(1)};
    result += falling;
  }
  return result;
}

IndicialResult indicial_from(const LocalData& d) {
  IndicialResult r;
  r.polynomial = indicial_polynomial(d);
  RationalRoots roots = rational_roots(r.polynomial);
  for (const auto& [root, m] : roots.roots)
    for (int i = 0; i < m; ++i) r.exponents.push_back(root);
  r.residual = roots.residual;
  return r;
}

}  // namespace

bool FrobeniusSolution::log_free() const {
  return std::all_of(obstructions.begin(), obstructions.end(), [](const Obstruction& o) { return o.value == 0; });
}

bool is_regular_at(const LinearODE& ode, const Location& point) { return regular(local_data(ode, point)); }

bool is_ordinary_at(const LinearODE& ode, const Location& point) { return ordinary(local_data(ode, point)); }

LocalOperator<BigRat> local_operator(const LinearODE& ode, const Location& point) {
  LocalData d = local_data(ode, point);
  if (!regular(d)) throw Error(ErrorCode::IrregularPoint, "irregular singular point at " + point.to_string());
  return make_operator(d);
}

IndicialResult indicial_exponents(const LinearODE& ode, const Location& point) {
  LocalData d = local_data(ode, point);
  if (!regular(d)) throw Error(ErrorCode::IrregularPoint, "irregular singular point at " + point.to_string());
  return indicial_from(d);
}

FrobeniusSolution frobenius_series(const LinearODE& ode, const BigRat& point, const BigRat& exponent, int terms) {
  if (terms < 1) throw Error(ErrorCode::InvalidArgument, "truncation order must be positive");
  LocalData d = local_data(ode, Location(point));
  if (!regular(d)) throw Error(ErrorCode::IrregularPoint, "irregular singular point at " + to_string(point));
  if (indicial_polynomial(d).eval(exponent) != 0)
    throw Error(ErrorCode::NotAnExponent, to_string(exponent) + " is not a characteristic exponent at " + to_string(point));

  FrobeniusSolution sol;
  sol.point = point;
  sol.exponent = exponent;
  sol.truncation = terms;
  sol.coeffs = make_operator(d).series(exponent, terms, [&](int offset, const BigRat& value) {
    sol.obstructions.push_back({offset, value});
  });
  return sol;
}

std::vector<BigRat> series_residual(const LinearODE& ode, const BigRat& point, const BigRat& exponent,
                                    const std::vector<BigRat>& coeffs) {
  return local_operator(ode, Location(point)).residual(exponent, coeffs);
}

ApparentVerdict is_apparent(const LinearODE& ode, const BigRat& point) {
  LocalData d = local_data(ode, Location(point));
  if (ordinary(d)) throw Error(ErrorCode::NotSingular, to_string(point) + " is an ordinary point");
  if (!regular(d)) throw Error(ErrorCode::IrregularPoint, "irregular singular point at " + to_string(point));

  ApparentVerdict v;
  IndicialResult ind = indicial_from(d);
  v.exponents = ind.exponents;
  if (!ind.all_rational()) {
    v.failed_condition = "non-integer exponent (irrational indicial roots)";
    return v;
  }
  for (const auto& e : ind.exponents) {
    if (!is_integer(e)) {
      v.failed_condition = "non-integer exponent " + to_string(e);
      return v;
    }
    if (e < 0) {
      v.failed_condition = "negative exponent " + to_string(e);
      return v;
    }
  }
  if (std::adjacent_find(ind.exponents.begin(), ind.exponents.end()) != ind.exponents.end()) {
    v.failed_condition = "repeated exponent";
    return v;
  }

  const LocalOperator<BigRat> op = make_operator(d);
  const BigRat gap = ind.exponents.back() - ind.exponents.front();
  const int terms = static_cast<int>(gap.get_num().get_si()) + 5;
  for (const auto& e : ind.exponents) {
    std::optional<std::string> failure;
    op.series(e, terms, [&](int offset, const BigRat& value) {
      if (value != 0 && !failure)
        failure = "nonzero log obstruction at offset " + std::to_string(offset) + " for exponent " + to_string(e);
    });
    if (failure) {
      v.failed_condition = failure;
      return v;
    }
  }
  v.is_apparent = true;
  return v;
}

SingularPoint classify_point(const LinearODE& ode, const Location& point) {
  LocalData d = local_data(ode, point);
  SingularPoint sp{point, PointKind::Ordinary, {}, RatPoly::constant(1)};
  if (ordinary(d)) return sp;
  if (!regular(d)) {
    sp.kind = PointKind::IrregularSingular;
    return sp;
  }
  IndicialResult ind = indicial_from(d);
  sp.exponents = ind.exponents;
  sp.exponent_residual = ind.residual;
  sp.kind = PointKind::RegularSingular;
  if (!point.is_infinite() && is_apparent(ode, point.value()).is_apparent) sp.kind = PointKind::ApparentSingular;
  return sp;
}

}  // namespace apparent

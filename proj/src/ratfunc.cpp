#include "apparent/ratfunc.hpp"

#include <climits>

#include "apparent/error.hpp"

namespace apparent {

RatFunc::RatFunc(RatPoly num) : num_(std::move(num)), den_(RatPoly::constant(1)) {}

RatFunc::RatFunc(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = RatPoly::constant(1);
    return;
  }
  RatPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  const BigRat lead = den_.lead();
  if (lead != 1) {
    const BigRat inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

int RatFunc::order_at(const BigRat& point) const {
  if (num_.is_zero()) return INT_MAX;
  return num_.order_at(point) - den_.order_at(point);
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

RatFunc derivative(const RatFunc& f) {
  const RatPoly& n = f.num();
  const RatPoly& d = f.den();
  return RatFunc(poly_derivative(n) * d - n * poly_derivative(d), d * d);
}

}  // namespace apparent

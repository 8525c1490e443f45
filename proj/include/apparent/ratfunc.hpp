#pragma once

#include "apparent/ratpoly.hpp"

namespace apparent {

/// Reduced quotient num/den over Q with monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(RatPoly::constant(1)) {}
  RatFunc(RatPoly num);  // NOLINT(google-explicit-constructor): polynomials embed
  RatFunc(RatPoly num, RatPoly den);

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_zero() const { return num_.is_zero(); }

  /// Order at a finite point: positive for zeros, negative for poles.
  /// Returns INT_MAX for the zero function.
  int order_at(const BigRat& point) const;

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const { return RatFunc(-num_, den_); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void normalize();
  RatPoly num_;
  RatPoly den_;
};

/// Derivative of a rational function.
RatFunc derivative(const RatFunc& f);

}  // namespace apparent

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apparent/ratpoly.hpp"

namespace apparent {

/// A point of the Riemann sphere: a finite rational or infinity.
class Location {
 public:
  explicit Location(BigRat value) : value_(std::move(value)) {}
  static Location infinity() { return Location(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: finite.
  const BigRat& value() const { return *value_; }
  std::string to_string() const { return value_ ? apparent::to_string(*value_) : "inf"; }

  friend bool operator==(const Location&, const Location&) = default;
  /// Finite points ascending, infinity last.
  friend bool operator<(const Location& a, const Location& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.value_ < *b.value_;
  }

 private:
  Location() = default;
  std::optional<BigRat> value_;
};

/// sum_k P_k(z) w^{(n-k)}(z) = 0, held in canonical form: no common
/// polynomial factor, integer coefficients with unit content, and a positive
/// leading coefficient on P_0.
class LinearODE {
 public:
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RatPoly>& coeffs() const { return coeffs_; }
  const RatPoly& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  const RatPoly& leading() const { return coeffs_.front(); }
  const RatPoly& last() const { return coeffs_.back(); }

  /// deg P_0 is maximal among all P_k and exceeds the order.
  bool follows_degree_convention() const;

  friend bool operator==(const LinearODE& a, const LinearODE& b) { return a.coeffs_ == b.coeffs_; }

 private:
  friend LinearODE make_ode(std::vector<RatPoly> coeffs);
  std::vector<RatPoly> coeffs_;
};

/// Validates and canonicalizes. NotAnODE for fewer than two coefficients,
/// DegenerateLeading for P_0 = 0.
LinearODE make_ode(std::vector<RatPoly> coeffs);

/// z = (a*zeta + b) / (c*zeta + d)
struct Moebius {
  BigRat a{1}, b{0}, c{0}, d{1};

  static Moebius identity() { return {}; }
  static Moebius translation(const BigRat& shift) { return {1, shift, 0, 1}; }
  /// z = 1/zeta
  static Moebius inversion() { return {0, 1, 1, 0}; }

  BigRat determinant() const { return a * d - b * c; }
  /// (this o other)(zeta) = this(other(zeta))
  Moebius compose(const Moebius& other) const;
  /// Image of a z-location under the inverse map (the matching zeta).
  Location preimage(const Location& z) const;
};

/// Rewrites the equation in zeta, clears denominators and canonicalizes.
/// SingularMoebius when ad - bc = 0.
LinearODE moebius_transform(const LinearODE& ode, const Moebius& map);

}  // namespace apparent

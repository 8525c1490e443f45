#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apparent/bigrat.hpp"

namespace apparent {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The highest stored coefficient is always nonzero; zero is the empty list.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<BigRat> coeffs);
  RatPoly(std::initializer_list<BigRat> coeffs);

  static RatPoly constant(const BigRat& c);
  static RatPoly monomial(const BigRat& c, int degree);
  /// The polynomial z.
  static RatPoly identity();
  /// z - root
  static RatPoly linear_factor(const BigRat& root);
  /// lead * prod (z - r_i)
  static RatPoly from_roots(const std::vector<BigRat>& roots, const BigRat& lead = BigRat(1));

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  /// Coefficient of z^i; zero past the degree.
  BigRat coeff(int i) const;
  /// Leading coefficient; zero for the zero polynomial.
  BigRat lead() const;

  BigRat eval(const BigRat& z) const;
  /// Multiplicity of `point` as a root (0 when p(point) != 0). Requires nonzero p.
  int order_at(const BigRat& point) const;

  /// p(z + a)
  RatPoly shifted(const BigRat& a) const;
  RatPoly monic() const;

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const RatPoly& rhs);
  RatPoly& operator*=(const BigRat& rhs);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const BigRat& b) { return a *= b; }
  friend RatPoly operator*(const BigRat& a, RatPoly b) { return b *= a; }
  RatPoly operator-() const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Canonical text form, e.g. "[0, -1, 0, 1]" for z^3 - z.
  std::string to_string() const;
  static RatPoly parse(std::string_view text);

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

RatPoly pow(const RatPoly& p, int e);

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// a / b, throwing InvalidArgument unless b divides a.
RatPoly exact_div(const RatPoly& a, const RatPoly& b);
bool divides(const RatPoly& d, const RatPoly& p);

RatPoly poly_derivative(const RatPoly& p);
/// Monic gcd; BothZero when a = b = 0.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);
/// Monic squarefree part p / gcd(p, p').
RatPoly radical(const RatPoly& p);

struct RootMultiplicity {
  BigRat root;
  int multiplicity;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RationalRoots {
  std::vector<RootMultiplicity> roots;  // ascending
  RatPoly residual;                     // monic, no rational roots
};

/// Exact rational roots with multiplicities. Irrational roots stay in the
/// residual factor.
RationalRoots rational_roots(const RatPoly& p);

/// Scale to a primitive integer polynomial with positive leading coefficient.
RatPoly primitive_part(const RatPoly& p);

}  // namespace apparent

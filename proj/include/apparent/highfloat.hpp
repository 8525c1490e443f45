#pragma once

#include <mpfr.h>

#include <string>

#include "apparent/bigrat.hpp"

namespace apparent {

/// Arbitrary-precision binary float backed by MPFR. Values created without an
/// explicit precision use the calling thread's default (see ScopedPrecision);
/// binary operations produce the larger of the operand precisions.
class HighFloat {
 public:
  static constexpr mpfr_prec_t kMinPrecision = 64;

  static mpfr_prec_t default_precision();

  HighFloat() : HighFloat(0L) {}
  HighFloat(int v) : HighFloat(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  HighFloat(long v);                                       // NOLINT(google-explicit-constructor)
  HighFloat(double v);                                     // NOLINT(google-explicit-constructor)
  HighFloat(const BigRat& v, mpfr_prec_t precision);
  explicit HighFloat(const BigRat& v) : HighFloat(v, default_precision()) {}

  HighFloat(const HighFloat& other);
  HighFloat(HighFloat&& other) noexcept;
  HighFloat& operator=(const HighFloat& other);
  HighFloat& operator=(HighFloat&& other) noexcept;
  ~HighFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// floor(log2 |x|) + 1; meaningless for zero.
  long exponent2() const { return mpfr_get_exp(v_); }
  std::string to_string(int digits = 20) const;

  HighFloat& operator+=(const HighFloat& rhs);
  HighFloat& operator-=(const HighFloat& rhs);
  HighFloat& operator*=(const HighFloat& rhs);
  HighFloat& operator/=(const HighFloat& rhs);

  friend HighFloat operator+(const HighFloat& a, const HighFloat& b);
  friend HighFloat operator-(const HighFloat& a, const HighFloat& b);
  friend HighFloat operator*(const HighFloat& a, const HighFloat& b);
  friend HighFloat operator/(const HighFloat& a, const HighFloat& b);
  HighFloat operator-() const;

  friend bool operator==(const HighFloat& a, const HighFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const HighFloat& a, const HighFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const HighFloat& a, const HighFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const HighFloat& a, const HighFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const HighFloat& a, const HighFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  friend HighFloat abs(const HighFloat& x);

 private:
  explicit HighFloat(mpfr_prec_t precision, int /*tag*/);
  mpfr_t v_;
};

/// Sets the calling thread's default HighFloat precision for its lifetime.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(mpfr_prec_t bits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  mpfr_prec_t saved_;
};

}  // namespace apparent

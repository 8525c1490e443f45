#include "apparent/highfloat.hpp"

#include <algorithm>
#include <memory>

namespace apparent {

namespace {
thread_local mpfr_prec_t t_default_precision = 256;
}

mpfr_prec_t HighFloat::default_precision() { return t_default_precision; }

HighFloat::HighFloat(mpfr_prec_t precision, int) { mpfr_init2(v_, std::max(precision, kMinPrecision)); }

HighFloat::HighFloat(long v) : HighFloat(default_precision(), 0) { mpfr_set_si(v_, v, MPFR_RNDN); }

HighFloat::HighFloat(double v) : HighFloat(default_precision(), 0) { mpfr_set_d(v_, v, MPFR_RNDN); }

HighFloat::HighFloat(const BigRat& v, mpfr_prec_t precision) : HighFloat(precision, 0) {
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

HighFloat::HighFloat(const HighFloat& other) : HighFloat(other.precision(), 0) { mpfr_set(v_, other.v_, MPFR_RNDN); }

HighFloat::HighFloat(HighFloat&& other) noexcept : HighFloat(other.precision(), 0) { mpfr_swap(v_, other.v_); }

HighFloat& HighFloat::operator=(const HighFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

HighFloat& HighFloat::operator=(HighFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

HighFloat::~HighFloat() { mpfr_clear(v_); }

std::string HighFloat::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::unique_ptr<char, void (*)(char*)> guard(buf, [](char* p) { mpfr_free_str(p); });
  return std::string(buf);
}

namespace {
mpfr_prec_t joint(const HighFloat& a, const HighFloat& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

HighFloat& HighFloat::operator+=(const HighFloat& rhs) { return *this = *this + rhs; }
HighFloat& HighFloat::operator-=(const HighFloat& rhs) { return *this = *this - rhs; }
HighFloat& HighFloat::operator*=(const HighFloat& rhs) { return *this = *this * rhs; }
HighFloat& HighFloat::operator/=(const HighFloat& rhs) { return *this = *this / rhs; }

HighFloat operator+(const HighFloat& a, const HighFloat& b) {
  HighFloat r(joint(a, b), 0);
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HighFloat operator-(const HighFloat& a, const HighFloat& b) {
  HighFloat r(joint(a, b), 0);
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HighFloat operator*(const HighFloat& a, const HighFloat& b) {
  HighFloat r(joint(a, b), 0);
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HighFloat operator/(const HighFloat& a, const HighFloat& b) {
  HighFloat r(joint(a, b), 0);
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HighFloat HighFloat::operator-() const {
  HighFloat r(precision(), 0);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

HighFloat abs(const HighFloat& x) {
  HighFloat r(x.precision(), 0);
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

ScopedPrecision::ScopedPrecision(mpfr_prec_t bits) : saved_(t_default_precision) {
  t_default_precision = std::max(bits, HighFloat::kMinPrecision);
}

ScopedPrecision::~ScopedPrecision() { t_default_precision = saved_; }

}  // namespace apparent

#include "apparent/bigrat.hpp"

#include <cctype>
#include <cmath>

#include "apparent/error.hpp"

namespace apparent {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw Error(ErrorCode::ParseError, "invalid rational '" + std::string(whole) + "'");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

BigInt pow10(long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

BigRat parse_decimal(std::string_view text) {
  std::string_view s = text;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    BigInt ev = parse_integer(s.substr(e + 1), text);
    if (!ev.fits_slong_p() || std::abs(ev.get_si()) > 100000)
      throw Error(ErrorCode::ParseError, "exponent out of range in '" + std::string(text) + "'");
    exponent = ev.get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  auto dot = s.find('.');
  if (dot == std::string_view::npos) {
    digits = std::string(s);
  } else {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty())
      throw Error(ErrorCode::ParseError, "invalid rational '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  }
  if (!all_digits(digits))
    throw Error(ErrorCode::ParseError, "invalid rational '" + std::string(text) + "'");
  BigRat v{BigInt(digits, 10)};
  if (exponent >= 0)
    v *= BigRat(pow10(exponent));
  else
    v /= BigRat(pow10(-exponent));
  if (negative) v = -v;
  return v;
}

}  // namespace

BigRat parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    BigRat r(num, den);
    r.canonicalize();
    return r;
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
  return BigRat(parse_integer(text, text));
}

std::string to_string(const BigRat& value) { return value.get_str(10); }

bool is_integer(const BigRat& value) { return value.get_den() == 1; }

BigRat from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  BigRat r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

BigRat ratio(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace apparent

#include "apparent/ratpoly.hpp"

#include <algorithm>
#include <sstream>

#include "apparent/error.hpp"

namespace apparent {

RatPoly::RatPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<BigRat> coeffs) : coeffs_(coeffs) { trim(); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::constant(const BigRat& c) { return RatPoly(std::vector<BigRat>{c}); }

RatPoly RatPoly::monomial(const BigRat& c, int degree) {
  std::vector<BigRat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::identity() { return RatPoly{BigRat(0), BigRat(1)}; }

RatPoly RatPoly::linear_factor(const BigRat& root) { return RatPoly{BigRat(-root), BigRat(1)}; }

RatPoly RatPoly::from_roots(const std::vector<BigRat>& roots, const BigRat& lead) {
  RatPoly p = constant(lead);
  for (const auto& r : roots) p *= linear_factor(r);
  return p;
}

BigRat RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return BigRat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

BigRat RatPoly::lead() const { return is_zero() ? BigRat(0) : coeffs_.back(); }

BigRat RatPoly::eval(const BigRat& z) const {
  BigRat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

int RatPoly::order_at(const BigRat& point) const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "order_at: zero polynomial");
  int order = 0;
  std::vector<BigRat> c = coeffs_;
  while (true) {
    // synthetic division by (z - point)
    std::vector<BigRat> q(c.size() - 1);
    BigRat carry(0);
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = carry * point + c[i];
      q[i - 1] = carry;
    }
    BigRat rem = carry * point + c[0];
    if (rem != 0 || q.empty()) return order;
    ++order;
    c = std::move(q);
  }
}

RatPoly RatPoly::shifted(const BigRat& a) const {
  // Horner in (z + a)
  RatPoly acc;
  const RatPoly x_plus_a{a, BigRat(1)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x_plus_a;
    acc += constant(*it);
  }
  return acc;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  RatPoly r = *this;
  const BigRat inv = 1 / lead();
  return r *= inv;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRat> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const BigRat& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string RatPoly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << apparent::to_string(coeffs_[i]);
  }
  os << ']';
  return os.str();
}

RatPoly RatPoly::parse(std::string_view text) {
  auto l = text.find('[');
  auto r = text.rfind(']');
  if (l == std::string_view::npos || r == std::string_view::npos || r < l)
    throw Error(ErrorCode::ParseError, "polynomial must be written as [c0, c1, ...]");
  std::string_view body = text.substr(l + 1, r - l - 1);
  std::vector<BigRat> coeffs;
  bool blank = body.find_first_not_of(" \t\n\r") == std::string_view::npos;
  if (!blank) {
    std::size_t start = 0;
    while (true) {
      auto comma = body.find(',', start);
      coeffs.push_back(parse_rational(body.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return RatPoly(std::move(coeffs));
}

RatPoly pow(const RatPoly& p, int e) {
  RatPoly r = RatPoly::constant(1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<BigRat> rem = a.coeffs();
  std::vector<BigRat> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const BigRat inv_lead = 1 / b.lead();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    BigRat f = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quo[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw Error(ErrorCode::InvalidArgument, "exact_div: " + b.to_string() + " does not divide " + a.to_string());
  return q;
}

bool divides(const RatPoly& d, const RatPoly& p) { return divmod(p, d).second.is_zero(); }

RatPoly poly_derivative(const RatPoly& p) {
  if (p.degree() <= 0) return RatPoly();
  std::vector<BigRat> d(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) d[static_cast<std::size_t>(i - 1)] = p.coeffs()[static_cast<std::size_t>(i)] * i;
  return RatPoly(std::move(d));
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd of two zero polynomials");
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    // keep the remainder sequence monic to slow coefficient growth
    y = r.monic();
  }
  return x.monic();
}

RatPoly radical(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "radical of the zero polynomial");
  if (p.is_constant()) return RatPoly::constant(1);
  return exact_div(p, poly_gcd(p, poly_derivative(p))).monic();
}

RatPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return p;
  BigInt den_lcm(1), num_gcd(0);
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : p.coeffs()) {
    BigInt n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  BigRat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.lead() < 0) scale = -scale;
  return p * scale;
}

namespace {

int sign(const BigRat& v) { return sgn(v); }

class SturmChain {
 public:
  explicit SturmChain(const RatPoly& f) {
    chain_.push_back(f);
    chain_.push_back(poly_derivative(f));
    while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
      RatPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      // rescale by a positive factor only: signs are all that matter
      RatPoly scaled = primitive_part(r);
      if (sgn(scaled.lead()) != sgn(r.lead())) scaled = -scaled;
      chain_.push_back(-scaled);
    }
  }

  int variations(const BigRat& x) const {
    int count = 0, last = 0;
    for (const auto& p : chain_) {
      int s = sign(p.eval(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

 private:
  std::vector<RatPoly> chain_;
};

// Searches a squarefree polynomial for one rational root; returns false when
// every real root it isolates is irrational.
bool find_one_rational_root(const RatPoly& f, BigRat& out) {
  const RatPoly g = f.monic();
  BigRat bound(0);
  for (int i = 0; i < g.degree(); ++i) bound = std::max(bound, BigRat(abs(g.coeffs()[static_cast<std::size_t>(i)])));
  bound += 1;
  const BigInt lead_int = primitive_part(g).lead().get_num();
  const BigRat width_limit(1, lead_int);

  SturmChain sturm(g);
  std::vector<std::pair<BigRat, BigRat>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int count = sturm.variations(lo) - sturm.variations(hi);
    if (count == 0) continue;
    if (g.eval(hi) == 0) {
      out = hi;
      return true;
    }
    if (count > 1) {
      BigRat mid = (lo + hi) / 2;
      if (g.eval(mid) == 0) {
        out = mid;
        return true;
      }
      stack.emplace_back(lo, mid);
      stack.emplace_back(mid, hi);
      continue;
    }
    // exactly one simple root in (lo, hi)
    const int s_lo = sign(g.eval(lo));
    while (hi - lo >= width_limit) {
      BigRat mid = (lo + hi) / 2;
      int s = sign(g.eval(mid));
      if (s == 0) {
        out = mid;
        return true;
      }
      if (s == s_lo)
        lo = mid;
      else
        hi = mid;
    }
    // a rational root r satisfies lead_int * r in Z; at most one such point fits
    BigInt k;
    BigRat scaled = hi * BigRat(lead_int);
    mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    BigRat candidate(k, lead_int);
    candidate.canonicalize();
    if (candidate > lo && g.eval(candidate) == 0) {
      out = candidate;
      return true;
    }
  }
  return false;
}

}  // namespace

RationalRoots rational_roots(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "rational_roots of the zero polynomial");
  RationalRoots result;
  RatPoly work = radical(p);
  RatPoly residual = p.monic();
  BigRat r;
  while (work.degree() >= 1 && find_one_rational_root(work, r)) {
    const int m = p.order_at(r);
    result.roots.push_back({r, m});
    work = exact_div(work, RatPoly::linear_factor(r));
    residual = exact_div(residual, pow(RatPoly::linear_factor(r), m));
  }
  std::sort(result.roots.begin(), result.roots.end(),
            [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.root < b.root; });
  result.residual = residual;
  return result;
}

}  // namespace apparent

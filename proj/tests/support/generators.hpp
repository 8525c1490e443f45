#pragma once

// Seeded random instances for property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "apparent/error.hpp"
#include "apparent/heun.hpp"

namespace apparent::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  BigRat rational(long max_num = 9, long max_den = 7) {
    BigRat q(integer(-max_num, max_num), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  BigRat nonzero(long max_num = 9, long max_den = 7) {
    for (;;) {
      BigRat q = rational(max_num, max_den);
      if (q != 0) return q;
    }
  }

  /// Rational that is not an integer.
  BigRat fractional(long max_num = 9, long max_den = 7) {
    for (;;) {
      BigRat q = rational(max_num, std::max(max_den, 2L));
      if (!is_integer(q)) return q;
    }
  }

  /// Rational outside `avoid`.
  BigRat avoiding(const std::vector<BigRat>& avoid, long max_num = 9, long max_den = 7) {
    for (;;) {
      BigRat q = rational(max_num, max_den);
      if (std::find(avoid.begin(), avoid.end(), q) == avoid.end()) return q;
    }
  }

  std::vector<BigRat> distinct(std::size_t n, std::vector<BigRat> avoid = {}) {
    std::vector<BigRat> out;
    while (out.size() < n) {
      BigRat q = avoiding(avoid);
      out.push_back(q);
      avoid.push_back(q);
    }
    return out;
  }

  RatPoly poly(int degree) {
    std::vector<BigRat> c;
    for (int i = 0; i < degree; ++i) c.push_back(rational());
    c.push_back(nonzero());
    return RatPoly(std::move(c));
  }

  /// General Heun data with non-integer theta_k, alpha theta_inf != 0 and q
  /// away from the finite singular points.
  HeunParams heun() {
    for (;;) {
      HeunParams p;
      p.t = avoiding({BigRat(0), BigRat(1)});
      for (auto& th : p.theta) th = fractional();
      p.theta_inf = fractional();
      p.alpha = 2 - p.theta[0] - p.theta[1] - p.theta[2] - p.theta_inf;
      if (p.alpha == 0 || is_integer(p.alpha - p.theta_inf)) continue;
      p.q = avoiding({BigRat(0), BigRat(1), p.t});
      return p;
    }
  }

  /// m finite points; `q_pattern` lists multiplicities of the accessory zeros
  /// (they must add up to m - 2). Zeros avoid the singular points.
  MultiHeunParams multi_heun(std::size_t m, const std::vector<int>& q_pattern) {
    for (;;) {
      MultiHeunParams p;
      p.z = distinct(m);
      BigRat sum = 0;
      for (std::size_t k = 0; k < m; ++k) {
        p.theta.push_back(fractional());
        sum += p.theta.back();
      }
      p.theta_inf = fractional();
      p.alpha = BigRat(static_cast<long>(m) - 1) - sum - p.theta_inf;
      if (p.alpha == 0 || is_integer(p.alpha - p.theta_inf)) continue;
      auto roots = distinct(q_pattern.size(), p.z);
      for (std::size_t i = 0; i < q_pattern.size(); ++i)
        for (int r = 0; r < q_pattern[i]; ++r) p.q.push_back(roots[i]);
      return p;
    }
  }

  ThirdOrderParams third_order() {
    ThirdOrderParams p;
    p.t = avoiding({BigRat(0), BigRat(1)});
    p.alpha = fractional();
    p.beta = fractional();
    p.theta2 = fractional();
    p.theta3 = fractional();
    p.kappa = nonzero();
    p.q = avoiding({BigRat(0), BigRat(1), p.t});
    return p;
  }

  struct BackwardThirdOrder {
    ThirdOrderParams params;
    BigRat a, b, c;  // exponents at infinity
  };

  /// Chooses the exponents at infinity first, then solves for beta, theta2 +
  /// theta3 and kappa so that the cubic at infinity has exactly those roots.
  BackwardThirdOrder third_order_backward() {
    for (;;) {
      BackwardThirdOrder r;
      r.a = nonzero();
      r.b = nonzero();
      r.c = nonzero();
      const BigRat e1 = r.a + r.b + r.c;
      const BigRat e2 = r.a * r.b + r.b * r.c + r.a * r.c;
      auto& p = r.params;
      p.alpha = fractional();
      if (p.alpha == 1) continue;
      p.beta = (e2 + e1 + p.alpha) / (p.alpha - 1);
      const BigRat theta_sum = -e1 - p.alpha - p.beta;
      p.theta2 = fractional();
      p.theta3 = theta_sum - p.theta2;
      p.kappa = r.a * r.b * r.c;
      p.t = avoiding({BigRat(0), BigRat(1)});
      p.q = avoiding({BigRat(0), BigRat(1), p.t});
      if (p.beta == 1 || p.alpha == p.beta) continue;
      return r;
    }
  }

  /// Non-reduced confluent class: P_0 of degree 1 or 2, P_1 of degree 2 and
  /// P_2 = alpha (z - q) with q not a root of P_0.
  ConfluentHeunParams confluent() {
    for (;;) {
      ConfluentHeunParams p;
      auto roots = distinct(static_cast<std::size_t>(integer(1, 2)));
      p.p0 = RatPoly::from_roots(roots, nonzero());
      p.p1 = poly(2);
      p.alpha = nonzero();
      p.q = avoiding(roots);
      try {
        confluent_heun(p);
      } catch (const Error&) {
        continue;
      }
      return p;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace apparent::testing

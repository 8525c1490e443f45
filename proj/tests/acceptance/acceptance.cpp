// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "apparent/error.hpp"
#include "apparent/heun.hpp"
#include "apparent/polymer.hpp"
#include "apparent/ratfunc.hpp"
#include "apparent/singularities.hpp"
#include "apparent/transform.hpp"
#include "support/fd_oracle.hpp"
#include "support/generators.hpp"

using namespace apparent;
using apparent::testing::Gen;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Verdict&)>& body) {
  Verdict v;
  try {
    body(v);
  } catch (const Error& e) {
    v.ok = false;
    v.detail << "error " << code_name(e.code()) << ": " << e.what();
  } catch (const std::exception& e) {
    v.ok = false;
    v.detail << "exception: " << e.what();
  }
  if (!v.ok) ++failures;
  std::printf("%s [%d] %s", v.ok ? "PASS" : "FAIL", id, title.c_str());
  const std::string d = v.detail.str();
  if (!d.empty()) std::printf(" -- %s", d.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

RatFunc c(const BigRat& x) { return RatFunc(RatPoly::constant(x)); }
RatFunc over(const BigRat& num, const RatPoly& den) { return RatFunc(RatPoly::constant(num), den); }
RatPoly lin(const BigRat& a) { return RatPoly::linear_factor(a); }

// Third-order deformed equation written as u''' + D1 u'' + D2 u' + D3 u = 0
// with each Dk a rational function built term by term, then cleared.
LinearODE third_order_deformed_by_formula(const ThirdOrderParams& p) {
  const RatPoly z = RatPoly::monomial(1, 1);
  const RatPoly z2 = z * z;
  const RatFunc sigma = over(1, lin(1)) + over(1, lin(p.t)) - over(1, lin(p.q));
  const RatFunc d1 = over(5 - p.alpha - p.beta, z) - over(p.theta2 - 1, lin(1)) - over(p.theta3 - 1, lin(p.t)) -
                     over(1, lin(p.q));
  const RatFunc d2 = over((2 - p.alpha) * (2 - p.beta), z2) + over(3 - p.alpha - p.beta, z) * sigma -
                     over(2 * p.theta2, z * lin(1)) - over(2 * p.theta3, z * lin(p.t)) -
                     over(p.theta2 + p.theta3, lin(1) * lin(p.t)) + over(p.theta2, lin(p.q) * lin(1)) +
                     over(p.theta3, lin(p.q) * lin(p.t));
  const RatFunc d3 = over((1 - p.alpha) * (1 - p.beta), z2) * sigma +
                     RatFunc(lin(p.q) * p.kappa, z2 * lin(1) * lin(p.t));
  const RatPoly clear = z2 * lin(1) * lin(p.t) * lin(p.q);
  std::vector<RatPoly> coeffs;
  for (const RatFunc& f : {c(1), d1, d2, d3}) {
    RatFunc g = f * RatFunc(clear);
    if (!g.is_polynomial()) throw std::runtime_error("clearing left a denominator");
    coeffs.push_back(g.num() * BigRat(1 / g.den().lead()));
  }
  return make_ode(std::move(coeffs));
}

LinearODE cleared_heun_derivative(const LinearODE& e, const BigRat& q) {
  const RatPoly l = lin(q);
  const RatPoly& p0 = e.coeff(0);
  const RatPoly& p1 = e.coeff(1);
  const RatPoly& p2 = e.coeff(2);
  return make_ode({l * p0, l * (p1 + poly_derivative(p0)) - p0, l * (p2 + poly_derivative(p1)) - p1});
}

std::vector<BigRat> finite_singular(const LinearODE& e) {
  std::vector<BigRat> out;
  for (const auto& sp : singular_points(e).points)
    if (!sp.location.is_infinite()) out.push_back(sp.location.value());
  return out;
}

MultiHeunParams fixed_multi(int m, const std::vector<BigRat>& q) {
  MultiHeunParams p;
  BigRat sum = 0;
  for (int j = 0; j < m; ++j) {
    p.z.push_back(j);
    p.theta.push_back(BigRat(1, j + 2));
    sum += p.theta.back();
  }
  p.theta_inf = BigRat(1, 13);
  p.alpha = BigRat(m - 1) - sum - p.theta_inf;
  p.q = q;
  return p;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  report(1, "deform of the general Heun equation equals the cleared derivative formula (50 instances)",
         [](Verdict& v) {
           Gen gen(1);
           for (int i = 0; i < 50; ++i) {
             HeunParams p = gen.heun();
             LinearODE e = general_heun(p);
             v.require(deform(e).ode == cleared_heun_derivative(e, p.q), "mismatch at instance " + std::to_string(i));
           }
         });

  report(2, "deform of the third-order example equals the term-by-term derivative equation (20 instances)",
         [](Verdict& v) {
           Gen gen(2);
           for (int i = 0; i < 20; ++i) {
             ThirdOrderParams p = gen.third_order();
             v.require(deform(third_order_example(p)).ode == third_order_deformed_by_formula(p),
                       "mismatch at instance " + std::to_string(i));
           }
         });

  report(3, "deformation creates m - 2 apparent points with gaps 2, and gaps 3, 4, 5 for repeated roots",
         [](Verdict& v) {
           Gen gen(3);
           for (std::size_t m : {4u, 5u}) {
             for (int i = 0; i < 10; ++i) {
               MultiHeunParams p = gen.multi_heun(m, std::vector<int>(m - 2, 1));
               DeformResult d = deform(multi_heun(p));
               int apparent = 0;
               for (const auto& sp : singular_points(d.ode).points)
                 if (sp.kind == PointKind::ApparentSingular) ++apparent;
               v.require(apparent == static_cast<int>(m - 2), "wrong apparent count for m = " + std::to_string(m));
               for (const BigRat& q : p.q)
                 v.require(is_apparent(d.ode, q).exponents == std::vector<BigRat>{0, 2}, "gap at a simple root");
             }
           }
           for (int mult = 2; mult <= 4; ++mult) {
             MultiHeunParams p = fixed_multi(mult + 2, std::vector<BigRat>(static_cast<std::size_t>(mult), BigRat(-5, 2)));
             ApparentVerdict a = is_apparent(deform(multi_heun(p)).ode, BigRat(-5, 2));
             v.require(a.is_apparent && a.exponents == std::vector<BigRat>{0, mult + 1},
                       "gap for multiplicity " + std::to_string(mult));
           }
         });

  report(4, "undeform inverts deform on 100 general, multi and confluent Heun instances", [](Verdict& v) {
    Gen gen(4);
    int n = 0;
    auto check = [&](const LinearODE& e) {
      v.require(undeform(deform(e).ode).ode == e, "round trip failed at instance " + std::to_string(n));
      ++n;
    };
    for (int i = 0; i < 40; ++i) check(general_heun(gen.heun()));
    for (int i = 0; i < 15; ++i) check(multi_heun(gen.multi_heun(4, {1, 1})));
    for (int i = 0; i < 10; ++i) check(multi_heun(gen.multi_heun(5, {1, 1, 1})));
    for (int i = 0; i < 5; ++i) check(multi_heun(gen.multi_heun(4, {2})));
    for (int i = 0; i < 30; ++i) check(confluent_heun(gen.confluent()));
    v.require(n == 100, "instance count");
  });

  report(5, "exponent sums equal 2 for general Heun and m - 1 for multi Heun", [](Verdict& v) {
    Gen gen(5);
    for (int i = 0; i < 50; ++i)
      v.require(fuchs_check(general_heun(gen.heun())).exponent_sum == 2, "general Heun sum");
    for (std::size_t m : {3u, 4u, 5u, 6u})
      for (int i = 0; i < 10; ++i) {
        MultiHeunParams p = gen.multi_heun(m, std::vector<int>(m - 2, 1));
        v.require(fuchs_check(multi_heun(p)).exponent_sum == BigRat(static_cast<long>(m) - 1),
                  "multi Heun sum for m = " + std::to_string(m));
      }
  });

  report(6, "symmetric functions of the exponents at infinity of the third-order example (50 instances)",
         [](Verdict& v) {
           Gen gen(6);
           for (int i = 0; i < 50; ++i) {
             auto [p, a, b, c3] = gen.third_order_backward();
             IndicialResult r = indicial_exponents(third_order_example(p), Location::infinity());
             if (!r.all_rational() || r.exponents.size() != 3) {
               v.require(false, "exponents at infinity not rational at instance " + std::to_string(i));
               continue;
             }
             const auto& x = r.exponents;
             v.require(x[0] + x[1] + x[2] == -(p.alpha + p.beta + p.theta2 + p.theta3), "first symmetric function");
             v.require(x[0] * x[1] + x[1] * x[2] + x[0] * x[2] == p.alpha * p.beta + p.theta2 + p.theta3,
                       "second symmetric function");
             v.require(x[0] * x[1] * x[2] == p.kappa, "third symmetric function");
           }
         });

  report(7, "derivative of a degree-40 series solution satisfies the deformed equation through degree 39",
         [](Verdict& v) {
           Gen gen(7);
           for (int i = 0; i < 20; ++i) {
             HeunParams p = gen.heun();
             LinearODE e = general_heun(p);
             LinearODE d = deform(e).ode;
             const BigRat x = gen.avoiding({0, 1, p.t, p.q});
             FrobeniusSolution w = frobenius_series(e, x, 0, 40);
             std::vector<BigRat> u;
             for (std::size_t j = 1; j < w.coeffs.size(); ++j) u.push_back(w.coeffs[j] * BigRat(static_cast<long>(j)));
             auto r = series_residual(d, x, 0, u);
             for (std::size_t j = 0; j <= 39; ++j) v.require(r.at(j) == 0, "residual at index " + std::to_string(j));
           }
         });

  report(8, "polymer: direct deformed equation, apparent location and gap 2", [](Verdict& v) {
    for (int b = 1; b <= 6; ++b)
      for (int w = 1; w <= 5; ++w)
        for (BigRat nu : {BigRat(1, 2), BigRat(3), BigRat(17, 5), BigRat(40)}) {
          PolymerParams p{BigRat(b), ratio(w, 6)};
          const BigRat k = p.kappa();
          if (nu - k - 2 * p.b * k == 0) continue;
          LinearODE e = polymer_ode(p, nu);
          LinearODE direct = polymer_deformed(p, nu);
          v.require(direct == deform(e).ode, "deformed equation mismatch");
          const BigRat q = apparent_location(p.b, k, nu);
          v.require(e.coeff(2).degree() == 1 && e.coeff(2).eval(q) == 0, "q is not the root of the w coefficient");
          if (e.coeff(0).eval(q) == 0) continue;
          ApparentVerdict a = is_apparent(direct, q);
          v.require(a.is_apparent && a.exponents == std::vector<BigRat>{0, 2}, "apparent point at q");
        }
  });

  report(9, "polymer b = 100: shooting agrees with finite differences to 4 digits, T_rel increases, under 60 s",
         [](Verdict& v) {
           const auto t0 = std::chrono::steady_clock::now();
           double last_t = 0;
           std::ostringstream values;
           for (long w : {25, 35, 45}) {
             const double W = w / 100.0;
             PolymerParams p{BigRat(100), ratio(w, 100)};
             SpectralResult r = solve_spectrum(p);
             const double nu1 = r.eigenvalues.at(0);
             const double fd = apparent::testing::fd_first_positive_eigenvalue_extrapolated(100, W, 8000);
             const double rel = std::abs(nu1 - fd) / fd;
             values << " W=" << W << " nu1=" << nu1 << " fd=" << fd << " T_rel=" << *r.T_rel;
             v.require(rel < 5e-5, "disagreement at W = " + std::to_string(W));
             v.require(*r.T_rel > last_t, "T_rel not increasing at W = " + std::to_string(W));
             last_t = *r.T_rel;
           }
           const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
           v.require(secs <= 60.0, "took " + std::to_string(secs) + " s");
           if (v.ok) v.detail << values.str().substr(1) << " (" << static_cast<int>(secs + 0.5) << " s)";
         });

  report(10, "negative controls: constant last coefficient and q at a root of the leading coefficient",
         [](Verdict& v) {
           Gen gen(10);
           LinearODE constant = make_ode({RatPoly::from_roots({0, 1}), RatPoly::parse("[1, 2]"), RatPoly::constant(3)});
           DeformResult d = deform(constant);
           v.require(d.new_apparent.empty(), "constant coefficient produced an apparent point");
           v.require(finite_singular(d.ode) == finite_singular(constant), "constant coefficient changed the singular set");
           for (int i = 0; i < 20; ++i) {
             HeunParams p = gen.heun();
             p.q = std::vector<BigRat>{0, 1, p.t}[static_cast<std::size_t>(i % 3)];
             LinearODE e = general_heun(p);
             DeformResult dq = deform(e);
             v.require(dq.new_apparent.empty(), "q at a singular point produced an apparent point");
             v.require(finite_singular(dq.ode) == finite_singular(e), "q at a singular point changed the singular set");
           }
         });

  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d failure(s), %.1f s\n", failures, total);
  return failures == 0 ? 0 : 1;
}

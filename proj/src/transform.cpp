#include "apparent/transform.hpp"

#include <algorithm>

#include "apparent/error.hpp"
#include "apparent/frobenius.hpp"
#include "linalg.hpp"

namespace apparent {

namespace {

// [R P_0, R (P_1 + P_0') - S P_0, ..., R (P_n + P_{n-1}') - S P_{n-1}]
std::vector<RatPoly> deformed_coefficients(const std::vector<RatPoly>& p, const RatPoly& r, const RatPoly& s) {
  std::vector<RatPoly> out(p.size());
  out[0] = r * p[0];
  for (std::size_t j = 1; j < p.size(); ++j) out[j] = r * (p[j] + poly_derivative(p[j - 1])) - s * p[j - 1];
  return out;
}

}  // namespace

DeformResult deform(const LinearODE& ode) {
  const RatPoly& pn = ode.last();
  if (pn.is_zero()) throw Error(ErrorCode::AlreadyIntegrated, "the w term is absent; nothing to eliminate");
  const RatPoly r = radical(pn);
  const RatPoly s = exact_div(r * poly_derivative(pn), pn);

  DeformResult res{make_ode(deformed_coefficients(ode.coeffs(), r, s)), {}, r, RatPoly::constant(1)};
  RationalRoots roots = rational_roots(pn);
  res.unresolved_factor = roots.residual;
  for (const auto& [root, m] : roots.roots) {
    if (ode.leading().eval(root) == 0) continue;
    std::optional<int> gap;
    if (ode.order() == 2) gap = m + 1;
    res.new_apparent.push_back({root, m, gap});
  }
  return res;
}

std::vector<DeformResult> deform_iter(const LinearODE& ode, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "deform_iter needs k >= 1");
  std::vector<DeformResult> chain;
  const LinearODE* current = &ode;
  for (int stage = 1; stage <= k; ++stage) {
    try {
      chain.push_back(deform(*current));
    } catch (const Error& e) {
      throw Error(e.code(), "stage " + std::to_string(stage) + ": " + e.what());
    }
    current = &chain.back().ode;
  }
  return chain;
}

UndeformResult undeform(const LinearODE& ode, std::optional<std::vector<UndeformTarget>> targets,
                        const UndeformOptions& options) {
  const int n = ode.order();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "undeform needs an equation of order >= 2");

  if (!targets) {
    targets.emplace();
    for (const auto& r : rational_roots(ode.leading()).roots)
      if (classify_point(ode, Location(r.root)).kind == PointKind::ApparentSingular)
        targets->push_back({r.root, std::nullopt});
  }
  if (targets->empty()) throw Error(ErrorCode::NothingToRemove, "no apparent singular points to remove");

  RatPoly clearing = RatPoly::constant(1);
  RatPoly last_shape = RatPoly::constant(1);
  std::vector<BigRat> removed;
  for (const auto& t : *targets) {
    int m = 0;
    if (t.multiplicity) {
      m = *t.multiplicity;
      if (m < 1) throw Error(ErrorCode::InvalidArgument, "multiplicity must be positive");
    } else if (n == 2) {
      ApparentVerdict v = is_apparent(ode, t.location);
      if (v.exponents.size() != 2 || v.exponents[0] != 0 || !is_integer(v.exponents[1]) || v.exponents[1] < 2)
        throw Error(ErrorCode::NotRemovable,
                    "exponents at " + to_string(t.location) + " are not of the form {0, g} with integer g >= 2");
      m = static_cast<int>(v.exponents[1].get_num().get_si()) - 1;
    } else {
      throw Error(ErrorCode::MultiplicityRequired,
                  "order " + std::to_string(n) + ": supply the multiplicity for " + to_string(t.location));
    }
    clearing *= RatPoly::linear_factor(t.location);
    last_shape *= pow(RatPoly::linear_factor(t.location), m);
    removed.push_back(t.location);
  }
  const RatPoly s = exact_div(clearing * poly_derivative(last_shape), last_shape);
  const int dr = clearing.degree();
  const auto& q = ode.coeffs();

  for (int slack = 0; slack <= options.max_slack; ++slack) {
    // degree bounds for P_0..P_{n-1}: R P_k = Q_k - (R P_{k-1}' - S P_{k-1})
    std::vector<int> bound(static_cast<std::size_t>(n));
    bound[0] = q[0].degree() - dr;
    if (bound[0] < 0) break;
    for (int k = 1; k < n; ++k) {
      int from_q = q[static_cast<std::size_t>(k)].is_zero() ? -1 : q[static_cast<std::size_t>(k)].degree() - dr;
      bound[static_cast<std::size_t>(k)] = std::max(from_q, bound[static_cast<std::size_t>(k) - 1] - 1);
    }
    std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k < n; ++k) {
      int b = bound[static_cast<std::size_t>(k)] + slack;
      offset[static_cast<std::size_t>(k) + 1] = offset[static_cast<std::size_t>(k)] + static_cast<std::size_t>(std::max(b + 1, 0));
    }
    const std::size_t c_index = offset[static_cast<std::size_t>(n)];
    const std::size_t lambda_index = c_index + 1;
    const std::size_t cols = lambda_index + 1;

    auto antecedent_of = [&](const std::vector<BigRat>& x) {
      std::vector<RatPoly> p(static_cast<std::size_t>(n) + 1);
      for (int k = 0; k < n; ++k) {
        std::vector<BigRat> c(x.begin() + static_cast<long>(offset[static_cast<std::size_t>(k)]),
                              x.begin() + static_cast<long>(offset[static_cast<std::size_t>(k) + 1]));
        p[static_cast<std::size_t>(k)] = RatPoly(std::move(c));
      }
      p[static_cast<std::size_t>(n)] = last_shape * x[c_index];
      return p;
    };

    // column j: image of unit vector j under  x -> deform(ansatz(x)) - lambda Q
    std::vector<std::vector<RatPoly>> images(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      if (j == lambda_index) {
        for (const auto& qk : q) images[j].push_back(-qk);
        continue;
      }
      std::vector<BigRat> unit(cols, BigRat(0));
      unit[j] = 1;
      images[j] = deformed_coefficients(antecedent_of(unit), clearing, s);
    }
    detail::RatMatrix rows;
    for (int k = 0; k <= n; ++k) {
      int max_deg = -1;
      for (std::size_t j = 0; j < cols; ++j) max_deg = std::max(max_deg, images[j][static_cast<std::size_t>(k)].degree());
      for (int e = 0; e <= max_deg; ++e) {
        std::vector<BigRat> row(cols);
        for (std::size_t j = 0; j < cols; ++j) row[j] = images[j][static_cast<std::size_t>(k)].coeff(e);
        rows.push_back(std::move(row));
      }
    }

    auto kernel = detail::nullspace(std::move(rows), cols);
    UndeformResult result{ode, removed, 0, {}, slack};
    for (auto& v : kernel) {
      if (v[lambda_index] == 0 || v[c_index] == 0) continue;
      const BigRat inv = 1 / v[lambda_index];
      for (auto& x : v) x *= inv;
      auto p = antecedent_of(v);
      if (p[0].is_zero()) continue;
      result.basis.push_back(make_ode(std::move(p)));
    }
    if (result.basis.empty()) continue;
    result.ode = result.basis.front();
    result.free_parameters = static_cast<int>(kernel.size()) - 1;
    if (!(deform(result.ode).ode == ode))
      throw Error(ErrorCode::NotRemovable, "antecedent found but its deformation differs from the input");
    return result;
  }
  throw Error(ErrorCode::NotRemovable,
              "no polynomial antecedent within the degree bounds (slack up to " + std::to_string(options.max_slack) +
                  "); removal may need some parameters to be specialized first");
}

}  // namespace apparent

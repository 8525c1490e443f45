#include "apparent/singularities.hpp"

#include <algorithm>
#include <sstream>

#include "apparent/error.hpp"

namespace apparent {

SingularPointSet singular_points(const LinearODE& ode) {
  SingularPointSet set;
  RationalRoots roots = rational_roots(ode.leading());
  set.unresolved_factor = roots.residual;
  for (const auto& r : roots.roots) {
    SingularPoint sp = classify_point(ode, Location(r.root));
    if (sp.kind != PointKind::Ordinary) set.points.push_back(std::move(sp));
  }
  SingularPoint inf = classify_point(ode, Location::infinity());
  if (inf.kind != PointKind::Ordinary) set.points.push_back(std::move(inf));
  return set;
}

RiemannSymbol riemann_symbol(const LinearODE& ode) {
  SingularPointSet set = singular_points(ode);
  RiemannSymbol sym;
  for (const auto& sp : set.points) {
    if (sp.kind == PointKind::IrregularSingular)
      throw Error(ErrorCode::NotFuchsian, "irregular singular point at " + sp.location.to_string());
    sym.columns.push_back({sp.location, sp.exponents, sp.exponent_residual});
    if (sp.kind == PointKind::ApparentSingular) sym.extra.push_back({sp.location.value(), ExtraPointRole::Apparent});
  }
  if (!ode.last().is_zero()) {
    for (const auto& r : rational_roots(ode.last()).roots)
      if (ode.leading().eval(r.root) != 0) sym.extra.push_back({r.root, ExtraPointRole::Accessory});
  }
  std::sort(sym.extra.begin(), sym.extra.end(), [](const ExtraPoint& a, const ExtraPoint& b) { return a.location < b.location; });
  return sym;
}

std::string RiemannSymbol::to_text() const {
  std::size_t rows = 0;
  for (const auto& c : columns) rows = std::max(rows, c.exponents.size() + (c.exponent_residual.degree() > 0 ? 1 : 0));
  rows = std::max(rows, extra.size());

  std::vector<std::vector<std::string>> cells(rows + 1);
  for (const auto& c : columns) {
    cells[0].push_back(c.location.to_string());
    for (std::size_t r = 0; r < rows; ++r) {
      std::string cell;
      if (r < c.exponents.size())
        cell = apparent::to_string(c.exponents[r]);
      else if (r == c.exponents.size() && c.exponent_residual.degree() > 0)
        cell = "roots" + c.exponent_residual.to_string();
      cells[r + 1].push_back(cell);
    }
  }
  std::vector<std::string> extra_cells(rows + 1);
  extra_cells[0] = "z";
  for (std::size_t i = 0; i < extra.size(); ++i)
    extra_cells[i + 1] = apparent::to_string(extra[i].location) + (extra[i].role == ExtraPointRole::Apparent ? "" : "*");

  std::vector<std::size_t> width(columns.size(), 1);
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  std::size_t extra_width = 1;
  for (const auto& s : extra_cells) extra_width = std::max(extra_width, s.size());

  std::ostringstream os;
  for (std::size_t r = 0; r <= rows; ++r) {
    os << "( ";
    for (std::size_t j = 0; j < columns.size(); ++j) {
      std::string s = j < cells[r].size() ? cells[r][j] : "";
      os << s << std::string(width[j] - s.size() + 2, ' ');
    }
    os << "| " << extra_cells[r] << std::string(extra_width - extra_cells[r].size(), ' ') << " )\n";
  }
  if (std::any_of(extra.begin(), extra.end(), [](const ExtraPoint& e) { return e.role == ExtraPointRole::Accessory; }))
    os << "(* accessory zero of the last coefficient)\n";
  return os.str();
}

FuchsReport fuchs_check(const LinearODE& ode) {
  FuchsReport rep;
  const int n = ode.order();
  SingularPointSet set = singular_points(ode);
  if (set.has_unresolved())
    rep.diagnostics.push_back("UnresolvedFactor: P_0 has irrational roots " + set.unresolved_factor.to_string());

  std::vector<Location> points;
  for (const auto& sp : set.points) {
    if (sp.kind == PointKind::IrregularSingular)
      rep.irregular_points.push_back(sp.location);
    else
      points.push_back(sp.location);
  }
  rep.fuchsian = rep.irregular_points.empty() && !set.has_unresolved();
  rep.singular_count = static_cast<int>(set.points.size());

  BigRat sum(0);
  for (const auto& loc : points) {
    // sum of all indicial roots, rational or not
    RatPoly ind = indicial_exponents(ode, loc).polynomial;
    sum += -ind.coeff(ind.degree() - 1) / ind.lead();
  }
  rep.exponent_sum = sum;
  rep.expected_sum = BigRat((rep.singular_count - 2) * n * (n - 1), 2);
  rep.expected_sum.canonicalize();
  rep.identity_holds = rep.fuchsian && rep.exponent_sum == rep.expected_sum;
  if (!rep.irregular_points.empty()) rep.diagnostics.push_back("not Fuchsian: irregular singular point present");
  return rep;
}

}  // namespace apparent

#include <doctest.h>

#include "apparent/error.hpp"
#include "apparent/heun.hpp"
#include "apparent/singularities.hpp"
#include "apparent/transform.hpp"
#include "support/generators.hpp"

using namespace apparent;

namespace {
RatPoly P(std::string_view s) { return RatPoly::parse(s); }

LinearODE ode_of(std::initializer_list<std::string_view> coeffs) {
  std::vector<RatPoly> c;
  for (auto s : coeffs) c.push_back(P(s));
  return make_ode(std::move(c));
}

std::vector<std::string> locations(const std::vector<SingularPoint>& pts) {
  std::vector<std::string> out;
  for (const auto& p : pts) out.push_back(p.location.to_string());
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

HeunParams sample_heun() {
  return {BigRat(2), {BigRat(1, 2), BigRat(1, 2), BigRat(1, 2)}, BigRat(1, 4), BigRat(1, 4), BigRat(3)};
}
}  // namespace

TEST_CASE("canonical form") {
  LinearODE a = ode_of({"[2]", "[0]", "[2]"});
  CHECK(a.coeff(0) == P("[1]"));
  CHECK(a.coeff(1).is_zero());
  CHECK(a.coeff(2) == P("[1]"));

  LinearODE b = ode_of({"[0, 0, 1]", "[0, 1]", "[1]"});
  CHECK(b.coeff(0) == P("[0, 0, 1]"));
  CHECK(b.coeff(1) == P("[0, 1]"));
  CHECK(b.coeff(2) == P("[1]"));

  // common polynomial factor and negative, fractional scale
  LinearODE c = ode_of({"[0, -1/2, 0, 1/2]", "[0, -3/4]", "[0, 0, 1/3]"});
  CHECK(c.coeff(0) == P("[-6, 0, 6]"));
  CHECK(c.coeff(1) == P("[-9]"));
  CHECK(c.coeff(2) == P("[0, 4]"));

  CHECK(code_of([] { make_ode({P("[1]")}); }) == ErrorCode::NotAnODE);
  CHECK(code_of([] { make_ode({RatPoly(), P("[1]")}); }) == ErrorCode::DegenerateLeading);
}

TEST_CASE("degree convention flag") {
  LinearODE heun = general_heun(sample_heun());
  CHECK(heun.follows_degree_convention());
  CHECK(heun.coeff(0) == P("[0, 32, -48, 16]"));
  CHECK(heun.coeff(1) == P("[16, -48, 24]"));
  CHECK(heun.coeff(2) == P("[-3, 1]"));
  CHECK_FALSE(ode_of({"[1]", "[0]", "[1]"}).follows_degree_convention());
  CHECK_FALSE(ode_of({"[0, -1, 1]", "[1, 0, 1]", "[1]"}).follows_degree_convention());
}

TEST_CASE("property: canonicalization is idempotent") {
  apparent::testing::Gen gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<RatPoly> c;
    for (int k = 0; k < 3; ++k) c.push_back(gen.poly(static_cast<int>(gen.integer(0, 3))) * gen.nonzero());
    c.back() *= RatPoly::linear_factor(gen.rational());
    for (auto& p : c) p *= RatPoly::linear_factor(2);
    LinearODE once = make_ode(c);
    CHECK(make_ode(once.coeffs()) == once);
    // scaling by a constant does not change the canonical form
    for (auto& p : c) p *= BigRat(-5, 3);
    CHECK(make_ode(c) == once);
  }
}

TEST_CASE("singular points") {
  auto heun = singular_points(general_heun(sample_heun()));
  CHECK(locations(heun.points) == std::vector<std::string>{"0", "1", "2", "inf"});
  for (const auto& p : heun.points) CHECK(p.kind == PointKind::RegularSingular);

  auto harmonic = singular_points(ode_of({"[1]", "[0]", "[1]"}));
  REQUIRE(harmonic.points.size() == 1);
  CHECK(harmonic.points[0].location.is_infinite());
  CHECK(harmonic.points[0].kind == PointKind::IrregularSingular);
  CHECK(harmonic.points[0].exponents.empty());

  auto deformed = singular_points(deform(general_heun(sample_heun())).ode);
  CHECK(locations(deformed.points) == std::vector<std::string>{"0", "1", "2", "3", "inf"});
  CHECK(deformed.points[3].kind == PointKind::ApparentSingular);
  CHECK(deformed.points[3].exponents == std::vector<BigRat>{0, 2});

  // irrational roots of P_0 are reported, not classified
  auto irr = singular_points(ode_of({"[-2, 0, 1]", "[0, 1]", "[1]"}));
  CHECK(irr.has_unresolved());
  CHECK(irr.unresolved_factor == P("[-2, 0, 1]"));
}

TEST_CASE("singular points cover the roots of the leading coefficient") {
  apparent::testing::Gen gen(99);
  for (int trial = 0; trial < 30; ++trial) {
    auto roots = gen.distinct(3);
    std::vector<RatPoly> c{RatPoly::from_roots(roots), gen.poly(1), gen.poly(1)};
    LinearODE ode = make_ode(c);
    auto set = singular_points(ode);
    std::vector<BigRat> seen;
    for (const auto& sp : set.points) {
      if (sp.location.is_infinite()) continue;
      CHECK(std::find(seen.begin(), seen.end(), sp.location.value()) == seen.end());
      seen.push_back(sp.location.value());
      CHECK(ode.leading().eval(sp.location.value()) == 0);
    }
    for (const auto& r : rational_roots(ode.leading()).roots) {
      const bool listed = std::find(seen.begin(), seen.end(), r.root) != seen.end();
      CHECK(listed != is_ordinary_at(ode, Location(r.root)));
    }
  }
}

TEST_CASE("Moebius transforms") {
  // singular at {0, 1}: z(z-1) w'' + (1/3 - 2z) w' - w/5 = 0
  LinearODE e = ode_of({"[0, -1, 1]", "[1/3, -2]", "[-1/5]"});
  LinearODE shifted = moebius_transform(e, Moebius::translation(1));
  auto pts = singular_points(shifted);
  CHECK(locations(pts.points) == std::vector<std::string>{"-1", "0", "inf"});

  CHECK(moebius_transform(e, Moebius::identity()) == e);
  CHECK(code_of([&] { moebius_transform(e, Moebius{1, 2, 2, 4}); }) == ErrorCode::SingularMoebius);

  // hypergeometric type with a = 1/3, b = 1/2, c = 1/5 under z = 1/zeta
  // z(1 - z) w'' + (c - (a + b + 1) z) w' - a b w = 0
  LinearODE hyp = ode_of({"[0, 1, -1]", "[1/5, -11/6]", "[-1/6]"});
  LinearODE inv = moebius_transform(hyp, Moebius::inversion());
  CHECK(inv.coeff(0) == P("[0, 0, -30, 30]"));
  CHECK(inv.coeff(1) == P("[0, -5, 54]"));
  CHECK(inv.coeff(2) == P("[-5]"));
  CHECK(indicial_exponents(inv, Location(BigRat(0))).exponents ==
        indicial_exponents(hyp, Location::infinity()).exponents);
  CHECK(indicial_exponents(hyp, Location::infinity()).exponents == std::vector<BigRat>{BigRat(1, 3), BigRat(1, 2)});

  CHECK(Moebius::inversion().preimage(Location::infinity()) == Location(BigRat(0)));
  CHECK(Moebius::translation(1).preimage(Location(BigRat(1))) == Location(BigRat(0)));
}

TEST_CASE("property: Moebius composition") {
  apparent::testing::Gen gen(2718);
  for (int trial = 0; trial < 25; ++trial) {
    LinearODE e = general_heun(gen.heun());
    auto random_map = [&] {
      for (;;) {
        Moebius m{gen.rational(4, 3), gen.rational(4, 3), gen.rational(4, 3), gen.rational(4, 3)};
        if (m.determinant() != 0) return m;
      }
    };
    Moebius m1 = random_map();
    Moebius m2 = random_map();
    CHECK(moebius_transform(moebius_transform(e, m1), m2) == moebius_transform(e, m1.compose(m2)));
    // singular locations move under the inverse map
    auto before = singular_points(e);
    auto after = singular_points(moebius_transform(e, m1));
    std::vector<Location> expected;
    for (const auto& p : before.points) expected.push_back(m1.preimage(p.location));
    std::sort(expected.begin(), expected.end());
    std::vector<Location> got;
    for (const auto& p : after.points) got.push_back(p.location);
    CHECK(got == expected);
  }
}

TEST_CASE("Riemann symbol") {
  HeunParams hp = sample_heun();
  hp.theta = {BigRat(1, 3), BigRat(2, 5), BigRat(3, 7)};
  hp.theta_inf = BigRat(1, 11);
  hp.alpha = 2 - hp.theta[0] - hp.theta[1] - hp.theta[2] - hp.theta_inf;
  RiemannSymbol rs = riemann_symbol(general_heun(hp));
  REQUIRE(rs.columns.size() == 4);
  CHECK(rs.columns[0].exponents == std::vector<BigRat>{0, hp.theta[0]});
  CHECK(rs.columns[1].exponents == std::vector<BigRat>{0, hp.theta[1]});
  CHECK(rs.columns[2].exponents == std::vector<BigRat>{0, hp.theta[2]});
  CHECK(rs.columns[3].location.is_infinite());
  std::vector<BigRat> inf{hp.alpha, hp.theta_inf};
  std::sort(inf.begin(), inf.end());
  CHECK(rs.columns[3].exponents == inf);
  REQUIRE(rs.extra.size() == 1);
  CHECK(rs.extra[0].location == 3);
  CHECK(rs.extra[0].role == ExtraPointRole::Accessory);

  RiemannSymbol deformed = riemann_symbol(deform(general_heun(hp)).ode);
  REQUIRE(deformed.extra.size() == 1);
  CHECK(deformed.extra[0].role == ExtraPointRole::Apparent);
  CHECK(deformed.to_text().find("| z") != std::string::npos);

  // z^2 w'' - 2 w = 0
  RiemannSymbol euler = riemann_symbol(ode_of({"[0, 0, 1]", "[0]", "[-2]"}));
  REQUIRE(euler.columns.size() == 2);
  CHECK(euler.columns[0].exponents == std::vector<BigRat>{-1, 2});
  CHECK(euler.columns[1].exponents == std::vector<BigRat>{-2, 1});

  CHECK(code_of([] { riemann_symbol(ode_of({"[1]", "[0]", "[1]"})); }) == ErrorCode::NotFuchsian);
}

TEST_CASE("Riemann symbol text layout") {
  std::string text = riemann_symbol(general_heun(sample_heun())).to_text();
  CHECK(text ==
        "( 0    1    2    inf  | z  )\n"
        "( 0    0    0    1/4  | 3* )\n"
        "( 1/2  1/2  1/2  1/4  |    )\n"
        "(* accessory zero of the last coefficient)\n");
}

TEST_CASE("Fuchs relation") {
  FuchsReport heun = fuchs_check(general_heun(sample_heun()));
  CHECK(heun.fuchsian);
  CHECK(heun.singular_count == 4);
  CHECK(heun.exponent_sum == 2);
  CHECK(heun.expected_sum == 2);
  CHECK(heun.identity_holds);

  MultiHeunParams m4{{0, 1, 2, 3}, {BigRat(1, 2), BigRat(1, 3), BigRat(1, 5), BigRat(1, 7)}, BigRat(1, 11), 0, {5, 6}};
  m4.alpha = 3 - m4.theta[0] - m4.theta[1] - m4.theta[2] - m4.theta[3] - m4.theta_inf;
  FuchsReport multi = fuchs_check(multi_heun(m4));
  CHECK(multi.identity_holds);
  CHECK(multi.exponent_sum == 3);

  FuchsReport harmonic = fuchs_check(ode_of({"[1]", "[0]", "[1]"}));
  CHECK_FALSE(harmonic.fuchsian);
  REQUIRE(harmonic.irregular_points.size() == 1);
  CHECK(harmonic.irregular_points[0].is_infinite());
  CHECK_FALSE(harmonic.identity_holds);

  // third order, with irrational exponents at infinity
  ThirdOrderParams t{3, BigRat(1, 3), BigRat(2, 7), BigRat(1, 5), BigRat(2, 9), 5, 7};
  FuchsReport third = fuchs_check(third_order_example(t));
  CHECK(third.identity_holds);
  CHECK(third.exponent_sum == 6);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "metap/errors.hpp"
#include "metap/funcspace.hpp"

using namespace metap;

namespace {

FunctionDescriptor two_term_poly() {
  TrigPolynomial p;
  p.terms.push_back({{1.0}, {Complex(2.0, 0.0)}});
  p.terms.push_back({{-3.0}, {Complex(1.0, -1.0)}});
  return make_trig_poly(p);
}

Complex two_term_ref(double t) {
  return Complex(2.0, 0.0) * std::polar(1.0, t) + Complex(1.0, -1.0) * std::polar(1.0, -3.0 * t);
}

}  // namespace

TEST_CASE("uniform grid indexing and weights") {
  const UniformGrid g = UniformGrid::make({{0.0, 1.0}}, 16);
  CHECK(g.total() == 17);
  CHECK(g.step() == 1.0 / 16);
  CHECK(g.coord(0, 0) == 0.0);
  CHECK(g.coord(0, 16) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.trap_weight(0, 0) == 0.5);
  CHECK(g.trap_weight(0, 8) == 1.0);
  CHECK(g.trap_weight(0, 16) == 0.5);

  const UniformGrid g2 = UniformGrid::make({{0.0, 1.0}, {-1.0, 1.0}}, 8);
  CHECK(g2.axes() == 2);
  CHECK(g2.total() == 9 * 17);
  std::vector<std::size_t> idx;
  g2.unflatten(g2.total() - 1, idx);
  CHECK(idx[0] == 8);
  CHECK(idx[1] == 16);
  const RVec last = g2.point(g2.total() - 1);
  CHECK(last[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(last[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("trig polynomial evaluation matches the closed form") {
  const FunctionDescriptor f = two_term_poly();
  for (double t : {0.0, 0.37, -2.0, 15.25}) {
    const Complex got = evaluate1(f, t);
    const Complex want = two_term_ref(t);
    CHECK(std::abs(got - want) <= 1e-14);
  }
  CHECK(sup_bound(f, 100.0) == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("translate is exact coefficient rotation for trig polynomials") {
  const FunctionDescriptor f = two_term_poly();
  const double tau = 0.773;
  const FunctionDescriptor g = translate1(f, tau);
  const auto p = as_trig_poly(g);
  REQUIRE(p.has_value());
  for (double t : {0.0, 1.0, -4.5}) {
    CHECK(std::abs(evaluate1(g, t) - two_term_ref(t + tau)) <= 1e-13);
  }
  for (const TrigTerm& term : p->terms) {
    CHECK(std::abs(std::abs(term.coeff[0]) - (term.freq[0] == 1.0 ? 2.0 : std::sqrt(2.0))) <=
          1e-15);
  }
}

TEST_CASE("scale by one returns the identical node") {
  const FunctionDescriptor f = two_term_poly();
  const FunctionDescriptor g = scale(f, Complex(1.0, 0.0));
  CHECK(&g.node() == &f.node());
  const FunctionDescriptor h = scale(f, Complex(0.0, 2.0));
  CHECK(std::abs(evaluate1(h, 0.4) - Complex(0.0, 2.0) * two_term_ref(0.4)) <= 1e-14);
}

TEST_CASE("lincomb of trig polynomials collapses and subtract cancels exactly") {
  const FunctionDescriptor f = two_term_poly();
  const FunctionDescriptor sum = lincomb({{Complex(1.0, 0.0), f}, {Complex(2.0, 0.0), f}});
  const auto p = as_trig_poly(sum);
  REQUIRE(p.has_value());
  CHECK(std::abs(evaluate1(sum, 0.9) - 3.0 * two_term_ref(0.9)) <= 1e-13);

  const FunctionDescriptor diff = subtract(f, f);
  for (double t : {0.0, 3.3, -7.1}) {
    CHECK(evaluate1(diff, t) == Complex(0.0, 0.0));
  }
}

TEST_CASE("scalar maps: abs, sign, power, arctan") {
  const FunctionDescriptor f = two_term_poly();
  const double t = 1.23;
  const Complex v = two_term_ref(t);

  ScalarMap abs_map;
  abs_map.kind = ScalarMapKind::Abs;
  CHECK(std::abs(evaluate1(compose_scalar(abs_map, f), t) - Complex(std::abs(v), 0.0)) <= 1e-14);

  ScalarMap sign_map;
  sign_map.kind = ScalarMapKind::Sign;
  const Complex sv = evaluate1(compose_scalar(sign_map, f), t);
  CHECK(sv.real() == (v.real() > 0 ? 1.0 : v.real() < 0 ? -1.0 : 0.0));

  ScalarMap pow_map;
  pow_map.kind = ScalarMapKind::Power;
  pow_map.alpha = 2.0;
  CHECK(evaluate1(compose_scalar(pow_map, f), t).real() ==
        doctest::Approx(std::pow(std::abs(v), 2.0)).epsilon(1e-14));

  ScalarMap atan_map;
  atan_map.kind = ScalarMapKind::Arctan;
  CHECK(evaluate1(compose_scalar(atan_map, f), t).real() ==
        doctest::Approx(std::atan(std::abs(v))).epsilon(1e-14));
}

TEST_CASE("monotone table map interpolates and clamps") {
  ScalarMap m;
  m.kind = ScalarMapKind::MonotoneTable;
  m.table = {{0.0, 0.0}, {1.0, 2.0}, {2.0, 3.0}};
  CHECK(m.apply(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(m.apply(1.5) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(m.apply(5.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(m.apply(0.0) == 0.0);
}

TEST_CASE("weight functions evaluate their closed forms") {
  WeightFunction wc;
  CHECK(wc.eval1(3.7) == 1.0);

  WeightFunction wr;
  wr.kind = WeightKind::PowerRadial;
  wr.b = 2.0;
  CHECK(wr.eval1(3.0) == doctest::Approx(16.0).epsilon(1e-15));
  CHECK(wr.eval({-3.0}) == doctest::Approx(16.0).epsilon(1e-15));

  WeightFunction wt;
  wt.kind = WeightKind::PowerTime;
  wt.a = 1.0;
  wt.t_floor = 1.0;
  CHECK(wt.eval1(4.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(wt.eval1(0.25) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("tabulated functions interpolate linearly inside their support") {
  TabulatedFn tab;
  tab.t0 = 0.0;
  tab.dt = 1.0;
  tab.values = {{Complex(0.0, 0.0)}, {Complex(2.0, 0.0)}, {Complex(2.0, 2.0)}};
  const FunctionDescriptor f = make_tabulated(tab);
  CHECK(std::abs(evaluate1(f, 0.5) - Complex(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(evaluate1(f, 1.5) - Complex(2.0, 1.0)) <= 1e-15);
  CHECK(std::abs(evaluate1(f, 2.0) - Complex(2.0, 2.0)) <= 1e-15);
}

TEST_CASE("series truncation carries tail bounds and matches partial sums") {
  const FunctionDescriptor f = make_series("semi-anti", 200);
  const TruncationResult tr = truncate_series(f, 4, 50.0);
  CHECK(tr.sup_tail > 0.0);
  CHECK(tr.sup_tail < 0.3);
  CHECK(tr.var1_tail > 0.0);
  const Complex partial = evaluate1(tr.partial, 2.0);
  const Complex full = evaluate1(f, 2.0);
  CHECK(std::abs(full - partial) <= tr.sup_tail + 1e-12);
}

TEST_CASE("evaluate_grid1 is identical across thread counts") {
  const FunctionDescriptor f = make_series("haraux", 64);
  std::vector<double> ts;
  for (int i = 0; i <= 400; ++i) ts.push_back(-3.0 + i * 0.05);
  const CVec a = evaluate_grid1(f, ts, 1);
  const CVec b = evaluate_grid1(f, ts, 4);
  const CVec c = evaluate_grid1(f, ts, 8);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(a[i] == c[i]);
  }
}

TEST_CASE("invalid constructions throw") {
  CHECK_THROWS_AS((void)make_series("no-such-entry", 4), ValidationError);
  const FunctionDescriptor f = two_term_poly();
  CHECK_THROWS_AS((void)evaluate(f, RVec{1.0, 2.0}), ValidationError);
  TrigPolynomial bad;
  bad.dim = 1;
  bad.terms.push_back({{1.0, 2.0}, {Complex(1.0, 0.0)}});
  CHECK_THROWS_AS((void)make_trig_poly(bad), ValidationError);
}

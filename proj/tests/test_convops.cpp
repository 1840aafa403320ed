#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "metap/errors.hpp"
#include "metap/convops.hpp"
#include "metap/corpus.hpp"

using namespace metap;

namespace {

constexpr double kPi = 3.14159265358979323846;

FunctionDescriptor wave(double omega) {
  TrigPolynomial p;
  p.terms.push_back({{omega}, {Complex(1.0, 0.0)}});
  return make_trig_poly(p);
}

FunctionDescriptor cos_custom() {
  CustomFn c;
  c.tag = "plain-cos";
  c.eval1 = [](double t) { return Complex(std::cos(t), 0.0); };
  c.sup_hint = 1.0;
  return make_custom(c);
}

}  // namespace

TEST_CASE("kernel closed forms: mass, tails, truncation support") {
  const Kernel e2 = make_exp_decay(2.0);
  CHECK(e2.value(0.7) == doctest::Approx(std::exp(-1.4)).epsilon(1e-15));
  CHECK(e2.mass() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(e2.tail_mass(3.0) == doctest::Approx(std::exp(-6.0) / 2.0).epsilon(1e-15));
  const double S = e2.truncation_support(1.0, 1e-10);
  CHECK(e2.tail_mass(S) <= 1e-10 + 1e-24);
  CHECK(e2.tail_mass(0.9 * S) > 1e-10);

  const Kernel pw = make_power_bound(1.0, 0.5, 2.0);
  CHECK(pw.value(4.0) == doctest::Approx(0.5 / 17.0).epsilon(1e-15));
  CHECK(pw.mass() == doctest::Approx(kPi / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(pw.tail_mass(100.0) ==
        doctest::Approx(std::pow(100.0, -1.5) / 1.5).epsilon(1e-14));
  const double Sp = pw.truncation_support(2.0, 1e-6);
  CHECK(2.0 * pw.tail_mass(Sp) <= 1e-6 + 1e-18);
}

TEST_CASE("kernel constructors and heat profile are guarded") {
  CHECK_THROWS_AS((void)make_exp_decay(0.0), ValidationError);
  CHECK_THROWS_AS((void)make_power_bound(1.0, 2.0, 2.0), ValidationError);
  CHECK_THROWS_AS((void)make_power_bound(-1.0, 0.5, 2.0), ValidationError);
  Kernel heat;
  heat.family = KernelFamily::Heat;
  CHECK_THROWS_AS((void)heat.value(1.0), KindError);
  CHECK_THROWS_AS((void)heat.tail_mass(1.0), KindError);
}

TEST_CASE("exp-decay convolution of waves is the exact resolvent multiplier") {
  const Kernel k = make_exp_decay(1.0);
  const std::vector<double> pts{0.0, 1.0, -2.5, 10.0};
  const double expected[] = {1.0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(10.0)};
  const double omegas[] = {0.0, 1.0, 3.0};
  for (int i = 0; i < 3; ++i) {
    const ConvolutionResult res = infinite_convolution(k, wave(omegas[i]), pts);
    CHECK(res.exact);
    CHECK(res.converged);
    REQUIRE(res.samples.size() == pts.size());
    for (const Complex& z : res.samples) {
      CHECK(std::abs(std::abs(z) - expected[i]) <= 1e-12);
      CHECK(std::abs(z) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("quadrature convolution agrees with the exact multiplier path") {
  const Kernel k = make_exp_decay(1.0);
  const std::vector<double> pts{0.0, 2.0};
  const ConvolutionResult res = infinite_convolution(k, cos_custom(), pts);
  CHECK_FALSE(res.exact);
  CHECK(res.converged);
  CHECK(res.truncation_S > 0.0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Complex want = Complex(1.0, 0.0) / Complex(1.0, 1.0) *
                         Complex(std::cos(pts[i]), std::sin(pts[i]));
    CHECK(std::abs(res.samples[i] - Complex(want.real(), 0.0)) <= 1e-7);
  }
}

TEST_CASE("power-bound convolution of cos matches the frozen reference") {
  const Kernel k = make_power_bound(1.0, 0.5, 2.0);
  TrigPolynomial p;
  p.terms.push_back({{1.0}, {Complex(0.5, 0.0)}});
  p.terms.push_back({{-1.0}, {Complex(0.5, 0.0)}});
  const ConvolutionResult res = infinite_convolution(k, make_trig_poly(p), {0.0});
  CHECK_FALSE(res.exact);
  CHECK(res.converged);
  CHECK(std::abs(res.samples[0].real() - 1.5579198314763517) <= 1e-6);
  CHECK(std::abs(res.samples[0].imag()) <= 1e-9);
}

TEST_CASE("convolution rejects unsupported inputs") {
  Kernel heat;
  heat.family = KernelFamily::Heat;
  CHECK_THROWS_AS((void)infinite_convolution(heat, wave(1.0), {0.0}), KindError);

  TrigPolynomial plane;
  plane.dim = 2;
  plane.terms.push_back({{1.0, 0.0}, {Complex(1.0, 0.0)}});
  CHECK_THROWS_AS((void)infinite_convolution(make_exp_decay(1.0), make_trig_poly(plane), {0.0}),
                  ValidationError);
}

TEST_CASE("heat semigroup analytic path and the semigroup law") {
  const FunctionDescriptor f = wave(1.0);
  const HeatResult once = heat_apply(f, 1.0, HeatMethod::Analytic, {{0.0}, {2.0}});
  CHECK(once.exact);
  for (const CVec& v : once.samples) {
    CHECK(std::abs(std::abs(v[0]) - std::exp(-1.0)) <= 1e-14);
  }

  const HeatResult half = heat_apply(f, 0.5, HeatMethod::Analytic, {{0.0}});
  const HeatResult twice = heat_apply(half.F, 0.5, HeatMethod::Analytic, {{0.0}});
  const auto a = as_trig_poly(twice.F);
  const auto b = as_trig_poly(once.F);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  REQUIRE(a->terms.size() == 1);
  CHECK(std::abs(a->terms[0].coeff[0] - b->terms[0].coeff[0]) <= 1e-12);
}

TEST_CASE("heat quadrature approximates the analytic multiplier") {
  const FunctionDescriptor f = wave(2.0);
  const HeatResult res = heat_apply(f, 0.5, HeatMethod::Quadrature, {{0.0}, {1.0}, {-2.5}});
  CHECK_FALSE(res.exact);
  CHECK(res.radius > 0.0);
  for (std::size_t i = 0; i < res.samples.size(); ++i) {
    CHECK(std::abs(std::abs(res.samples[i][0]) - std::exp(-2.0)) <= 1e-6);
  }
}

TEST_CASE("two-dimensional heat quadrature matches the tensor multiplier") {
  TrigPolynomial p;
  p.dim = 2;
  p.terms.push_back({{1.0, 1.0}, {Complex(1.0, 0.0)}});
  const FunctionDescriptor f = make_trig_poly(p);
  const HeatResult res =
      heat_apply(f, 0.5, HeatMethod::Quadrature, {{0.0, 0.0}, {1.0, 0.5}});
  for (const CVec& v : res.samples) {
    CHECK(std::abs(std::abs(v[0]) - std::exp(-1.0)) <= 1e-5);
  }
}

TEST_CASE("heat validation and analytic-path kind errors") {
  CHECK_THROWS_AS((void)heat_apply(wave(1.0), 0.0, HeatMethod::Analytic, {{0.0}}),
                  ValidationError);
  CHECK_THROWS_AS((void)heat_apply(cos_custom(), 1.0, HeatMethod::Analytic, {{0.0}}),
                  KindError);
  CHECK_THROWS_AS((void)heat_apply(wave(1.0), 1.0, HeatMethod::Analytic, {{0.0, 1.0}}),
                  ValidationError);
}

TEST_CASE("translation invariance is preserved through the convolution") {
  const Kernel k = make_exp_decay(1.0);
  const FunctionDescriptor f_in = corpus_function("semi-anti", 1);
  const double tau = 3.0 * kPi;
  const ConvolutionResult conv = infinite_convolution(k, f_in, {0.0});
  REQUIRE(conv.exact);

  const PreservationReport rep = preservation_report(
      f_in, conv.F, k, tau, Complex(-1.0, 0.0), {{0.0, 40.0}}, 16, 1e-5, 4);
  CHECK(rep.mass == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rep.residual_in <= 1e-10);
  CHECK(rep.residual_out <= rep.mass * rep.residual_in + 1e-5);
  CHECK(rep.dominated);
  CHECK(rep.lookback > 0.0);
  CHECK(rep.window_in[0].lo < rep.window_out[0].lo);
}

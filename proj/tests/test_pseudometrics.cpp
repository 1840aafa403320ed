#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "metap/errors.hpp"
#include "metap/pseudometrics.hpp"

using namespace metap;

namespace {

// Exhaustive supremum over all increasing index chains, accumulating
// increments left to right exactly like the dynamic program.
double vp_brute(const std::vector<CVec>& v, double p) {
  const std::size_t n = v.size();
  double answer = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> chain;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) chain.push_back(i);
    if (chain.size() < 2) continue;
    double s = 0.0;
    for (std::size_t k = 1; k < chain.size(); ++k)
      s += detail::vp_increment(v[chain[k - 1]], v[chain[k]], p);
    answer = std::max(answer, s);
  }
  return p == 1.0 ? answer : std::pow(answer, 1.0 / p);
}

std::vector<double> ramp(std::size_t n) {
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = static_cast<double>(i);
  return u;
}

FunctionDescriptor random_poly(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> freq(-5.0, 5.0);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_int_distribution<int> nterms(1, 4);
  TrigPolynomial p;
  const int k = nterms(rng);
  for (int j = 0; j < k; ++j) p.terms.push_back({{freq(rng)}, {Complex(amp(rng), amp(rng))}});
  return make_trig_poly(p);
}

FunctionDescriptor const_poly(Complex c) {
  TrigPolynomial p;
  p.terms.push_back({{0.0}, {c}});
  return make_trig_poly(p);
}

FunctionDescriptor zero_poly() {
  TrigPolynomial p;
  return make_trig_poly(p);
}

FunctionDescriptor circle_poly() {
  TrigPolynomial p;
  p.terms.push_back({{1.0}, {Complex(1.0, 0.0)}});
  return make_trig_poly(p);
}

}  // namespace

TEST_CASE("p-variation dynamic program equals the exhaustive supremum") {
  std::mt19937_64 rng(20260813);
  std::uniform_real_distribution<double> amp(-2.0, 2.0);
  std::uniform_int_distribution<int> len(2, 11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(len(rng));
    std::vector<CVec> v(n);
    for (auto& x : v) x = CVec{Complex(amp(rng), amp(rng))};
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      CHECK(p_variation(ramp(n), v, p) == vp_brute(v, p));
    }
  }
}

TEST_CASE("p-variation closed forms and monotonicity in p") {
  const std::vector<double> u{0.0, 1.0, 2.0};
  const std::vector<double> hat{0.0, 1.0, 0.0};
  CHECK(p_variation(u, hat, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p_variation(u, hat, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<CVec> v(8);
    for (auto& x : v) x = CVec{Complex(amp(rng), amp(rng))};
    const std::vector<double> nodes = ramp(8);
    double prev = p_variation(nodes, v, 1.0);
    for (double p : {1.5, 2.0, 3.0, 4.0}) {
      const double cur = p_variation(nodes, v, p);
      CHECK(cur <= prev + 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("p-variation rejects malformed input") {
  CHECK_THROWS_AS((void)p_variation({0.0}, std::vector<double>{1.0}, 1.0), ValidationError);
  CHECK_THROWS_AS((void)p_variation({0.0, 0.0}, std::vector<double>{1.0, 2.0}, 1.0),
                  ValidationError);
  CHECK_THROWS_AS((void)p_variation({0.0, 1.0}, std::vector<double>{1.0, 2.0}, 0.5),
                  ValidationError);
}

TEST_CASE("weighted sup distance with closed-form witnesses") {
  PseudometricSpec spec;
  spec.window = {{0.0, 3.0}};
  const DistanceValue d = distance(spec, const_poly(Complex(2.0, 0.0)), zero_poly());
  CHECK(d.value == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(d.refinement_delta == 0.0);
  CHECK(d.grid_used == 1.0 / 32);

  spec.nu.kind = WeightKind::PowerRadial;
  spec.nu.b = 1.0;
  const DistanceValue dw = distance(spec, const_poly(Complex(1.0, 0.0)), zero_poly());
  CHECK(dw.value == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("weighted Lp distance of a constant is exact under trapezoid weights") {
  PseudometricSpec spec;
  spec.family = MetricFamily::WeightedLp;
  spec.p = 2.0;
  spec.window = {{0.0, 1.0}};
  const DistanceValue d = distance(spec, const_poly(Complex(1.0, 0.0)), zero_poly());
  CHECK(d.value == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("BV1 composite value on the unit circle orbit") {
  PseudometricSpec spec;
  spec.family = MetricFamily::BvpComposite;
  spec.p = 1.0;
  spec.window = {{0.0, 10.0}};
  const double chord_sum = 128.0 * std::sin(1.0 / 64.0);
  const DistanceValue d = distance(spec, circle_poly(), zero_poly());
  CHECK(d.value == doctest::Approx(1.0 + chord_sum).epsilon(1e-12));

  spec.family = MetricFamily::BvpSlow;
  const DistanceValue ds = distance(spec, circle_poly(), zero_poly());
  CHECK(ds.value == doctest::Approx(chord_sum).epsilon(1e-12));
}

TEST_CASE("arctan sup compresses unbounded differences") {
  PseudometricSpec spec;
  spec.family = MetricFamily::ArctanSup;
  spec.window = {{0.0, 2.0}};
  const DistanceValue d = distance(spec, const_poly(Complex(1e6, 0.0)), zero_poly());
  CHECK(d.value == doctest::Approx(1.5707953267948966).epsilon(1e-15));
  CHECK(d.value < 3.14159265358979323846 / 2.0);
}

TEST_CASE("compact exhaustion of a constant difference sums the dyadic series") {
  PseudometricSpec spec;
  spec.family = MetricFamily::CompactExhaustion;
  spec.window = {{-1.0, 1.0}};
  const DistanceValue d = distance(spec, const_poly(Complex(3.0, 0.0)), zero_poly());
  CHECK(d.value == doctest::Approx(0.75 * (1.0 - std::ldexp(1.0, -40))).epsilon(1e-14));
}

TEST_CASE("discrete unit metric separates exact equality only") {
  PseudometricSpec spec;
  spec.family = MetricFamily::DiscreteUnit;
  spec.window = {{0.0, 5.0}};
  const FunctionDescriptor f = circle_poly();
  CHECK(distance(spec, f, f).value == 0.0);
  const FunctionDescriptor g = lincomb({{Complex(1.0, 0.0), f},
                                        {Complex(1e-13, 0.0), const_poly(Complex(1.0, 0.0))}});
  CHECK(distance(spec, f, g).value == 1.0);
}

TEST_CASE("distance is exactly symmetric for every family") {
  std::mt19937_64 rng(99);
  const FunctionDescriptor f = random_poly(rng);
  const FunctionDescriptor g = random_poly(rng);
  for (MetricFamily fam :
       {MetricFamily::WeightedSup, MetricFamily::WeightedLp, MetricFamily::BvpComposite,
        MetricFamily::BvpSlow, MetricFamily::ArctanSup, MetricFamily::CompactExhaustion,
        MetricFamily::DiscreteUnit}) {
    PseudometricSpec spec;
    spec.family = fam;
    spec.p = 2.0;
    spec.window = {{0.0, 8.0}};
    CHECK(distance(spec, f, g).value == distance(spec, g, f).value);
  }
}

TEST_CASE("periodicity residual vanishes at true periods and validates omega") {
  TrigPolynomial sine;
  sine.terms.push_back({{1.0}, {Complex(0.0, -0.5)}});
  sine.terms.push_back({{-1.0}, {Complex(0.0, 0.5)}});
  const FunctionDescriptor f = make_trig_poly(sine);
  PseudometricSpec spec;
  spec.window = {{0.0, 40.0}};
  const double two_pi = 2.0 * 3.14159265358979323846;
  CHECK(periodicity_residual1(f, two_pi, Complex(1.0, 0.0), spec) <= 1e-12);
  CHECK(periodicity_residual1(f, two_pi / 2.0, Complex(-1.0, 0.0), spec) <= 1e-12);
  CHECK(periodicity_residual1(f, 1.0, Complex(1.0, 0.0), spec) > 0.5);
  CHECK_THROWS_AS((void)periodicity_residual1(f, 0.0, Complex(1.0, 0.0), spec),
                  ValidationError);
}

TEST_CASE("axiom suite passes for weighted sup on random samples") {
  std::mt19937_64 rng(4242);
  std::vector<FunctionDescriptor> samples;
  for (int i = 0; i < 4; ++i) samples.push_back(random_poly(rng));
  PseudometricSpec spec;
  spec.window = {{0.0, 15.0}};
  const AxiomReport rep = check_space_axioms(spec, samples);
  CHECK(rep.all_pass);
  CHECK(rep.checks.size() == 6);
  for (const AxiomCheck& c : rep.checks) CHECK(c.pass);
}

TEST_CASE("discrete unit fails exactly the scaling-vanishes axiom") {
  std::mt19937_64 rng(4242);
  std::vector<FunctionDescriptor> samples;
  for (int i = 0; i < 3; ++i) samples.push_back(random_poly(rng));
  PseudometricSpec spec;
  spec.family = MetricFamily::DiscreteUnit;
  spec.window = {{0.0, 10.0}};
  const AxiomReport rep = check_space_axioms(spec, samples);
  CHECK_FALSE(rep.all_pass);
  for (const AxiomCheck& c : rep.checks) {
    if (c.name == "scaling_vanishes") {
      CHECK_FALSE(c.pass);
      CHECK(c.measured == 1.0);
    } else {
      CHECK(c.pass);
    }
  }
}

TEST_CASE("axiom suite requires at least three samples") {
  std::mt19937_64 rng(1);
  std::vector<FunctionDescriptor> samples{random_poly(rng), random_poly(rng)};
  PseudometricSpec spec;
  CHECK_THROWS_AS((void)check_space_axioms(spec, samples), ValidationError);
}

TEST_CASE("spec validation rejects mismatched inputs") {
  PseudometricSpec spec;
  spec.window = {{0.0, 1.0}, {0.0, 1.0}};
  CHECK_THROWS_AS((void)distance(spec, circle_poly(), zero_poly()), ValidationError);
  PseudometricSpec bad_p;
  bad_p.family = MetricFamily::WeightedLp;
  bad_p.p = 0.5;
  bad_p.window = {{0.0, 1.0}};
  CHECK_THROWS_AS((void)distance(bad_p, circle_poly(), zero_poly()), ValidationError);
}

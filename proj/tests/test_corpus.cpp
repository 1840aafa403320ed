#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "metap/errors.hpp"
#include "metap/corpus.hpp"

using namespace metap;

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex semi_anti_ref(double t, int N) {
  Complex s(0.0, 0.0);
  for (int m = 1; m <= N; ++m) {
    const double w = 1.0 / (static_cast<double>(m) * m);
    s += w * std::polar(1.0, t / (2.0 * m + 1.0));
  }
  return s;
}

double haraux_ref(double t, int N) {
  double s = 0.0;
  for (int m = 1; m <= N; ++m) {
    const double u = std::sin(t / std::ldexp(1.0, m));
    s += u * u / static_cast<double>(m);
  }
  return s;
}

}  // namespace

TEST_CASE("registry lists exactly the six entries") {
  const std::vector<std::string> names = corpus_names();
  CHECK(names.size() == 6);
  for (const char* n :
       {"semi-anti", "haraux", "gevrey", "stepanov-sin", "stepanov-g", "sign-pair"}) {
    CHECK(corpus_has(n));
    CHECK(corpus_get(n).name == n);
  }
  CHECK_FALSE(corpus_has("nope"));
  CHECK_THROWS_AS((void)corpus_get("nope"), ValidationError);
}

TEST_CASE("semi-anti partial sums match an independent evaluation") {
  const CorpusEntry& e = corpus_get("semi-anti");
  CHECK(e.is_series);
  CHECK(e.default_trunc == 200);
  for (double t : {0.0, 1.234, -17.5, 93.2}) {
    for (int N : {1, 3, 7, 50}) {
      CHECK(std::abs(e.partial(t, N) - semi_anti_ref(t, N)) <= 1e-13);
    }
    CHECK(std::abs(e.value(t) - semi_anti_ref(t, 200)) <= 1e-13);
  }
  const FunctionDescriptor f = corpus_function("semi-anti", 7);
  CHECK(std::abs(evaluate1(f, 1.234) - semi_anti_ref(1.234, 7)) <= 1e-13);
}

TEST_CASE("semi-anti tail bounds match the frozen references") {
  const CorpusEntry& e = corpus_get("semi-anti");
  CHECK(e.sup_tail(2, 100.0) == doctest::Approx(0.39493406684822643647).epsilon(1e-9));
  CHECK(e.sup_tail(4, 100.0) == doctest::Approx(0.22132295573711532536).epsilon(1e-9));
  CHECK(e.sup_tail(8, 100.0) == doctest::Approx(0.11751201469403142513).epsilon(1e-9));
  CHECK(e.var1_tail(2) == doctest::Approx(0.06837891150934868).epsilon(1e-9));
  CHECK(e.var1_tail(4) == doctest::Approx(0.022743990874428047).epsilon(1e-9));
  CHECK(e.var1_tail(8) == doctest::Approx(0.0066384355987047037).epsilon(1e-9));
}

TEST_CASE("semi-anti partial trig polynomial reproduces the partial sum") {
  const CorpusEntry& e = corpus_get("semi-anti");
  const auto p = e.partial_trig_poly(4);
  REQUIRE(p.has_value());
  CHECK(p->terms.size() == 4);
  const FunctionDescriptor f = make_trig_poly(*p);
  for (double t : {0.0, 2.0, -9.25}) {
    CHECK(std::abs(evaluate1(f, t) - semi_anti_ref(t, 4)) <= 1e-13);
  }
}

TEST_CASE("haraux partial sums and tail bounds") {
  const CorpusEntry& e = corpus_get("haraux");
  CHECK(e.default_trunc == 64);
  CHECK_FALSE(e.complex_valued);
  for (double t : {0.0, 0.7, 12.0}) {
    for (int N : {1, 5, 20}) {
      CHECK(std::abs(e.partial(t, N) - Complex(haraux_ref(t, N), 0.0)) <= 1e-13);
    }
  }
  CHECK(std::abs(e.partial(0.0, 64)) == 0.0);
  CHECK(e.var1_tail(5) == doctest::Approx(0.0092110277865572855).epsilon(1e-12));
  CHECK(e.var1_tail(10) == doctest::Approx(0.00016464881830331725).epsilon(1e-12));
  CHECK(e.var1_tail(15) == doctest::Approx(3.6119385164374603e-6).epsilon(1e-12));
  CHECK(e.sup_tail(5, 100.0) > 0.0);
  CHECK(e.sup_tail(5, 100.0) <= 2.0 * (std::log(2.0)));
}

TEST_CASE("gevrey blocks place scaled bumps on dyadic residues") {
  const CorpusEntry& e = corpus_get("gevrey");
  const double psi_max = std::exp(-4.0);

  CHECK(std::abs(e.value(2.5) - Complex(psi_max, 0.0)) <= 1e-16);
  CHECK(std::abs(e.value(4.5) - Complex(std::pow(2.0, -0.25) * psi_max, 0.0)) <= 1e-16);
  CHECK(std::abs(e.value(8.5) - Complex(std::pow(3.0, -0.25) * psi_max, 0.0)) <= 1e-16);
  CHECK(e.value(1.5) == Complex(0.0, 0.0));
  CHECK(e.value(2.0) == Complex(0.0, 0.0));
  CHECK(std::abs(e.partial(4.5, 1)) == 0.0);

  CHECK(e.sup_tail(8, 100.0) == 0.0);
  CHECK(e.sup_tail(4, 100.0) ==
        doctest::Approx(std::pow(5.0, -0.25) * psi_max).epsilon(1e-14));
}

TEST_CASE("gevrey block descriptor is exactly 2^(n+1) periodic") {
  const FunctionDescriptor b2 = gevrey_block(2.0, 2);
  const double period = 8.0;
  for (double t : {4.3, 4.5, 12.9, -3.6}) {
    CHECK(std::abs(evaluate1(b2, t + period) - evaluate1(b2, t)) <= 1e-15);
  }
  CHECK_THROWS_AS((void)gevrey_block(1.0, 2), ValidationError);
  CHECK_THROWS_AS((void)gevrey_block(2.0, 0), ValidationError);
}

TEST_CASE("zeta stays positive and the stepanov pair follows it") {
  CHECK(corpus_zeta(0.0) == doctest::Approx(4.0).epsilon(1e-15));
  double zmin = 10.0;
  for (int i = 0; i <= 20000; ++i) {
    zmin = std::min(zmin, corpus_zeta(i * 0.05));
  }
  CHECK(zmin > 0.0);
  CHECK(zmin < 0.05);

  const CorpusEntry& s = corpus_get("stepanov-sin");
  const CorpusEntry& g = corpus_get("stepanov-g");
  for (double t : {0.3, 5.0, 529.0}) {
    const double z = corpus_zeta(t);
    CHECK(std::abs(s.value(t) - Complex(std::sin(1.0 / z), 0.0)) <= 1e-15);
    CHECK(std::abs(g.value(t) -
                   Complex(corpus_zeta_prime(t) / (z * z) * std::cos(1.0 / z), 0.0)) <=
          1e-15);
  }
}

TEST_CASE("peak locator ranks odd pi-multiples by zeta depth") {
  const std::vector<double> peaks = locate_g_peaks(1.0e5, 7);
  REQUIRE(peaks.size() >= 3);
  CHECK(peaks[0] == doctest::Approx(5741.0 * kPi).epsilon(1e-12));
  CHECK(peaks[1] == doctest::Approx(21979.0 * kPi).epsilon(1e-12));
  CHECK(peaks[2] == doctest::Approx(17223.0 * kPi).epsilon(1e-12));
  for (std::size_t i = 1; i < peaks.size(); ++i) {
    CHECK(corpus_zeta(peaks[i - 1]) <= corpus_zeta(peaks[i]) + 1e-15);
  }
  for (double tau : peaks) {
    const double q = tau / kPi;
    CHECK(std::abs(q - std::round(q)) <= 1e-9);
    CHECK(std::fmod(std::round(q), 2.0) == 1.0);
  }
}

TEST_CASE("sign-pair takes values in the two-point set") {
  const CorpusEntry& e = corpus_get("sign-pair");
  const FunctionDescriptor f = corpus_function("sign-pair");
  for (double t : {0.0, 3.7, -41.0, 88.8}) {
    const double v = evaluate1(f, t).real();
    CHECK((v == 1.0 || v == -1.0 || v == 0.0));
    CHECK(std::abs(e.value(t) - evaluate1(f, t)) <= 1e-15);
  }
}

TEST_CASE("every corpus entry passes its own verification checks") {
  for (const std::string& name : corpus_names()) {
    const VerifyReport rep = corpus_verify(name, 4);
    CHECK(rep.all_pass);
    CHECK(!rep.outcomes.empty());
    for (const CheckOutcome& c : rep.outcomes) {
      INFO(name << ":" << c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("corpus descriptors respect the declared sup bound on a dense scan") {
  for (const std::string& name : corpus_names()) {
    const CorpusEntry& e = corpus_get(name);
    const FunctionDescriptor f = corpus_function(name);
    double sup = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double t = 100.0 * static_cast<double>(i) / 999.0;
      sup = std::max(sup, std::abs(evaluate1(f, t)));
    }
    CHECK(sup <= e.sup_on(100.0) + 1e-12);
  }
}

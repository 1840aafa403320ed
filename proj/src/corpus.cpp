#include "metap/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "metap/errors.hpp"
#include "metap/numeric.hpp"
#include "metap/pseudometrics.hpp"

namespace metap {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kSqrt2 = std::sqrt(2.0);

double odd_double_factorial(int N) {
  double v = 1.0;
  for (int k = 1; k <= N; ++k) v *= 2.0 * k + 1.0;
  return v;
}

// ---- semi-anti: sum of e^{ix/(2m+1)} / m^2 ------------------------------

Complex semi_anti_partial(double t, int N) {
  Complex s(0.0, 0.0);
  for (int m = 1; m <= N; ++m) {
    const double phase = t / (2.0 * m + 1.0);
    const double w = 1.0 / (static_cast<double>(m) * m);
    s += Complex(w * std::cos(phase), w * std::sin(phase));
  }
  return s;
}

double semi_anti_sup_tail(int N) { return trigamma(static_cast<double>(N) + 1.0); }

double semi_anti_var1_tail(int N) {
  const double x = static_cast<double>(N);
  const double sum = trigamma(x + 1.0) - 2.0 * (digamma(x + 1.5) - digamma(x + 1.0));
  return 2.0 * sum;
}

// ---- haraux: sum of (1/m) sin^2(t / 2^m) --------------------------------

Complex haraux_partial(double t, int N) {
  double s = 0.0;
  double scale = 0.5;  // 2^-m
  for (int m = 1; m <= N; ++m) {
    const double u = std::sin(t * scale);
    s += u * u / static_cast<double>(m);
    scale *= 0.5;
  }
  return Complex(s, 0.0);
}

double haraux_sup_tail(int N, double t_max) {
  double s = 0.0;
  double scale = std::ldexp(1.0, -(N + 1));  // 2^-(N+1)
  for (int m = N + 1;; ++m) {
    const double x = std::abs(t_max) * scale;
    const double term = std::min(1.0, x * x) / static_cast<double>(m);
    s += term;
    scale *= 0.5;
    if (term < 1e-300 || (x < 1.0 && term < s * 1e-18)) break;
    if (m > N + 4000) break;
  }
  return s;
}

double haraux_var1_tail(int N) {
  double head = 0.0;
  double scale = 0.5;
  for (int m = 1; m <= N; ++m) {
    head += scale / static_cast<double>(m);
    scale *= 0.5;
  }
  return 2.0 * (std::log(2.0) - head);
}

// ---- gevrey: F_s(x) = sum of k^{-1/4} phi_{s,k}(x), s > 1 ----------------

double gevrey_g(double s, double x) {
  if (x <= 0.0) return 0.0;
  return std::exp(-std::pow(x, 1.0 / (1.0 - s)));
}

double gevrey_psi(double s, double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return gevrey_g(s, x) * gevrey_g(s, 1.0 - x);
}

// The unit bump of block n starts at every odd multiple of 2^n, so bumps of
// distinct blocks never overlap in their interiors and the covering block of
// x is read off the dyadic valuation of floor(x).
Complex gevrey_partial(double s, double t, int N) {
  const double fl = std::floor(t);
  if (fl == 0.0 || std::abs(fl) > 9.0e15) return Complex(0.0, 0.0);
  long long m = static_cast<long long>(fl);
  const unsigned long long am = static_cast<unsigned long long>(m < 0 ? -m : m);
  int n = 0;
  unsigned long long v = am;
  while ((v & 1ULL) == 0ULL) {
    v >>= 1;
    ++n;
  }
  if (n < 1 || n > N) return Complex(0.0, 0.0);
  const double val = std::pow(static_cast<double>(n), -0.25) * gevrey_psi(s, t - fl);
  return Complex(val, 0.0);
}

const double kPsiMax = std::exp(-4.0);

double gevrey_sup_tail(int N, double t_max) {
  if (std::ldexp(1.0, N + 1) > std::abs(t_max) + 1.0) return 0.0;
  return std::pow(static_cast<double>(N) + 1.0, -0.25) * kPsiMax;
}

// ---- stepanov pair: zeta, sin(1/zeta), g = zeta'/zeta^2 cos(1/zeta) ------

double zeta_fn(double t) { return 2.0 + std::cos(t) + std::cos(kSqrt2 * t); }
double zeta_prime_fn(double t) { return -std::sin(t) - kSqrt2 * std::sin(kSqrt2 * t); }

double stepanov_sin_fn(double t) { return std::sin(1.0 / zeta_fn(t)); }

double stepanov_g_fn(double t) {
  const double z = zeta_fn(t);
  return zeta_prime_fn(t) / (z * z) * std::cos(1.0 / z);
}

// ---- shared check helpers ------------------------------------------------

std::vector<double> scan_points(double lo, double hi, std::size_t count) {
  std::vector<double> ts(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) ts[i] = lo + step * static_cast<double>(i);
  return ts;
}

CheckOutcome envelope_check(const std::string& name, const FunctionDescriptor& f,
                            const std::function<double(double)>& envelope, double lo, double hi,
                            std::size_t count, int threads) {
  CheckOutcome out;
  out.name = name;
  const std::vector<double> ts = scan_points(lo, hi, count);
  const CVec vals = evaluate_grid1(f, ts, threads);
  double worst = -std::numeric_limits<double>::infinity();
  double worst_t = lo;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double excess = std::abs(vals[i]) - envelope(ts[i]);
    if (excess > worst) {
      worst = excess;
      worst_t = ts[i];
    }
  }
  out.measured = worst;
  out.bound = 1e-12;
  out.pass = worst <= out.bound;
  out.note = "max(|f| - envelope) at t = " + fmt17(worst_t);
  return out;
}

CheckOutcome residual_check(const std::string& name, const FunctionDescriptor& f, double tau,
                            Complex c, double bound, int threads) {
  PseudometricSpec sup_spec;
  sup_spec.family = MetricFamily::WeightedSup;
  sup_spec.window = Box{{0.0, 20.0}};
  sup_spec.grid_density = 16;
  CheckOutcome out;
  out.name = name;
  out.measured = periodicity_residual1(f, tau, c, sup_spec, threads);
  out.bound = bound;
  out.pass = out.measured <= bound;
  out.note = "sup residual of f(.+ " + fmt17(tau) + ") - c f on [0,20]";
  return out;
}

}  // namespace

double corpus_zeta(double t) { return zeta_fn(t); }
double corpus_zeta_prime(double t) { return zeta_prime_fn(t); }

std::vector<double> locate_g_peaks(double t_max, int count) {
  if (count < 1 || !(t_max > kPi)) return {};
  std::vector<std::pair<double, long long>> ranked;  // (zeta value, odd q)
  for (long long q = 1; static_cast<double>(q) * kPi <= t_max; q += 2)
    ranked.emplace_back(zeta_fn(static_cast<double>(q) * kPi), q);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::vector<double> out;
  const std::size_t k = std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(count));
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(static_cast<double>(ranked[i].second) * kPi);
  return out;
}

FunctionDescriptor gevrey_block(double s, int n) {
  if (!(s > 1.0)) throw ValidationError("gevrey block: requires s > 1");
  if (n < 1) throw ValidationError("gevrey block: requires n >= 1");
  CustomFn fn;
  fn.tag = "gevrey_block";
  fn.dim = 1;
  fn.codim = 1;
  fn.sup_hint = kPsiMax;
  fn.meta = "{\"gevrey_block\":{\"s\":" + fmt17(s) + ",\"n\":" + std::to_string(n) + "}}";
  const double period = std::ldexp(1.0, n + 1);
  const double start = std::ldexp(1.0, n);
  fn.eval1 = [s, period, start](double t) -> Complex {
    double u = t - period * std::floor(t / period);
    return Complex(gevrey_psi(s, u - start), 0.0);
  };
  return make_custom(std::move(fn));
}

namespace {

std::map<std::string, CorpusEntry> build_registry();

const std::map<std::string, CorpusEntry>& registry() {
  static const std::map<std::string, CorpusEntry> reg = build_registry();
  return reg;
}

CorpusEntry make_semi_anti() {
  CorpusEntry e;
  e.name = "semi-anti";
  e.complex_valued = true;
  e.is_series = true;
  e.default_trunc = 200;
  e.term = [](double t, int m) -> Complex {
    const double phase = t / (2.0 * m + 1.0);
    const double w = 1.0 / (static_cast<double>(m) * m);
    return Complex(w * std::cos(phase), w * std::sin(phase));
  };
  e.partial = [](double t, int N) { return semi_anti_partial(t, N); };
  e.value = [](double t) { return semi_anti_partial(t, 200); };
  e.sup_tail = [](int N, double) { return semi_anti_sup_tail(N); };
  e.var1_tail = [](int N) { return semi_anti_var1_tail(N); };
  e.freq_family = [](int budget) {
    std::vector<double> fs;
    for (int m = 1; m <= budget; ++m) fs.push_back(1.0 / (2.0 * m + 1.0));
    return fs;
  };
  e.partial_trig_poly = [](int N) -> std::optional<TrigPolynomial> {
    TrigPolynomial p;
    p.dim = 1;
    p.codim = 1;
    for (int m = 1; m <= N; ++m) {
      TrigTerm t;
      t.freq = {1.0 / (2.0 * m + 1.0)};
      t.coeff = {Complex(1.0 / (static_cast<double>(m) * m), 0.0)};
      p.terms.push_back(std::move(t));
    }
    return p;
  };
  const double full_sup = kPi * kPi / 6.0;
  e.envelope = [full_sup](double) { return full_sup; };
  e.sup_on = [full_sup](double) { return full_sup; };
  e.notes = "uniform limit of anti-periodic partial sums; partial N flips sign "
            "under a shift of pi times the product of 3,5,...,2N+1";

  e.checks.push_back({"sup_envelope", [](int threads) {
    return envelope_check("sup_envelope", corpus_function("semi-anti"),
                          [](double) { return kPi * kPi / 6.0; }, 0.0, 100.0, 1000, threads);
  }});
  for (int N : {1, 2, 3}) {
    e.checks.push_back({"anti_period_partial_" + std::to_string(N), [N](int threads) {
      const double tau = kPi * odd_double_factorial(N);
      return residual_check("anti_period_partial_" + std::to_string(N),
                            corpus_function("semi-anti", N), tau, Complex(-1.0, 0.0), 1e-10,
                            threads);
    }});
  }
  e.checks.push_back({"tail_dominates_measured", [](int threads) {
    CheckOutcome out;
    out.name = "tail_dominates_measured";
    PseudometricSpec sup_spec;
    sup_spec.family = MetricFamily::WeightedSup;
    sup_spec.window = Box{{0.0, 50.0}};
    const DistanceValue d = distance(sup_spec, corpus_function("semi-anti"),
                                     corpus_function("semi-anti", 4), threads);
    out.measured = d.value;
    out.bound = semi_anti_sup_tail(4) + 1e-12;
    out.pass = out.measured <= out.bound;
    out.note = "sup distance to partial N=4 vs analytic tail";
    return out;
  }});
  return e;
}

CorpusEntry make_haraux() {
  CorpusEntry e;
  e.name = "haraux";
  e.complex_valued = false;
  e.is_series = true;
  e.default_trunc = 64;
  e.term = [](double t, int m) -> Complex {
    const double u = std::sin(t * std::ldexp(1.0, -m));
    return Complex(u * u / static_cast<double>(m), 0.0);
  };
  e.partial = [](double t, int N) { return haraux_partial(t, N); };
  e.value = [](double t) { return haraux_partial(t, 64); };
  e.sup_tail = [](int N, double t_max) { return haraux_sup_tail(N, t_max); };
  e.var1_tail = [](int N) { return haraux_var1_tail(N); };
  e.freq_family = [](int budget) {
    std::vector<double> fs;
    fs.push_back(0.0);
    for (int m = 1; fs.size() + 2 <= static_cast<std::size_t>(budget) + 1; ++m) {
      const double w = std::ldexp(1.0, 1 - m);
      fs.push_back(w);
      fs.push_back(-w);
    }
    if (fs.size() > static_cast<std::size_t>(budget)) fs.resize(budget);
    return fs;
  };
  e.partial_trig_poly = [](int N) -> std::optional<TrigPolynomial> {
    TrigPolynomial p;
    p.dim = 1;
    p.codim = 1;
    double c0 = 0.0;
    for (int m = 1; m <= N; ++m) c0 += 0.5 / static_cast<double>(m);
    TrigTerm dc;
    dc.freq = {0.0};
    dc.coeff = {Complex(c0, 0.0)};
    p.terms.push_back(std::move(dc));
    for (int m = 1; m <= N; ++m) {
      const double w = std::ldexp(1.0, 1 - m);
      const Complex c(-0.25 / static_cast<double>(m), 0.0);
      TrigTerm plus;
      plus.freq = {w};
      plus.coeff = {c};
      p.terms.push_back(std::move(plus));
      TrigTerm minus;
      minus.freq = {-w};
      minus.coeff = {c};
      p.terms.push_back(std::move(minus));
    }
    return p;
  };
  e.envelope = [](double t) { return haraux_sup_tail(0, std::abs(t)); };
  e.sup_on = [](double t_max) { return haraux_sup_tail(0, t_max); };
  e.notes = "unbounded on R (grows like log log); every sup bound is window-aware";

  e.checks.push_back({"zero_at_origin", [](int) {
    CheckOutcome out;
    out.name = "zero_at_origin";
    out.measured = std::abs(haraux_partial(0.0, 64));
    out.bound = 1e-15;
    out.pass = out.measured <= out.bound;
    out.note = "every term vanishes at t = 0";
    return out;
  }});
  e.checks.push_back({"sup_envelope", [](int threads) {
    return envelope_check("sup_envelope", corpus_function("haraux"),
                          [](double t) { return haraux_sup_tail(0, std::abs(t)) + 1e-12; }, 0.0,
                          100.0, 1000, threads);
  }});
  for (int N : {3, 6}) {
    e.checks.push_back({"partial_period_" + std::to_string(N), [N](int threads) {
      const double tau = 2.0 * kPi * std::ldexp(1.0, N);
      return residual_check("partial_period_" + std::to_string(N),
                            corpus_function("haraux", N), tau, Complex(1.0, 0.0), 1e-10,
                            threads);
    }});
  }
  return e;
}

CorpusEntry make_gevrey() {
  CorpusEntry e;
  e.name = "gevrey";
  e.complex_valued = false;
  e.is_series = true;
  e.default_trunc = 30;
  const double s = 2.0;
  e.term = [s](double t, int m) -> Complex {
    const Complex full = gevrey_partial(s, t, m);
    const Complex prev = gevrey_partial(s, t, m - 1);
    return full - prev;
  };
  e.partial = [s](double t, int N) { return gevrey_partial(s, t, N); };
  e.value = [s](double t) { return gevrey_partial(s, t, 30); };
  e.sup_tail = [](int N, double t_max) { return gevrey_sup_tail(N, t_max); };
  e.var1_tail = nullptr;
  e.freq_family = [](int budget) {
    std::vector<double> fs;
    for (int n = 1; n <= budget; ++n) fs.push_back(kPi * std::ldexp(1.0, -n));
    return fs;
  };
  e.partial_trig_poly = nullptr;
  e.envelope = [](double) { return kPsiMax; };
  e.sup_on = [](double) { return kPsiMax; };
  e.notes = "Gevrey-class bump blocks, s = 2; admissible weighted-space sequence "
            "x_n = 2^n + 1/(2n) with weight nu(x_n) = n^{1/8}";

  e.checks.push_back({"sup_envelope", [](int threads) {
    return envelope_check("sup_envelope", corpus_function("gevrey"),
                          [](double) { return kPsiMax; }, 0.0, 100.0, 1000, threads);
  }});
  e.checks.push_back({"bump_max_value", [](int) {
    CheckOutcome out;
    out.name = "bump_max_value";
    out.measured = std::abs(gevrey_psi(2.0, 0.5) - kPsiMax);
    out.bound = 1e-16;
    out.pass = out.measured <= out.bound;
    out.note = "psi(1/2) equals e^-4";
    return out;
  }});
  for (int n : {1, 2, 3}) {
    e.checks.push_back({"block_period_" + std::to_string(n), [n](int threads) {
      const double tau = std::ldexp(1.0, n + 1);
      return residual_check("block_period_" + std::to_string(n), gevrey_block(2.0, n), tau,
                            Complex(1.0, 0.0), 1e-10, threads);
    }});
  }
  return e;
}

CorpusEntry make_stepanov_sin() {
  CorpusEntry e;
  e.name = "stepanov-sin";
  e.complex_valued = false;
  e.is_series = false;
  e.value = [](double t) { return Complex(stepanov_sin_fn(t), 0.0); };
  e.freq_family = [](int budget) {
    std::vector<double> fs;
    for (int m = 1; static_cast<int>(fs.size()) < budget; ++m) {
      fs.push_back(static_cast<double>(m));
      if (static_cast<int>(fs.size()) < budget) fs.push_back(kSqrt2 * m);
    }
    return fs;
  };
  e.envelope = [](double) { return 1.0; };
  e.sup_on = [](double) { return 1.0; };
  e.notes = "sin(1/zeta) with zeta = 2 + cos t + cos(sqrt(2) t) > 0";

  e.checks.push_back({"sup_envelope", [](int threads) {
    return envelope_check("sup_envelope", corpus_function("stepanov-sin"),
                          [](double) { return 1.0; }, 0.0, 1000.0, 2000, threads);
  }});
  e.checks.push_back({"zeta_positive", [](int) {
    CheckOutcome out;
    out.name = "zeta_positive";
    double zmin = std::numeric_limits<double>::infinity();
    const std::vector<double> ts = scan_points(0.0, 10000.0, 100001);
    for (double t : ts) zmin = std::min(zmin, zeta_fn(t));
    out.measured = zmin;
    out.bound = 0.0;
    out.pass = zmin > 0.0;
    out.note = "min zeta over 1e5-point scan of [0, 1e4]";
    return out;
  }});
  return e;
}

CorpusEntry make_stepanov_g() {
  CorpusEntry e;
  e.name = "stepanov-g";
  e.complex_valued = false;
  e.is_series = false;
  e.value = [](double t) { return Complex(stepanov_g_fn(t), 0.0); };
  e.freq_family = [](int budget) {
    std::vector<double> fs;
    for (int m = 1; static_cast<int>(fs.size()) < budget; ++m) {
      fs.push_back(static_cast<double>(m));
      if (static_cast<int>(fs.size()) < budget) fs.push_back(kSqrt2 * m);
    }
    return fs;
  };
  e.envelope = [](double t) {
    const double z = zeta_fn(t);
    return (1.0 + kSqrt2) / (z * z);
  };
  e.sup_on = [](double) { return std::numeric_limits<double>::infinity(); };
  e.notes = "g = zeta'/zeta^2 cos(1/zeta) = -(d/dt) sin(1/zeta); not Stepanov bounded";

  e.checks.push_back({"pointwise_envelope", [](int threads) {
    return envelope_check("pointwise_envelope", corpus_function("stepanov-g"),
                          [](double t) {
                            const double z = zeta_fn(t);
                            return (1.0 + kSqrt2) / (z * z) + 1e-12;
                          },
                          0.0, 100.0, 1000, threads);
  }});
  e.checks.push_back({"antiderivative_identity", [](int) {
    CheckOutcome out;
    out.name = "antiderivative_identity";
    const QuadratureResult q =
        adaptive_integrate([](double t) { return stepanov_g_fn(t); }, 10.0, 12.0);
    const double closed = stepanov_sin_fn(10.0) - stepanov_sin_fn(12.0);
    out.measured = std::abs(q.value - closed);
    out.bound = 1e-8;
    out.pass = q.converged && out.measured <= out.bound;
    out.note = "integral of g over [10,12] vs sin(1/zeta(10)) - sin(1/zeta(12))";
    return out;
  }});
  e.checks.push_back({"peak_median_domination", [](int) {
    CheckOutcome out;
    out.name = "peak_median_domination";
    QuadratureOptions opt;
    opt.eval_budget = 200000;
    opt.rel_tol = 1e-4;
    auto window_integral = [&opt](double lo, double hi) {
      return adaptive_integrate([](double t) { return std::abs(stepanov_g_fn(t)); }, lo, hi,
                                opt)
          .value;
    };
    double prev_ratio = 1.0;
    bool increasing = true;
    double last_ratio = 0.0;
    for (double T : {100.0, 1000.0}) {
      std::vector<double> base;
      for (int j = 0; j < 8; ++j) {
        const double t = T * static_cast<double>(j) / 8.0;
        base.push_back(window_integral(t, t + 2.0 * kPi));
      }
      std::sort(base.begin(), base.end());
      const double median = base[base.size() / 2];
      const std::vector<double> peaks = locate_g_peaks(T, 1);
      const double peak = window_integral(peaks[0] - kPi, peaks[0] + kPi);
      last_ratio = peak / median;
      increasing = increasing && last_ratio > prev_ratio;
      prev_ratio = last_ratio;
    }
    out.measured = last_ratio;
    out.bound = 1.0;
    out.pass = increasing && last_ratio > 1.0;
    out.note = "peak-window integral over baseline median, growing across decades";
    return out;
  }});
  return e;
}

CorpusEntry make_sign_pair() {
  CorpusEntry e;
  e.name = "sign-pair";
  e.complex_valued = false;
  e.is_series = false;
  e.value = [](double t) {
    const double re = semi_anti_partial(t, 200).real();
    return Complex(re > 0.0 ? 1.0 : (re < 0.0 ? -1.0 : 0.0), 0.0);
  };
  e.freq_family = [](int budget) {
    std::vector<double> fs;
    for (int m = 1; m <= budget; ++m) fs.push_back(1.0 / (2.0 * m + 1.0));
    return fs;
  };
  e.envelope = [](double) { return 1.0; };
  e.sup_on = [](double) { return 1.0; };
  e.notes = "sign of the real part of the semi-anti base function";

  e.checks.push_back({"values_in_range", [](int threads) {
    return envelope_check("values_in_range", corpus_function("sign-pair"),
                          [](double) { return 1.0; }, 0.0, 200.0, 2000, threads);
  }});
  e.checks.push_back({"exact_sign_flip_partial1", [](int) {
    CheckOutcome out;
    out.name = "exact_sign_flip_partial1";
    ScalarMap sign_map;
    sign_map.kind = ScalarMapKind::Sign;
    const FunctionDescriptor base = corpus_function("semi-anti", 1);
    const FunctionDescriptor sig = compose_scalar(sign_map, base);
    const FunctionDescriptor shifted = translate1(sig, 3.0 * kPi);
    double worst = 0.0;
    const std::vector<double> ts = scan_points(0.05, 20.05, 201);
    for (double t : ts) {
      const double re = evaluate(base, RVec{t})[0].real();
      if (std::abs(re) <= 1e-12) continue;
      const double v =
          std::abs(evaluate(shifted, RVec{t})[0].real() + evaluate(sig, RVec{t})[0].real());
      worst = std::max(worst, v);
    }
    out.measured = worst;
    out.bound = 0.0;
    out.pass = worst <= 0.0;
    out.note = "sign of the N=1 partial flips exactly under a 3 pi shift";
    return out;
  }});
  return e;
}

std::map<std::string, CorpusEntry> build_registry() {
  std::map<std::string, CorpusEntry> reg;
  for (CorpusEntry e :
       {make_semi_anti(), make_haraux(), make_gevrey(), make_stepanov_sin(), make_stepanov_g(),
        make_sign_pair()})
    reg.emplace(e.name, std::move(e));
  return reg;
}

}  // namespace

const CorpusEntry& corpus_get(const std::string& name) {
  const auto& reg = registry();
  const auto it = reg.find(name);
  if (it == reg.end()) throw ValidationError("corpus: unknown entry '" + name + "'");
  return it->second;
}

bool corpus_has(const std::string& name) { return registry().count(name) != 0; }

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

FunctionDescriptor corpus_function(const std::string& name, int trunc) {
  const CorpusEntry& e = corpus_get(name);
  if (e.is_series) return make_series(name, trunc);
  if (name == "sign-pair") {
    ScalarMap sign_map;
    sign_map.kind = ScalarMapKind::Sign;
    return compose_scalar(sign_map, make_series("semi-anti", 200));
  }
  CustomFn fn;
  fn.tag = "corpus";
  fn.dim = 1;
  fn.codim = 1;
  fn.meta = "{\"corpus\":\"" + name + "\"}";
  const double sup = e.sup_on(std::numeric_limits<double>::infinity());
  fn.sup_hint = std::isfinite(sup) ? sup : -1.0;
  const CorpusEntry* entry = &e;
  fn.eval1 = [entry](double t) { return entry->value(t); };
  return make_custom(std::move(fn));
}

VerifyReport corpus_verify(const std::string& name, int threads) {
  const CorpusEntry& e = corpus_get(name);
  VerifyReport rep;
  rep.entry = name;
  for (const CorpusCheck& c : e.checks) {
    rep.outcomes.push_back(c.run(threads));
    rep.all_pass = rep.all_pass && rep.outcomes.back().pass;
  }
  return rep;
}

}  // namespace metap

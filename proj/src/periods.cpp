#include "metap/periods.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "metap/errors.hpp"

namespace metap {

namespace {

Complex integer_power(Complex c, int m) {
  if (m < 0) {
    if (c == Complex(0.0, 0.0))
      throw ValidationError("semi_periodicity: c must be nonzero for type 2");
    return Complex(1.0, 0.0) / integer_power(c, -m);
  }
  Complex out(1.0, 0.0);
  for (int k = 0; k < m; ++k) out *= c;
  return out;
}

double seminorm_residual(const FunctionDescriptor& h, const SeminormSpec& spec, int threads) {
  switch (spec.family) {
    case SeminormFamily::Stepanov:
      return stepanov_seminorm(h, spec, threads);
    case SeminormFamily::Weyl:
      return weyl_seminorm_curve(h, spec, threads).limit_estimate;
    case SeminormFamily::Besicovitch:
      return besicovitch_seminorm_curve(h, spec, threads).limit_estimate;
  }
  throw ValidationError("seminorm: unknown family");
}

}  // namespace

double residual_norm(const FunctionDescriptor& a, const FunctionDescriptor& b,
                     const ResidualSpec& spec, int threads) {
  if (const auto* ps = std::get_if<PseudometricSpec>(&spec))
    return distance(*ps, a, b, threads).value;
  return seminorm_residual(subtract(a, b), std::get<SeminormSpec>(spec), threads);
}

double translation_residual(const FunctionDescriptor& f, double tau, Complex c,
                            const ResidualSpec& spec, int threads) {
  if (f.empty()) throw ValidationError("translation_residual: empty function");
  const RVec shift(static_cast<std::size_t>(f.dim()), tau);
  return residual_norm(translate(f, shift), scale(f, c), spec, threads);
}

PeriodScanReport scan_eps_periods(const FunctionDescriptor& f, const ResidualSpec& spec,
                                  Complex c, double epsilon, double tau_lo, double tau_hi,
                                  double tau_step, int threads) {
  if (!(tau_step > 0.0)) throw ValidationError("scan: tau_step must be positive");
  if (!(tau_hi > tau_lo)) throw ValidationError("scan: empty tau range");
  if (!(epsilon >= 0.0)) throw ValidationError("scan: epsilon must be nonnegative");

  PeriodScanReport rep;
  rep.c = c;
  rep.epsilon = epsilon;
  rep.tau_lo = tau_lo;
  rep.tau_hi = tau_hi;
  rep.tau_step = tau_step;

  const std::size_t count =
      static_cast<std::size_t>(std::floor((tau_hi - tau_lo) / tau_step + 1e-9)) + 1;
  rep.taus.resize(count);
  for (std::size_t k = 0; k < count; ++k) rep.taus[k] = tau_lo + k * tau_step;
  rep.residuals.resize(count);
  parallel_for(count, threads,
               [&](std::size_t k) { rep.residuals[k] = translation_residual(f, rep.taus[k], c, spec, 1); });

  for (std::size_t k = 0; k < count; ++k)
    if (rep.residuals[k] <= epsilon) rep.periods.push_back(rep.taus[k]);

  const auto residual_at = [&](double tau) {
    return translation_residual(f, tau, c, spec, threads);
  };

  std::size_t run_start = 0;
  for (std::size_t i = 0; i <= rep.periods.size(); ++i) {
    const bool flush = i == rep.periods.size() ||
                       (i > 0 && rep.periods[i] - rep.periods[i - 1] > 1.5 * tau_step);
    if (!flush) continue;
    if (i > run_start) {
      PeriodCluster cl;
      cl.lo = rep.periods[run_start];
      cl.hi = rep.periods[i - 1];
      const double a = std::max(tau_lo, cl.lo - tau_step);
      const double b = std::min(tau_hi, cl.hi + tau_step);
      cl.center = golden_section_minimize(residual_at, a, b, 1e-3 * tau_step);
      cl.residual = residual_at(cl.center);
      rep.clusters.push_back(cl);
    }
    run_start = i;
  }

  if (rep.periods.empty()) {
    rep.empty_set = true;
    rep.max_gap = std::numeric_limits<double>::infinity();
    rep.boundary_censored = true;
    return rep;
  }

  double interior = 0.0;
  for (std::size_t i = 1; i < rep.periods.size(); ++i)
    interior = std::max(interior, rep.periods[i] - rep.periods[i - 1]);
  const double head = rep.periods.front() - tau_lo;
  const double tail = tau_hi - rep.periods.back();
  rep.max_gap = std::max({interior, head, tail});
  rep.boundary_censored = std::max(head, tail) >= interior && rep.max_gap > tau_step;
  return rep;
}

double relative_density(const PeriodScanReport& report) {
  if (report.empty_set)
    throw ValidationError("relative_density: no epsilon-period found in the scan window");
  return report.max_gap;
}

double doss_period_check(const FunctionDescriptor& f, double tau, Complex c,
                         const SeminormSpec& spec, int threads) {
  const RVec shift(static_cast<std::size_t>(f.dim()), tau);
  const FunctionDescriptor h = subtract(translate(f, shift), scale(f, c));
  return besicovitch_seminorm_curve(h, spec, threads).limit_estimate;
}

SemiPeriodicityReport semi_periodicity_check(const FunctionDescriptor& f, Complex c,
                                             double omega, const ResidualSpec& spec, int m_max,
                                             int type, int threads) {
  if (f.dim() != 1) throw ValidationError("semi_periodicity: requires a one-dimensional domain");
  if (omega == 0.0) throw ValidationError("semi_periodicity: omega must be nonzero");
  if (m_max < 1) throw ValidationError("semi_periodicity: m_max must be positive");
  if (type != 1 && type != 2) throw ValidationError("semi_periodicity: type must be 1 or 2");

  SemiPeriodicityReport rep;
  rep.type = type;
  if (type == 2)
    for (int m = -m_max; m <= -1; ++m) rep.ms.push_back(m);
  for (int m = 1; m <= m_max; ++m) rep.ms.push_back(m);

  rep.residuals.resize(rep.ms.size());
  parallel_for(rep.ms.size(), threads, [&](std::size_t i) {
    const int m = rep.ms[i];
    rep.residuals[i] = translation_residual(f, m * omega, integer_power(c, m), spec, 1);
  });
  for (double r : rep.residuals) rep.max_residual = std::max(rep.max_residual, r);
  return rep;
}

NormalityReport normality_check(const FunctionDescriptor& f,
                                const std::vector<double>& translates,
                                const ResidualSpec& spec, double cauchy_eps, int threads) {
  if (translates.empty()) throw ValidationError("normality: needs at least one translate");
  if (!(cauchy_eps >= 0.0)) throw ValidationError("normality: epsilon must be nonnegative");

  NormalityReport rep;
  rep.translates = translates;
  rep.cauchy_epsilon = cauchy_eps;

  const std::size_t n = translates.size();
  std::vector<FunctionDescriptor> shifted;
  shifted.reserve(n);
  for (double tau : translates)
    shifted.push_back(translate(f, RVec(static_cast<std::size_t>(f.dim()), tau)));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<double> pair_vals(pairs.size(), 0.0);
  parallel_for(pairs.size(), threads, [&](std::size_t k) {
    pair_vals[k] = residual_norm(shifted[pairs[k].first], shifted[pairs[k].second], spec, 1);
  });
  std::vector<std::vector<double>> R(n, std::vector<double>(n, 0.0));
  for (std::size_t k = 0; k < pairs.size(); ++k)
    R[pairs[k].first][pairs[k].second] = R[pairs[k].second][pairs[k].first] = pair_vals[k];

  std::vector<std::size_t> best;
  for (std::size_t seed = 0; seed < n; ++seed) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (R[seed][i] > cauchy_eps) continue;
      bool ok = true;
      for (std::size_t m : members) ok = ok && R[m][i] <= cauchy_eps;
      if (ok) members.push_back(i);
    }
    if (members.size() > best.size()) best = members;
  }
  rep.selected = best;
  for (std::size_t a = 0; a < best.size(); ++a)
    for (std::size_t b = a + 1; b < best.size(); ++b) {
      const double r = R[best[a]][best[b]];
      rep.pair_residuals.push_back(r);
      rep.achieved_epsilon = std::max(rep.achieved_epsilon, r);
    }
  return rep;
}

}  // namespace metap

#include "metap/pseudometrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "metap/errors.hpp"

namespace metap {

namespace {

double vec_norm(const CVec& v) {
  if (v.size() == 1) return std::abs(v[0]);
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

void validate_spec(const PseudometricSpec& spec, const FunctionDescriptor& f,
                   const FunctionDescriptor& g) {
  if (f.dim() != g.dim() || f.codim() != g.codim())
    throw ValidationError("distance: mismatched function dimensions");
  if (static_cast<int>(spec.window.size()) != f.dim())
    throw ValidationError("distance: window arity does not match the functions");
  if (spec.family == MetricFamily::WeightedLp || spec.family == MetricFamily::BvpComposite ||
      spec.family == MetricFamily::BvpSlow) {
    if (!(spec.p >= 1.0)) throw ValidationError("distance: requires p >= 1");
  }
  if ((spec.family == MetricFamily::BvpComposite || spec.family == MetricFamily::BvpSlow) &&
      f.dim() != 1)
    throw ValidationError("distance: BV_p families require a one-dimensional domain");
}

std::vector<CVec> sampled_difference(const FunctionDescriptor& f, const FunctionDescriptor& g,
                                     const UniformGrid& grid, int threads) {
  std::vector<CVec> fv = evaluate_grid(f, grid, threads);
  const std::vector<CVec> gv = evaluate_grid(g, grid, threads);
  for (std::size_t i = 0; i < fv.size(); ++i)
    for (std::size_t j = 0; j < fv[i].size(); ++j) fv[i][j] -= gv[i][j];
  return fv;
}

double bvp_value(const FunctionDescriptor& f, const FunctionDescriptor& g,
                 const PseudometricSpec& spec, int density, bool with_anchor_term,
                 int threads) {
  const double lo = spec.window[0].lo;
  const double hi = spec.window[0].hi;
  const UniformGrid ext = UniformGrid::make(Box{{lo - 1.0, hi + 1.0}}, density);
  std::vector<CVec> diff = sampled_difference(f, g, ext, threads);
  const std::size_t inner = static_cast<std::size_t>(2 * density);  // window node span
  const std::size_t anchors = ext.npts[0] - inner;
  std::vector<double> u(inner + 1);
  for (std::size_t j = 0; j <= inner; ++j)
    u[j] = static_cast<double>(j) / static_cast<double>(density);

  std::vector<double> per_anchor(anchors, 0.0);
  parallel_for(anchors, threads, [&](std::size_t i) {
    std::vector<CVec> window(diff.begin() + i, diff.begin() + i + inner + 1);
    double v = p_variation(u, window, spec.p);
    if (with_anchor_term) v += vec_norm(diff[i + static_cast<std::size_t>(density)]);
    per_anchor[i] = v;
  });
  double sup = 0.0;
  for (double v : per_anchor) sup = std::max(sup, v);
  return sup;
}

double family_value(const PseudometricSpec& spec, const FunctionDescriptor& f,
                    const FunctionDescriptor& g, int density, int threads) {
  switch (spec.family) {
    case MetricFamily::WeightedSup: {
      const UniformGrid grid = UniformGrid::make(spec.window, density);
      const std::vector<CVec> diff = sampled_difference(f, g, grid, threads);
      double sup = 0.0;
      for (std::size_t i = 0; i < diff.size(); ++i)
        sup = std::max(sup, vec_norm(diff[i]) * spec.nu.eval(grid.point(i)));
      return sup;
    }
    case MetricFamily::WeightedLp: {
      const UniformGrid grid = UniformGrid::make(spec.window, density);
      const std::vector<CVec> diff = sampled_difference(f, g, grid, threads);
      std::vector<double> terms(diff.size());
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < diff.size(); ++i) {
        grid.unflatten(i, idx);
        double w = 1.0;
        for (std::size_t ax = 0; ax < idx.size(); ++ax) w *= grid.trap_weight(ax, idx[ax]);
        const double nu = spec.nu.eval(grid.point(i));
        terms[i] = w * std::pow(vec_norm(diff[i]) * nu, spec.p);
      }
      const double cell = std::pow(grid.step(), static_cast<double>(grid.axes()));
      return std::pow(pairwise_sum(terms) * cell, 1.0 / spec.p);
    }
    case MetricFamily::BvpComposite:
      return bvp_value(f, g, spec, density, true, threads);
    case MetricFamily::BvpSlow:
      return bvp_value(f, g, spec, density, false, threads);
    case MetricFamily::ArctanSup: {
      const UniformGrid grid = UniformGrid::make(spec.window, density);
      const std::vector<CVec> fv = evaluate_grid(f, grid, threads);
      const std::vector<CVec> gv = evaluate_grid(g, grid, threads);
      const bool scalar = f.codim() == 1;
      double sup = 0.0;
      for (std::size_t i = 0; i < fv.size(); ++i) {
        const double a = scalar ? fv[i][0].real() : vec_norm(fv[i]);
        const double b = scalar ? gv[i][0].real() : vec_norm(gv[i]);
        sup = std::max(sup, std::abs(std::atan(a) - std::atan(b)));
      }
      return sup;
    }
    case MetricFamily::CompactExhaustion: {
      const UniformGrid grid = UniformGrid::make(spec.window, density);
      const std::vector<CVec> diff = sampled_difference(f, g, grid, threads);
      constexpr int kMax = 40;  // tail of sum 2^-k below 1e-12
      std::vector<double> sk(kMax + 1, 0.0);
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < diff.size(); ++i) {
        grid.unflatten(i, idx);
        double r = 0.0;
        for (std::size_t ax = 0; ax < idx.size(); ++ax)
          r = std::max(r, std::abs(grid.coord(ax, idx[ax])));
        const int kmin = std::max(1, static_cast<int>(std::ceil(r - 1e-12)));
        if (kmin <= kMax) sk[kmin] = std::max(sk[kmin], vec_norm(diff[i]));
      }
      double total = 0.0;
      double running = 0.0;
      double w = 1.0;
      for (int k = 1; k <= kMax; ++k) {
        w *= 0.5;
        running = std::max(running, sk[k]);
        total += w * running / (1.0 + running);
      }
      return total;
    }
    case MetricFamily::DiscreteUnit: {
      const UniformGrid grid = UniformGrid::make(spec.window, density);
      const std::vector<CVec> diff = sampled_difference(f, g, grid, threads);
      for (const CVec& v : diff)
        for (const Complex& z : v)
          if (z != Complex(0.0, 0.0)) return 1.0;
      return 0.0;
    }
  }
  throw ValidationError("distance: unknown family");
}

}  // namespace

std::string metric_family_name(MetricFamily f) {
  switch (f) {
    case MetricFamily::WeightedSup: return "weighted_sup";
    case MetricFamily::WeightedLp: return "weighted_lp";
    case MetricFamily::BvpComposite: return "bvp_composite";
    case MetricFamily::BvpSlow: return "bvp_slow";
    case MetricFamily::ArctanSup: return "arctan_sup";
    case MetricFamily::CompactExhaustion: return "compact_exhaustion";
    case MetricFamily::DiscreteUnit: return "discrete_unit";
  }
  return "unknown";
}

MetricFamily metric_family_from_name(const std::string& s) {
  if (s == "weighted_sup" || s == "sup") return MetricFamily::WeightedSup;
  if (s == "weighted_lp" || s == "lp") return MetricFamily::WeightedLp;
  if (s == "bvp_composite" || s == "bvp") return MetricFamily::BvpComposite;
  if (s == "bvp_slow") return MetricFamily::BvpSlow;
  if (s == "arctan_sup" || s == "arctan") return MetricFamily::ArctanSup;
  if (s == "compact_exhaustion" || s == "compact") return MetricFamily::CompactExhaustion;
  if (s == "discrete_unit" || s == "discrete") return MetricFamily::DiscreteUnit;
  throw ValidationError("distance: unknown metric family '" + s + "'");
}

DistanceValue distance(const PseudometricSpec& spec, const FunctionDescriptor& f,
                       const FunctionDescriptor& g, int threads) {
  validate_spec(spec, f, g);
  const double base = family_value(spec, f, g, spec.grid_density, threads);
  const double refined = family_value(spec, f, g, 2 * spec.grid_density, threads);
  DistanceValue out;
  out.value = refined;
  out.grid_used = 1.0 / (2.0 * spec.grid_density);
  out.refinement_delta = std::abs(refined - base);
  return out;
}

namespace detail {

double vp_increment(const CVec& a, const CVec& b, double p) {
  double d;
  if (a.size() == 1) {
    d = std::abs(a[0] - b[0]);
  } else {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += std::norm(a[j] - b[j]);
    d = std::sqrt(s);
  }
  return p == 1.0 ? d : std::pow(d, p);
}

}  // namespace detail

double p_variation(const std::vector<double>& u, const std::vector<CVec>& v, double p) {
  if (u.size() != v.size()) throw ValidationError("p_variation: node/value size mismatch");
  if (u.size() < 2) throw ValidationError("p_variation: needs at least 2 samples");
  if (!(p >= 1.0)) throw ValidationError("p_variation: requires p >= 1");
  for (std::size_t i = 1; i < u.size(); ++i)
    if (!(u[i] > u[i - 1])) throw ValidationError("p_variation: nodes must be increasing");

  const std::size_t n = v.size();
  std::vector<double> best(n, 0.0);
  double answer = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    double bi = 0.0;
    for (std::size_t j = 0; j < i; ++j)
      bi = std::max(bi, best[j] + detail::vp_increment(v[j], v[i], p));
    best[i] = bi;
    answer = std::max(answer, bi);
  }
  return p == 1.0 ? answer : std::pow(answer, 1.0 / p);
}

double p_variation(const std::vector<double>& u, const std::vector<double>& v, double p) {
  std::vector<CVec> cv(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) cv[i] = CVec{Complex(v[i], 0.0)};
  return p_variation(u, cv, p);
}

double periodicity_residual(const FunctionDescriptor& f, const RVec& omega, Complex c,
                            const PseudometricSpec& spec, int threads) {
  bool zero = true;
  for (double w : omega) zero = zero && w == 0.0;
  if (zero) throw ValidationError("periodicity_residual: omega must be nonzero");
  return distance(spec, translate(f, omega), scale(f, c), threads).value;
}

double periodicity_residual1(const FunctionDescriptor& f, double omega, Complex c,
                             const PseudometricSpec& spec, int threads) {
  return periodicity_residual(f, RVec{omega}, c, spec, threads);
}

namespace {

FunctionDescriptor zero_like(const FunctionDescriptor& f) {
  TrigPolynomial z;
  z.dim = f.dim();
  z.codim = f.codim();
  return make_trig_poly(std::move(z));
}

}  // namespace

AxiomReport check_space_axioms(const PseudometricSpec& spec,
                               const std::vector<FunctionDescriptor>& samples, int threads) {
  if (samples.size() < 3)
    throw ValidationError("check_space_axioms: needs at least 3 sample functions");
  AxiomReport rep;
  rep.spec = spec;
  const std::size_t n = samples.size();
  const FunctionDescriptor zero = zero_like(samples.front());

  std::vector<std::vector<double>> D(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      D[i][j] = distance(spec, samples[i], samples[j], threads).value;

  {
    AxiomCheck c;
    c.name = "identity";
    c.bound = 1e-10;
    for (std::size_t i = 0; i < n; ++i)
      if (D[i][i] > c.measured) {
        c.measured = D[i][i];
        c.witness = "sample " + std::to_string(i);
      }
    c.pass = c.measured <= c.bound;
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c;
    c.name = "symmetry";
    c.bound = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double r = std::abs(D[i][j] - D[j][i]);
        if (r > c.measured) {
          c.measured = r;
          c.witness = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    c.pass = c.measured <= c.bound;
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c;
    c.name = "triangle";
    c.bound = 1e-10;
    c.measured = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const double r = D[i][k] - D[i][j] - D[j][k];
          if (r > c.measured) {
            c.measured = r;
            c.witness = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                        std::to_string(k) + ")";
          }
        }
    c.pass = c.measured <= c.bound;
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c;
    c.name = "scaling_bounded";
    c.falsifiable_only = true;
    c.bound = 1e6;
    for (std::size_t i = 0; i < n; ++i) {
      const double d0 = distance(spec, samples[i], zero, threads).value;
      if (d0 <= 1e-14) continue;
      for (double dp : {2.0, 5.0}) {
        const double ds = distance(spec, scale(samples[i], Complex(dp, 0.0)), zero, threads).value;
        const double ratio = ds / ((1.0 + dp) * d0);
        if (ratio > c.measured) {
          c.measured = ratio;
          c.witness = "sample " + std::to_string(i) + ", factor " + fmt17(dp);
        }
      }
    }
    c.pass = std::isfinite(c.measured) && c.measured <= c.bound;
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c;
    c.name = "scaling_vanishes";
    c.falsifiable_only = true;
    c.bound = 0.1;
    constexpr double kEps = 1e-3;
    for (std::size_t i = 0; i < n; ++i) {
      const double d0 = distance(spec, samples[i], zero, threads).value;
      if (d0 <= 1e-14) continue;
      const double ds =
          distance(spec, scale(samples[i], Complex(kEps, 0.0)), zero, threads).value;
      const double ratio = ds / d0;
      if (ratio > c.measured) {
        c.measured = ratio;
        c.witness = "sample " + std::to_string(i) + " under factor 1e-3";
      }
    }
    c.pass = c.measured <= c.bound;
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c;
    c.name = "subadditivity";
    c.falsifiable_only = true;
    c.bound = 1e-10;
    c.measured = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const FunctionDescriptor sum =
            lincomb({{Complex(1.0, 0.0), samples[i]}, {Complex(1.0, 0.0), samples[j]}});
        const double lhs = distance(spec, sum, zero, threads).value;
        const double rhs = distance(spec, samples[i], zero, threads).value +
                           distance(spec, samples[j], zero, threads).value;
        if (lhs - rhs > c.measured) {
          c.measured = lhs - rhs;
          c.witness = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    c.pass = c.measured <= c.bound;
    rep.checks.push_back(c);
  }
  for (const AxiomCheck& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

}  // namespace metap

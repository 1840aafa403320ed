#include "metap/gennorms.hpp"

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

void validate_common(const SeminormSpec& spec, const FunctionDescriptor& h) {
  if (h.empty()) throw ValidationError("seminorm: empty function");
  if (!(spec.p >= 1.0)) throw ValidationError("seminorm: requires p >= 1");
  if (spec.anchor_density < 1 || spec.quad_density < 1)
    throw ValidationError("seminorm: densities must be positive");
  if (spec.grid_count < 1) throw ValidationError("seminorm: grid_count must be positive");
  if (!(spec.ratio > 1.0)) throw ValidationError("seminorm: ratio must exceed 1");
}

// phi(|h|)^p at every node of the grid.
std::vector<double> integrand_on_grid(const FunctionDescriptor& h, const UniformGrid& grid,
                                      const SeminormSpec& spec, int threads) {
  const std::vector<CVec> vals = evaluate_grid(h, grid, threads);
  std::vector<double> out(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i)
    out[i] = std::pow(spec.phi.apply(vec_norm(vals[i])), spec.p);
  return out;
}

double trapezoid_box(const std::vector<double>& terms, const UniformGrid& grid) {
  std::vector<double> weighted(terms.size());
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    grid.unflatten(i, idx);
    double w = 1.0;
    for (std::size_t ax = 0; ax < idx.size(); ++ax) w *= grid.trap_weight(ax, idx[ax]);
    weighted[i] = w * terms[i];
  }
  const double cell = std::pow(grid.step(), static_cast<double>(grid.axes()));
  return pairwise_sum(weighted) * cell;
}

void finish_curve(SeminormCurve& curve) {
  curve.estimator = "max over final third of geometric grid";
  const std::size_t n = curve.values.size();
  const std::size_t tail = std::max<std::size_t>(1, n / 3);
  double mx = 0.0;
  double mn = std::numeric_limits<double>::infinity();
  for (std::size_t i = n - tail; i < n; ++i) {
    mx = std::max(mx, curve.values[i]);
    mn = std::min(mn, curve.values[i]);
  }
  curve.limit_estimate = mx;
  curve.converged = mx <= 1e-12 || (mx - mn) <= 0.1 * mx;
}

}  // namespace

std::string seminorm_family_name(SeminormFamily f) {
  switch (f) {
    case SeminormFamily::Stepanov: return "stepanov";
    case SeminormFamily::Weyl: return "weyl";
    case SeminormFamily::Besicovitch: return "besicovitch";
  }
  return "unknown";
}

SeminormFamily seminorm_family_from_name(const std::string& s) {
  if (s == "stepanov") return SeminormFamily::Stepanov;
  if (s == "weyl" || s == "equi_weyl" || s == "equi-weyl") return SeminormFamily::Weyl;
  if (s == "besicovitch") return SeminormFamily::Besicovitch;
  throw ValidationError("seminorm: unknown family '" + s + "'");
}

std::vector<CVec> bochner_transform(const FunctionDescriptor& f, double t, const Box& omega,
                                    int density, int threads) {
  Box shifted = omega;
  for (AxisRange& ax : shifted) {
    ax.lo += t;
    ax.hi += t;
  }
  return evaluate_grid(f, UniformGrid::make(shifted, density), threads);
}

double stepanov_seminorm(const FunctionDescriptor& h, const SeminormSpec& spec, int threads) {
  validate_common(spec, h);
  if (static_cast<int>(spec.omega.size()) != h.dim())
    throw ValidationError("seminorm: omega arity does not match the function");

  const int ad = spec.anchor_density;
  const int qd = spec.quad_density;

  if (h.dim() == 1 && spec.anchor_window.size() == 1 && qd % ad == 0) {
    // Aligned fast path: one evaluation pass shared by all anchors.
    const double alo = spec.anchor_window[0].lo;
    const double ahi = spec.anchor_window[0].hi;
    const UniformGrid ext =
        UniformGrid::make(Box{{alo + spec.omega[0].lo, ahi + spec.omega[0].hi}}, qd);
    const std::vector<double> H = integrand_on_grid(h, ext, spec, threads);
    const UniformGrid cell = UniformGrid::make(spec.omega, qd);
    const std::size_t m = cell.npts[0] - 1;
    std::vector<double> NU(m + 1);
    for (std::size_t k = 0; k <= m; ++k)
      NU[k] = std::pow(spec.nu.eval1(cell.coord(0, k)), spec.p) * cell.trap_weight(0, k);

    const std::size_t stride = static_cast<std::size_t>(qd / ad);
    const std::size_t anchors =
        static_cast<std::size_t>(std::llround((ahi - alo) * ad)) + 1;
    std::vector<double> per_anchor(anchors, 0.0);
    parallel_for(anchors, threads, [&](std::size_t i) {
      const std::size_t b = i * stride;
      std::vector<double> terms(m + 1);
      for (std::size_t k = 0; k <= m; ++k) terms[k] = H[b + k] * NU[k];
      per_anchor[i] = pairwise_sum(terms) / qd;
    });
    double sup = 0.0;
    for (double v : per_anchor) sup = std::max(sup, v);
    return spec.outer_scale * std::pow(sup, 1.0 / spec.p);
  }

  // General path: one shifted cell quadrature per anchor point.
  const UniformGrid anchors = UniformGrid::make(spec.anchor_window, ad);
  const UniformGrid cell = UniformGrid::make(spec.omega, qd);
  std::vector<double> NU(cell.total());
  for (std::size_t k = 0; k < cell.total(); ++k)
    NU[k] = std::pow(spec.nu.eval(cell.point(k)), spec.p);
  std::vector<double> per_anchor(anchors.total(), 0.0);
  parallel_for(anchors.total(), threads, [&](std::size_t i) {
    const RVec t = anchors.point(i);
    std::vector<double> terms(cell.total());
    for (std::size_t k = 0; k < cell.total(); ++k) {
      RVec x = cell.point(k);
      for (std::size_t ax = 0; ax < x.size(); ++ax) x[ax] += t[ax % t.size()];
      terms[k] = std::pow(spec.phi.apply(vec_norm(evaluate(h, x))), spec.p) * NU[k];
    }
    per_anchor[i] = trapezoid_box(terms, cell);
  });
  double sup = 0.0;
  for (double v : per_anchor) sup = std::max(sup, v);
  return spec.outer_scale * std::pow(sup, 1.0 / spec.p);
}

SeminormCurve weyl_seminorm_curve(const FunctionDescriptor& h, const SeminormSpec& spec,
                                  int threads) {
  validate_common(spec, h);
  if (h.dim() != 1 || spec.anchor_window.size() != 1)
    throw ValidationError("seminorm: weyl curve requires a one-dimensional domain");
  if (!(spec.l0 > 0.0)) throw ValidationError("seminorm: l0 must be positive");
  const int ad = spec.anchor_density;
  const int qd = spec.quad_density;
  if (qd % ad != 0)
    throw ValidationError("seminorm: quad_density must be a multiple of anchor_density");

  std::vector<double> ls(spec.grid_count);
  for (int k = 0; k < spec.grid_count; ++k) ls[k] = spec.l0 * std::pow(spec.ratio, k);
  const double l_max = ls.back();

  const double alo = spec.anchor_window[0].lo;
  const double ahi = spec.anchor_window[0].hi;
  const UniformGrid ext = UniformGrid::make(Box{{alo, ahi + l_max}}, qd);
  const std::vector<double> H = integrand_on_grid(h, ext, spec, threads);

  const std::size_t stride = static_cast<std::size_t>(qd / ad);
  const std::size_t anchors = static_cast<std::size_t>(std::llround((ahi - alo) * ad)) + 1;

  SeminormCurve curve;
  curve.abscissae = ls;
  curve.values.resize(ls.size());
  for (std::size_t li = 0; li < ls.size(); ++li) {
    const double l = ls[li];
    const std::size_t m = static_cast<std::size_t>(std::llround(l * qd));
    if (m == 0 || m + 1 > ext.npts[0])
      throw ValidationError("seminorm: weyl cell does not fit the quadrature grid");
    std::vector<double> NU(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
      const double s = static_cast<double>(k) / qd;
      const double w = (k == 0 || k == m) ? 0.5 : 1.0;
      NU[k] = std::pow(spec.nu.eval1(s), spec.p) * w;
    }
    std::vector<double> per_anchor(anchors, 0.0);
    parallel_for(anchors, threads, [&](std::size_t i) {
      const std::size_t b = i * stride;
      std::vector<double> terms(m + 1);
      for (std::size_t k = 0; k <= m; ++k) terms[k] = H[b + k] * NU[k];
      per_anchor[i] = pairwise_sum(terms) / qd;
    });
    double sup = 0.0;
    for (double v : per_anchor) sup = std::max(sup, v);
    curve.values[li] = std::pow(l, -1.0 / spec.p) * std::pow(sup, 1.0 / spec.p);
  }
  finish_curve(curve);
  return curve;
}

SeminormCurve besicovitch_seminorm_curve(const FunctionDescriptor& h, const SeminormSpec& spec,
                                         int threads) {
  validate_common(spec, h);
  if (!(spec.t0 > 0.0)) throw ValidationError("seminorm: t0 must be positive");
  if (!(spec.a >= 0.0)) throw ValidationError("seminorm: exponent a must be nonnegative");

  SeminormCurve curve;
  curve.abscissae.resize(spec.grid_count);
  curve.values.resize(spec.grid_count);
  for (int k = 0; k < spec.grid_count; ++k) {
    const double t = spec.t0 * std::pow(spec.ratio, k);
    curve.abscissae[k] = t;
    Box box(h.dim(), AxisRange{-t, t});
    const UniformGrid grid = UniformGrid::make(box, spec.quad_density);
    std::vector<double> terms = integrand_on_grid(h, grid, spec, threads);
    for (std::size_t i = 0; i < terms.size(); ++i)
      terms[i] *= std::pow(spec.nu.eval(grid.point(i)), spec.p);
    const double integral = trapezoid_box(terms, grid);
    curve.values[k] = std::pow(t, -spec.a) * std::pow(integral, 1.0 / spec.p);
  }
  finish_curve(curve);
  return curve;
}

double besicovitch_pseudometric(const FunctionDescriptor& f, const FunctionDescriptor& g,
                                const SeminormSpec& spec, int threads) {
  return besicovitch_seminorm_curve(subtract(f, g), spec, threads).limit_estimate;
}

StepanovScanReport stepanov_bound_scan(const FunctionDescriptor& f, double p,
                                       const std::vector<double>& T_grid,
                                       const StepanovScanOptions& opt, int threads) {
  if (f.dim() != 1) throw ValidationError("scan: requires a one-dimensional domain");
  if (!(p >= 1.0)) throw ValidationError("scan: requires p >= 1");
  if (opt.baseline_anchors < 2) throw ValidationError("scan: needs at least 2 anchors");
  if (!(opt.window_len > 0.0)) throw ValidationError("scan: window length must be positive");

  StepanovScanReport rep;
  rep.window_len = opt.window_len;
  rep.p = p;

  QuadratureOptions qopt;
  qopt.abs_tol = opt.abs_tol;
  qopt.rel_tol = opt.rel_tol;
  qopt.eval_budget = opt.eval_budget;
  const auto integrand = [&](double x) {
    return std::pow(std::abs(evaluate1(f, x)), p);
  };

  for (double T : T_grid) {
    if (!(T > opt.window_len)) throw ValidationError("scan: T must exceed the window length");
    std::vector<double> starts;
    const double span = T - opt.window_len;
    for (int j = 0; j < opt.baseline_anchors; ++j)
      starts.push_back(span * j / (opt.baseline_anchors - 1));
    for (double hintc : opt.peak_hints)
      if (hintc <= T) starts.push_back(std::max(0.0, hintc - 0.5 * opt.window_len));

    std::vector<QuadratureResult> results(starts.size());
    parallel_for(starts.size(), threads, [&](std::size_t i) {
      results[i] = adaptive_integrate(integrand, starts[i], starts[i] + opt.window_len, qopt);
    });

    StepanovScanPoint pt;
    pt.T = T;
    for (std::size_t i = 0; i < starts.size(); ++i) {
      pt.evals += results[i].evals;
      if (!results[i].converged) pt.converged = false;
      if (results[i].value > pt.max_integral) {
        pt.max_integral = results[i].value;
        pt.argmax_t = starts[i];
      }
    }
    if (!pt.converged) rep.all_converged = false;
    rep.points.push_back(pt);
  }
  return rep;
}

}  // namespace metap

#include "metap/convops.hpp"

#include <algorithm>
#include <cmath>

#include "metap/errors.hpp"

namespace metap {

namespace {

constexpr double kPi = 3.14159265358979323846;

double window_abs_radius(const std::vector<double>& ts) {
  double r = 0.0;
  for (double t : ts) r = std::max(r, std::abs(t));
  return r;
}

// Fixed point of S -> truncation_support(sup over reach(S)); the sup grows at
// most logarithmically with the radius, so a few rounds settle it.
double settle_support(const Kernel& kernel, const FunctionDescriptor& f, double t_radius,
                      double tol, double* f_sup_out) {
  double S = 10.0;
  double f_sup = 0.0;
  for (int iter = 0; iter < 8; ++iter) {
    f_sup = sup_bound(f, t_radius + S);
    const double S_new = kernel.truncation_support(f_sup, tol);
    if (std::abs(S_new - S) <= 0.01 * std::max(1.0, S)) {
      S = S_new;
      break;
    }
    S = S_new;
  }
  if (f_sup_out) *f_sup_out = f_sup;
  return S;
}

}  // namespace

double Kernel::value(double s) const {
  switch (family) {
    case KernelFamily::ExpDecay:
      return std::exp(-mu * s);
    case KernelFamily::PowerBound:
      return M * std::pow(s, beta - 1.0) / (1.0 + std::pow(s, gamma));
    case KernelFamily::Heat:
      throw KindError("kernel: the heat kernel has no scalar profile; use heat_apply");
  }
  throw KindError("kernel: unknown family");
}

double Kernel::mass() const {
  switch (family) {
    case KernelFamily::ExpDecay:
      return 1.0 / mu;
    case KernelFamily::PowerBound:
      return M * (kPi / gamma) / std::sin(kPi * beta / gamma);
    case KernelFamily::Heat:
      return 1.0;
  }
  throw KindError("kernel: unknown family");
}

double Kernel::tail_mass(double S) const {
  switch (family) {
    case KernelFamily::ExpDecay:
      return std::exp(-mu * S) / mu;
    case KernelFamily::PowerBound:
      // R(s) <= M s^{beta-1-gamma} pointwise.
      return M * std::pow(S, beta - gamma) / (gamma - beta);
    case KernelFamily::Heat:
      throw KindError("kernel: heat tails are handled by the quadrature radius rule");
  }
  throw KindError("kernel: unknown family");
}

double Kernel::truncation_support(double f_sup, double tol) const {
  if (!(tol > 0.0)) throw ValidationError("kernel: tolerance must be positive");
  if (!(f_sup >= 0.0)) throw ValidationError("kernel: sup bound must be nonnegative");
  if (f_sup == 0.0) return 0.0;
  switch (family) {
    case KernelFamily::ExpDecay:
      return std::max(0.0, std::log(f_sup / (mu * tol)) / mu);
    case KernelFamily::PowerBound:
      return std::pow(f_sup * M / ((gamma - beta) * tol), 1.0 / (gamma - beta));
    case KernelFamily::Heat:
      return std::sqrt(std::max(0.0, 4.0 * t0 * std::log(f_sup / tol))) + 4.0 * std::sqrt(t0);
  }
  throw KindError("kernel: unknown family");
}

Kernel make_exp_decay(double mu) {
  if (!(mu > 0.0)) throw ValidationError("kernel: exp_decay rate must be positive");
  Kernel k;
  k.family = KernelFamily::ExpDecay;
  k.mu = mu;
  return k;
}

Kernel make_power_bound(double M, double beta, double gamma) {
  if (!(M > 0.0)) throw ValidationError("kernel: power_bound scale must be positive");
  if (!(beta > 0.0) || !(gamma > beta))
    throw ValidationError("kernel: power_bound needs 0 < beta < gamma");
  Kernel k;
  k.family = KernelFamily::PowerBound;
  k.M = M;
  k.beta = beta;
  k.gamma = gamma;
  return k;
}

ConvolutionResult infinite_convolution(const Kernel& kernel, const FunctionDescriptor& f,
                                       const std::vector<double>& t_points, double tail_tol,
                                       int threads) {
  if (f.empty()) throw ValidationError("convolution: empty function");
  if (f.dim() != 1 || f.codim() != 1)
    throw ValidationError("convolution: requires scalar functions on the line");
  if (kernel.family == KernelFamily::Heat)
    throw KindError("convolution: use heat_apply for the heat semigroup");
  if (!(tail_tol > 0.0)) throw ValidationError("convolution: tail tolerance must be positive");

  ConvolutionResult res;

  if (kernel.family == KernelFamily::ExpDecay) {
    if (std::optional<TrigPolynomial> poly = as_trig_poly(f)) {
      for (TrigTerm& term : poly->terms) {
        const Complex div(kernel.mu, term.freq[0]);
        for (Complex& a : term.coeff) a /= div;
      }
      res.F = make_trig_poly(std::move(*poly));
      res.exact = true;
      res.samples.resize(t_points.size());
      parallel_for(t_points.size(), threads,
                   [&](std::size_t i) { res.samples[i] = evaluate1(res.F, t_points[i]); });
      return res;
    }
  }

  double f_sup = 0.0;
  const double S = settle_support(kernel, f, window_abs_radius(t_points), tail_tol, &f_sup);
  res.truncation_S = S;
  res.tail_bound = S > 0.0 ? f_sup * kernel.tail_mass(S) : 0.0;

  QuadratureOptions qopt;
  qopt.abs_tol = std::max(tail_tol, 1e-12);
  qopt.rel_tol = 1e-8;

  const Kernel ker = kernel;
  const FunctionDescriptor fn = f;
  const auto eval_at = [ker, fn, S, qopt](double t, bool* ok) {
    ComplexQuadratureResult q;
    if (ker.family == KernelFamily::ExpDecay) {
      q = adaptive_integrate_c(
          [&](double s) { return std::exp(-ker.mu * s) * evaluate1(fn, t - s); }, 0.0, S, qopt);
    } else {
      // u = s^beta removes the endpoint singularity of s^{beta-1}.
      const double b = ker.beta;
      const double ge = ker.gamma / b;
      q = adaptive_integrate_c(
          [&](double u) {
            const double s = std::pow(u, 1.0 / b);
            return (ker.M / b) * evaluate1(fn, t - s) / (1.0 + std::pow(u, ge));
          },
          0.0, std::pow(S, b), qopt);
    }
    if (ok) *ok = q.converged;
    return q.value;
  };

  res.samples.resize(t_points.size());
  std::vector<char> ok(t_points.size(), 1);
  parallel_for(t_points.size(), threads, [&](std::size_t i) {
    bool c = true;
    res.samples[i] = eval_at(t_points[i], &c);
    ok[i] = c ? 1 : 0;
  });
  for (char c : ok) res.converged = res.converged && c;

  CustomFn node;
  node.tag = "kernel_transform";
  node.dim = 1;
  node.codim = 1;
  node.meta = "{\"custom\":\"kernel_transform\"}";
  node.sup_hint = kernel.mass() * f_sup;
  node.eval1 = [eval_at](double t) { return eval_at(t, nullptr); };
  node.eval = [eval_at](const RVec& x) { return CVec{eval_at(x[0], nullptr)}; };
  res.F = make_custom(std::move(node));
  return res;
}

HeatResult heat_apply(const FunctionDescriptor& f, double t0, HeatMethod method,
                      const std::vector<RVec>& points, int threads) {
  if (f.empty()) throw ValidationError("heat: empty function");
  if (!(t0 > 0.0)) throw ValidationError("heat: time must be positive");
  const int n = f.dim();
  if (n != 1 && n != 2) throw ValidationError("heat: dimension must be 1 or 2");
  for (const RVec& p : points)
    if (static_cast<int>(p.size()) != n)
      throw ValidationError("heat: sample point arity does not match the function");

  HeatResult res;

  if (method == HeatMethod::Analytic) {
    std::optional<TrigPolynomial> poly = as_trig_poly(f);
    if (!poly)
      throw KindError("heat: the analytic path requires a trig polynomial");
    for (TrigTerm& term : poly->terms) {
      double l2 = 0.0;
      for (double w : term.freq) l2 += w * w;
      const double factor = std::exp(-l2 * t0);
      for (Complex& a : term.coeff) a *= factor;
    }
    res.F = make_trig_poly(std::move(*poly));
    res.exact = true;
    res.samples.resize(points.size());
    parallel_for(points.size(), threads,
                 [&](std::size_t i) { res.samples[i] = evaluate(res.F, points[i]); });
    return res;
  }

  double pt_radius = 0.0;
  for (const RVec& p : points)
    for (double x : p) pt_radius = std::max(pt_radius, std::abs(x));
  Kernel heat;
  heat.family = KernelFamily::Heat;
  heat.t0 = t0;
  double f_sup = 0.0;
  const double R = settle_support(heat, f, pt_radius, 1e-8, &f_sup);
  res.radius = R;

  const int d = f.codim();
  const FunctionDescriptor fn = f;
  const auto eval_point = [fn, t0, R, n, d](const RVec& x) {
    const double norm1 = 1.0 / std::sqrt(4.0 * kPi * t0);
    CVec out(d);
    if (n == 1) {
      QuadratureOptions qopt;
      qopt.abs_tol = 1e-10;
      qopt.rel_tol = 1e-8;
      for (int j = 0; j < d; ++j) {
        const ComplexQuadratureResult q = adaptive_integrate_c(
            [&](double y) {
              return norm1 * std::exp(-y * y / (4.0 * t0)) * evaluate(fn, RVec{x[0] - y})[j];
            },
            -R, R, qopt);
        out[j] = q.value;
      }
      return out;
    }
    const int density = 32;
    const UniformGrid grid = UniformGrid::make(Box(2, AxisRange{-R, R}), density);
    std::vector<CVec> weighted(grid.total());
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < grid.total(); ++i) {
      grid.unflatten(i, idx);
      const double y0 = grid.coord(0, idx[0]);
      const double y1 = grid.coord(1, idx[1]);
      const double w = grid.trap_weight(0, idx[0]) * grid.trap_weight(1, idx[1]) * norm1 *
                       norm1 * std::exp(-(y0 * y0 + y1 * y1) / (4.0 * t0));
      CVec v = evaluate(fn, RVec{x[0] - y0, x[1] - y1});
      for (Complex& z : v) z *= w;
      weighted[i] = std::move(v);
    }
    const double cell = grid.step() * grid.step();
    CVec comp(grid.total());
    for (int j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < grid.total(); ++i) comp[i] = weighted[i][j];
      out[j] = pairwise_sum(comp) * cell;
    }
    return out;
  };

  res.samples.resize(points.size());
  parallel_for(points.size(), threads,
               [&](std::size_t i) { res.samples[i] = eval_point(points[i]); });

  CustomFn node;
  node.tag = "heat_transform";
  node.dim = n;
  node.codim = d;
  node.meta = "{\"custom\":\"heat_transform\"}";
  node.sup_hint = f_sup;  // the semigroup is an L-infinity contraction
  node.eval = eval_point;
  if (n == 1 && d == 1) node.eval1 = [eval_point](double t) { return eval_point(RVec{t})[0]; };
  res.F = make_custom(std::move(node));
  return res;
}

PreservationReport preservation_report(const FunctionDescriptor& f_in,
                                       const FunctionDescriptor& f_out, const Kernel& kernel,
                                       double tau, Complex c, const Box& window_out,
                                       int anchor_density, double tolerance, int threads) {
  if (window_out.size() != 1 || f_in.dim() != 1 || f_out.dim() != 1)
    throw ValidationError("preservation: requires one-dimensional windows and functions");
  if (!(tolerance >= 0.0)) throw ValidationError("preservation: tolerance must be nonnegative");

  PreservationReport rep;
  rep.tau = tau;
  rep.c = c;
  rep.tolerance = tolerance;
  rep.window_out = window_out;
  rep.mass = kernel.mass();

  double f_sup = 0.0;
  const double reference_radius =
      std::max(std::abs(window_out[0].lo), std::abs(window_out[0].hi)) + std::abs(tau) + 2.0;
  const double S = settle_support(kernel, f_in, reference_radius, 1e-10, &f_sup);
  rep.lookback = S;
  rep.window_in = Box{{window_out[0].lo - S, window_out[0].hi}};
  if (kernel.family == KernelFamily::Heat) rep.window_in[0].hi += S;

  PseudometricSpec spec;
  spec.family = MetricFamily::BvpComposite;
  spec.p = 1.0;
  spec.grid_density = anchor_density;

  spec.window = rep.window_in;
  rep.residual_in =
      distance(spec, translate1(f_in, tau), scale(f_in, c), threads).value;
  spec.window = rep.window_out;
  rep.residual_out =
      distance(spec, translate1(f_out, tau), scale(f_out, c), threads).value;

  const double allowed = rep.mass * rep.residual_in;
  rep.ratio = rep.residual_out == 0.0 && allowed == 0.0 ? 0.0 : rep.residual_out / allowed;
  rep.dominated = rep.residual_out <= allowed + tolerance;
  return rep;
}

}  // namespace metap

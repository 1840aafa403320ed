#include "metap/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "metap/errors.hpp"
#include "metap/io.hpp"

namespace metap {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

std::pair<double, double> parse_range(const std::string& s, const char* what) {
  const std::size_t colon = s.find(':');
  if (colon == std::string::npos)
    throw ValidationError(std::string(what) + ": expected LO:HI, got '" + s + "'");
  try {
    return {std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ValidationError(std::string(what) + ": expected LO:HI, got '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = s.find(sep, start);
    if (end == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& s, const char* what) {
  std::vector<double> out;
  if (s.empty()) return out;
  for (const std::string& tok : split(s, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw ValidationError(std::string(what) + ": '" + tok + "' is not a number");
    }
  }
  return out;
}

std::vector<int> parse_ints(const std::string& s, const char* what) {
  std::vector<int> out;
  for (double x : parse_doubles(s, what)) out.push_back(static_cast<int>(std::llround(x)));
  return out;
}

// fn specs: corpus:NAME[@N] | partial:N (N-partial of the corpus series named
// by --fn) | json:PATH | zero.
FunctionDescriptor parse_fn_spec(const std::string& spec, const FunctionDescriptor* base) {
  if (spec == "zero") {
    TrigPolynomial z;
    if (base && !base->empty()) {
      z.dim = base->dim();
      z.codim = base->codim();
    }
    return make_trig_poly(std::move(z));
  }
  if (spec.rfind("corpus:", 0) == 0) {
    std::string name = spec.substr(7);
    int trunc = -1;
    const std::size_t at = name.find('@');
    if (at != std::string::npos) {
      try {
        trunc = std::stoi(name.substr(at + 1));
      } catch (const std::exception&) {
        throw ValidationError("fn spec: bad truncation in '" + spec + "'");
      }
      name = name.substr(0, at);
    }
    return corpus_function(name, trunc);
  }
  if (spec.rfind("partial:", 0) == 0) {
    if (!base || base->empty())
      throw ValidationError("fn spec: partial: needs a corpus series via --fn");
    const auto* sr = std::get_if<SeriesRef>(&base->node());
    if (!sr) throw ValidationError("fn spec: partial: --fn is not a corpus series");
    int n = 0;
    try {
      n = std::stoi(spec.substr(8));
    } catch (const std::exception&) {
      throw ValidationError("fn spec: bad partial level in '" + spec + "'");
    }
    return corpus_function(sr->name, n);
  }
  if (spec.rfind("json:", 0) == 0) {
    const std::string text = read_text_file(spec.substr(5));
    const Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError("fn spec: invalid JSON in '" + spec + "'");
    try {
      return descriptor_from_json(j);
    } catch (const IoError& e) {
      throw ValidationError(e.what());
    }
  }
  throw ValidationError("fn spec: unknown form '" + spec +
                        "' (use corpus:NAME[@N], partial:N, json:PATH, zero)");
}

struct CommonOpts {
  int threads = 1;
  std::string out_path;
  std::string csv_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--threads", opts.threads, "Worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", opts.out_path, "Write the JSON summary to this path");
  cmd->add_option("--csv", opts.csv_path, "Write the CSV table to this path");
}

struct MetricOpts {
  std::string metric = "weighted_sup";
  double p = 1.0;
  std::string window = "0:100";
  int density = 16;
  double nu_const = 1.0;
  double nu_b = 0.0;
};

void add_metric(CLI::App* cmd, MetricOpts& opts) {
  cmd->add_option("--metric", opts.metric,
                  "Metric family: weighted_sup, weighted_lp, bvp_composite, bvp_slow, "
                  "arctan_sup, compact_exhaustion, discrete_unit (default weighted_sup)");
  cmd->add_option("--p", opts.p, "Exponent p >= 1 (default 1)");
  cmd->add_option("--window", opts.window, "Comparison window LO:HI (default 0:100)");
  cmd->add_option("--density", opts.density, "Grid nodes per unit length (default 16)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--nu-const", opts.nu_const, "Constant weight value (default 1)");
  cmd->add_option("--nu-b", opts.nu_b, "Radial weight exponent b in (1+|x|)^b (default 0)");
}

PseudometricSpec metric_spec(const MetricOpts& opts) {
  PseudometricSpec spec;
  spec.family = metric_family_from_name(opts.metric);
  spec.p = opts.p;
  const auto [lo, hi] = parse_range(opts.window, "--window");
  spec.window = Box{{lo, hi}};
  spec.grid_density = opts.density;
  if (opts.nu_b != 0.0) {
    spec.nu.kind = WeightKind::PowerRadial;
    spec.nu.b = opts.nu_b;
  } else {
    spec.nu.c = opts.nu_const;
  }
  return spec;
}

struct SeminormOpts {
  std::string family = "stepanov";
  double p = 1.0;
  double a = 0.0;
  std::string omega = "0:1";
  std::string anchor_window = "0:100";
  int anchor_density = 16;
  int quad_density = 32;
  double l0 = 1.0;
  double t0 = 10.0;
  double ratio = 2.0;
  int grid_count = 12;
};

// prefix distinguishes these flags when a command also carries metric flags
// (e.g. --sn-family for the seminorm residual backend of `periods`).
void add_seminorm(CLI::App* cmd, SeminormOpts& opts, bool family_required,
                  const std::string& prefix = "") {
  const auto flag = [&prefix](const char* name) { return "--" + prefix + name; };
  CLI::Option* fam = cmd->add_option(
      flag("family"), opts.family, "Seminorm family: stepanov, weyl, besicovitch");
  if (family_required) fam->required();
  if (prefix.empty()) cmd->add_option("--p", opts.p, "Exponent p >= 1 (default 1)");
  cmd->add_option(flag("a"), opts.a, "Outer exponent t^-a, besicovitch only (default 0)");
  cmd->add_option(flag("omega"), opts.omega, "Inner cell LO:HI (default 0:1)");
  cmd->add_option(flag("anchor-window"), opts.anchor_window,
                  "Outer sup window LO:HI (default 0:100)");
  cmd->add_option(flag("anchor-density"), opts.anchor_density, "Anchors per unit (default 16)")
      ->check(CLI::PositiveNumber);
  cmd->add_option(flag("quad-density"), opts.quad_density,
                  "Quadrature nodes per unit (default 32)")
      ->check(CLI::PositiveNumber);
  cmd->add_option(flag("l0"), opts.l0, "First Weyl length (default 1)");
  cmd->add_option(flag("t0"), opts.t0, "First Besicovitch radius (default 10)");
  cmd->add_option(flag("ratio"), opts.ratio, "Geometric grid ratio (default 2)");
  cmd->add_option(flag("grid-count"), opts.grid_count, "Geometric grid size (default 12)")
      ->check(CLI::PositiveNumber);
}

SeminormSpec seminorm_spec(const SeminormOpts& opts) {
  SeminormSpec spec;
  spec.family = seminorm_family_from_name(opts.family);
  spec.p = opts.p;
  spec.a = opts.a;
  const auto [olo, ohi] = parse_range(opts.omega, "--omega");
  spec.omega = Box{{olo, ohi}};
  const auto [alo, ahi] = parse_range(opts.anchor_window, "--anchor-window");
  spec.anchor_window = Box{{alo, ahi}};
  spec.anchor_density = opts.anchor_density;
  spec.quad_density = opts.quad_density;
  spec.l0 = opts.l0;
  spec.t0 = opts.t0;
  spec.ratio = opts.ratio;
  spec.grid_count = opts.grid_count;
  return spec;
}

Json seminorm_config_json(const SeminormOpts& o) {
  return Json{{"family", o.family},       {"p", o.p},
              {"a", o.a},                 {"omega", o.omega},
              {"anchor_window", o.anchor_window}, {"anchor_density", o.anchor_density},
              {"quad_density", o.quad_density},   {"l0", o.l0},
              {"t0", o.t0},               {"ratio", o.ratio},
              {"grid_count", o.grid_count}};
}

Json metric_config_json(const MetricOpts& o) {
  return Json{{"metric", o.metric},   {"p", o.p},
              {"window", o.window},   {"density", o.density},
              {"nu_const", o.nu_const}, {"nu_b", o.nu_b}};
}

// Writes the summary (stdout always; --out additionally) and the CSV.
void emit(const Json& summary, const CommonOpts& common, const std::string& csv) {
  const std::string text = summary.dump(2) + "\n";
  std::cout << text;
  if (!common.out_path.empty()) write_text_file(common.out_path, text);
  if (!common.csv_path.empty()) {
    if (csv.empty()) throw ValidationError("--csv: this command produces no CSV table");
    write_text_file(common.csv_path, csv);
  }
}

// The shared --p flag binds to the metric options; forward it to the
// seminorm backend when that backend is selected.
ResidualSpec backend_spec(const MetricOpts& mopts, const SeminormOpts& sopts,
                          bool seminorm_backend) {
  if (seminorm_backend) {
    SeminormOpts merged = sopts;
    merged.p = mopts.p;
    return seminorm_spec(merged);
  }
  return metric_spec(mopts);
}

FunctionDescriptor random_trig_poly(std::mt19937_64& rng, int terms) {
  TrigPolynomial poly;
  for (int k = 0; k < terms; ++k) {
    TrigTerm term;
    term.freq = RVec{10.0 * uniform01(rng()) - 5.0};
    term.coeff = CVec{Complex(2.0 * uniform01(rng()) - 1.0, 2.0 * uniform01(rng()) - 1.0)};
    poly.terms.push_back(std::move(term));
  }
  poly.merge_duplicates();
  return make_trig_poly(std::move(poly));
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"metap: almost-periodicity analysis toolkit"};
  app.require_subcommand(1);

  int exit_code = kExitOk;

  // seminorm
  CommonOpts sem_common;
  SeminormOpts sem_opts;
  std::string sem_fn, sem_against;
  CLI::App* sem = app.add_subcommand("seminorm", "Stepanov / Weyl / Besicovitch seminorms");
  add_common(sem, sem_common);
  add_seminorm(sem, sem_opts, true);
  sem->add_option("--fn", sem_fn, "Function spec")->required();
  sem->add_option("--against", sem_against, "Measure fn minus this spec");
  sem->callback([&] {
    const SeminormSpec spec = seminorm_spec(sem_opts);
    const FunctionDescriptor f = parse_fn_spec(sem_fn, nullptr);
    FunctionDescriptor h = f;
    if (!sem_against.empty()) h = subtract(f, parse_fn_spec(sem_against, &f));
    Json summary{{"command", "seminorm"}, {"config", seminorm_config_json(sem_opts)}};
    summary["config"]["fn"] = sem_fn;
    summary["config"]["against"] = sem_against;
    std::string csv;
    if (spec.family == SeminormFamily::Stepanov) {
      summary["value"] = stepanov_seminorm(h, spec, sem_common.threads);
    } else {
      const SeminormCurve curve = spec.family == SeminormFamily::Weyl
                                      ? weyl_seminorm_curve(h, spec, sem_common.threads)
                                      : besicovitch_seminorm_curve(h, spec, sem_common.threads);
      summary["curve"] = report_json(curve);
      summary["limit_estimate"] = curve.limit_estimate;
      csv = csv_from_curve(curve, spec.family == SeminormFamily::Weyl ? "l" : "t");
      if (!curve.converged) exit_code = kExitNumeric;
    }
    emit(summary, sem_common, csv);
  });

  // distance
  CommonOpts dist_common;
  MetricOpts dist_opts;
  std::string dist_fn, dist_against;
  CLI::App* dist = app.add_subcommand("distance", "Pseudometric distance between functions");
  add_common(dist, dist_common);
  add_metric(dist, dist_opts);
  dist->add_option("--fn", dist_fn, "Function spec")->required();
  dist->add_option("--against", dist_against, "Second function spec")->required();
  dist->callback([&] {
    const FunctionDescriptor f = parse_fn_spec(dist_fn, nullptr);
    const FunctionDescriptor g = parse_fn_spec(dist_against, &f);
    const DistanceValue v = distance(metric_spec(dist_opts), f, g, dist_common.threads);
    Json summary{{"command", "distance"},
                 {"config", metric_config_json(dist_opts)},
                 {"result", report_json(v)}};
    summary["config"]["fn"] = dist_fn;
    summary["config"]["against"] = dist_against;
    emit(summary, dist_common, {});
  });

  // periods
  CommonOpts per_common;
  MetricOpts per_mopts;
  SeminormOpts per_sopts;
  std::string per_fn, per_range;
  double per_c_re = 1.0, per_c_im = 0.0, per_eps = 0.1, per_step = 0.0;
  CLI::App* per = app.add_subcommand("periods", "Scan for epsilon-periods");
  add_common(per, per_common);
  add_metric(per, per_mopts);
  bool per_seminorm = false;
  per->add_flag("--seminorm-backend", per_seminorm,
                "Residuals via the seminorm backend instead of a pseudometric");
  add_seminorm(per, per_sopts, false, "sn-");
  per->add_option("--fn", per_fn, "Function spec")->required();
  per->add_option("--c", per_c_re, "Multiplier c, real part (default 1)");
  per->add_option("--c-im", per_c_im, "Multiplier c, imaginary part (default 0)");
  per->add_option("--eps", per_eps, "Residual threshold (default 0.1)");
  per->add_option("--range", per_range, "Scan range LO:HI")->required();
  per->add_option("--step", per_step, "Scan step (default max(range/2000, 0.01))");
  per->callback([&] {
    const auto [lo, hi] = parse_range(per_range, "--range");
    const double step = per_step > 0.0 ? per_step : std::max((hi - lo) / 2000.0, 0.01);
    const FunctionDescriptor f = parse_fn_spec(per_fn, nullptr);
    const ResidualSpec spec = backend_spec(per_mopts, per_sopts, per_seminorm);
    const PeriodScanReport rep = scan_eps_periods(
        f, spec, Complex(per_c_re, per_c_im), per_eps, lo, hi, step, per_common.threads);
    Json summary{{"command", "periods"}, {"result", report_json(rep)}};
    summary["config"] =
        per_seminorm ? seminorm_config_json(per_sopts) : metric_config_json(per_mopts);
    summary["config"]["fn"] = per_fn;
    summary["config"]["eps"] = per_eps;
    summary["config"]["range"] = per_range;
    summary["config"]["step"] = step;
    summary["relative_density"] =
        rep.empty_set ? Json(nullptr) : Json(relative_density(rep));
    emit(summary, per_common, csv_from_scan(rep));
  });

  // semicheck
  CommonOpts semi_common;
  MetricOpts semi_mopts;
  SeminormOpts semi_sopts;
  std::string semi_fn;
  double semi_c_re = 1.0, semi_c_im = 0.0, semi_omega = 1.0;
  int semi_mmax = 8, semi_type = 1;
  bool semi_seminorm = false;
  CLI::App* semi = app.add_subcommand("semicheck", "Semi-periodicity residuals over m");
  add_common(semi, semi_common);
  add_metric(semi, semi_mopts);
  semi->add_flag("--seminorm-backend", semi_seminorm,
                 "Residuals via the seminorm backend instead of a pseudometric");
  add_seminorm(semi, semi_sopts, false, "sn-");
  semi->add_option("--fn", semi_fn, "Function spec")->required();
  semi->add_option("--c", semi_c_re, "Multiplier c, real part (default 1)");
  semi->add_option("--c-im", semi_c_im, "Multiplier c, imaginary part (default 0)");
  semi->add_option("--omega", semi_omega, "Base translation length")->required();
  semi->add_option("--m-max", semi_mmax, "Largest multiple m (default 8)")
      ->check(CLI::PositiveNumber);
  semi->add_option("--type", semi_type, "1: m in N, 2: m in Z (default 1)");
  semi->callback([&] {
    const FunctionDescriptor f = parse_fn_spec(semi_fn, nullptr);
    const ResidualSpec spec = backend_spec(semi_mopts, semi_sopts, semi_seminorm);
    const SemiPeriodicityReport rep =
        semi_periodicity_check(f, Complex(semi_c_re, semi_c_im), semi_omega, spec, semi_mmax,
                               semi_type, semi_common.threads);
    Json summary{{"command", "semicheck"}, {"result", report_json(rep)}};
    summary["config"] =
        semi_seminorm ? seminorm_config_json(semi_sopts) : metric_config_json(semi_mopts);
    summary["config"]["fn"] = semi_fn;
    summary["config"]["omega"] = semi_omega;
    emit(summary, semi_common, {});
  });

  // normality
  CommonOpts norm_common;
  MetricOpts norm_mopts;
  SeminormOpts norm_sopts;
  std::string norm_fn, norm_translates;
  double norm_eps = 0.1;
  bool norm_seminorm = false;
  CLI::App* norm = app.add_subcommand("normality", "Cauchy subfamily of translates");
  add_common(norm, norm_common);
  add_metric(norm, norm_mopts);
  norm->add_flag("--seminorm-backend", norm_seminorm,
                 "Residuals via the seminorm backend instead of a pseudometric");
  add_seminorm(norm, norm_sopts, false, "sn-");
  norm->add_option("--fn", norm_fn, "Function spec")->required();
  norm->add_option("--translates", norm_translates, "Comma-separated translate list")
      ->required();
  norm->add_option("--eps", norm_eps, "Cauchy epsilon (default 0.1)");
  norm->callback([&] {
    const FunctionDescriptor f = parse_fn_spec(norm_fn, nullptr);
    const ResidualSpec spec = backend_spec(norm_mopts, norm_sopts, norm_seminorm);
    const NormalityReport rep = normality_check(
        f, parse_doubles(norm_translates, "--translates"), spec, norm_eps, norm_common.threads);
    Json summary{{"command", "normality"}, {"result", report_json(rep)}};
    summary["config"] =
        norm_seminorm ? seminorm_config_json(norm_sopts) : metric_config_json(norm_mopts);
    summary["config"]["fn"] = norm_fn;
    summary["config"]["eps"] = norm_eps;
    emit(summary, norm_common, {});
  });

  // approx
  CommonOpts apx_common;
  MetricOpts apx_mopts;
  SeminormOpts apx_sopts;
  std::string apx_fn, apx_ks;
  double apx_T = 1000.0;
  int apx_density = 16, apx_budget = 16;
  bool apx_seminorm = false;
  CLI::App* apx = app.add_subcommand("approx", "Approximation error curve");
  add_common(apx, apx_common);
  add_metric(apx, apx_mopts);
  apx->add_flag("--seminorm-backend", apx_seminorm,
                "Residuals via the seminorm backend instead of a pseudometric");
  add_seminorm(apx, apx_sopts, false, "sn-");
  apx->add_option("--fn", apx_fn, "Function spec")->required();
  apx->add_option("--ks", apx_ks, "Comma-separated approximation orders")->required();
  apx->add_option("--T", apx_T, "Bohr mean half-length for fitted polynomials (default 1000)");
  apx->add_option("--mean-density", apx_density, "Bohr mean grid density (default 16)")
      ->check(CLI::PositiveNumber);
  apx->add_option("--budget", apx_budget, "Frequency candidate budget (default 16)")
      ->check(CLI::PositiveNumber);
  apx->callback([&] {
    const FunctionDescriptor f = parse_fn_spec(apx_fn, nullptr);
    const std::vector<int> ks = parse_ints(apx_ks, "--ks");
    if (ks.empty()) throw ValidationError("--ks: need at least one order");
    std::vector<FunctionDescriptor> approximants;
    if (const auto* sr = std::get_if<SeriesRef>(&f.node())) {
      for (int k : ks) approximants.push_back(corpus_function(sr->name, k));
    } else {
      const std::vector<RVec> freqs = frequency_candidates(f, apx_budget);
      for (int k : ks) {
        if (k < 1 || k > static_cast<int>(freqs.size()))
          throw ValidationError("--ks: order exceeds the frequency candidate list");
        const std::vector<RVec> head(freqs.begin(), freqs.begin() + k);
        approximants.push_back(make_trig_poly(
            fit_trig_polynomial(f, head, apx_T, apx_density, apx_common.threads)));
      }
    }
    const ResidualSpec spec = backend_spec(apx_mopts, apx_sopts, apx_seminorm);
    const ApproximationCurve curve =
        approximation_curve(f, approximants, ks, spec, apx_common.threads);
    Json summary{{"command", "approx"}, {"result", report_json(curve)}};
    summary["config"] =
        apx_seminorm ? seminorm_config_json(apx_sopts) : metric_config_json(apx_mopts);
    summary["config"]["fn"] = apx_fn;
    summary["config"]["ks"] = ks;
    emit(summary, apx_common, csv_from_approximation(curve));
  });

  // convolve
  CommonOpts conv_common;
  std::string conv_fn, conv_kernel = "exp_decay", conv_points;
  double conv_mu = 1.0, conv_M = 1.0, conv_beta = 0.5, conv_gamma = 2.0, conv_tol = 1e-10;
  CLI::App* conv = app.add_subcommand("convolve", "One-sided infinite convolution");
  add_common(conv, conv_common);
  conv->add_option("--fn", conv_fn, "Function spec")->required();
  conv->add_option("--kernel", conv_kernel, "exp_decay or power_bound (default exp_decay)");
  conv->add_option("--mu", conv_mu, "exp_decay rate (default 1)");
  conv->add_option("--M", conv_M, "power_bound scale (default 1)");
  conv->add_option("--beta", conv_beta, "power_bound exponent beta (default 0.5)");
  conv->add_option("--gamma", conv_gamma, "power_bound exponent gamma (default 2)");
  conv->add_option("--points", conv_points, "Comma-separated sample points")->required();
  conv->add_option("--tail-tol", conv_tol, "Truncation tail tolerance (default 1e-10)");
  conv->callback([&] {
    const FunctionDescriptor f = parse_fn_spec(conv_fn, nullptr);
    Kernel kernel;
    if (conv_kernel == "exp_decay") {
      kernel = make_exp_decay(conv_mu);
    } else if (conv_kernel == "power_bound") {
      kernel = make_power_bound(conv_M, conv_beta, conv_gamma);
    } else {
      throw ValidationError("--kernel: unknown family '" + conv_kernel + "'");
    }
    const std::vector<double> pts = parse_doubles(conv_points, "--points");
    const ConvolutionResult res =
        infinite_convolution(kernel, f, pts, conv_tol, conv_common.threads);
    Json summary{{"command", "convolve"}, {"result", report_json(res, pts)}};
    summary["config"] = Json{{"fn", conv_fn},       {"kernel", conv_kernel},
                             {"mu", conv_mu},       {"M", conv_M},
                             {"beta", conv_beta},   {"gamma", conv_gamma},
                             {"tail_tol", conv_tol}};
    if (!res.converged) exit_code = kExitNumeric;
    emit(summary, conv_common, {});
  });

  // heat
  CommonOpts heat_common;
  std::string heat_fn, heat_points, heat_method = "analytic";
  double heat_t0 = 1.0;
  CLI::App* heat = app.add_subcommand("heat", "Gaussian semigroup at time t0");
  add_common(heat, heat_common);
  heat->add_option("--fn", heat_fn, "Function spec")->required();
  heat->add_option("--t0", heat_t0, "Semigroup time (default 1)");
  heat->add_option("--method", heat_method, "analytic or quadrature (default analytic)");
  heat->add_option("--points", heat_points,
                   "Comma-separated points; X:Y tokens for two dimensions")
      ->required();
  heat->callback([&] {
    const FunctionDescriptor f = parse_fn_spec(heat_fn, nullptr);
    HeatMethod method;
    if (heat_method == "analytic") {
      method = HeatMethod::Analytic;
    } else if (heat_method == "quadrature") {
      method = HeatMethod::Quadrature;
    } else {
      throw ValidationError("--method: unknown method '" + heat_method + "'");
    }
    std::vector<RVec> pts;
    for (const std::string& tok : split(heat_points, ',')) {
      if (tok.find(':') != std::string::npos) {
        const auto [x, y] = parse_range(tok, "--points");
        pts.push_back(RVec{x, y});
      } else {
        try {
          pts.push_back(RVec{std::stod(tok)});
        } catch (const std::exception&) {
          throw ValidationError(std::string("--points: '") + tok + "' is not a number");
        }
      }
    }
    const HeatResult res = heat_apply(f, heat_t0, method, pts, heat_common.threads);
    Json summary{{"command", "heat"}, {"result", report_json(res, pts)}};
    summary["config"] =
        Json{{"fn", heat_fn}, {"t0", heat_t0}, {"method", heat_method}};
    emit(summary, heat_common, {});
  });

  // verify
  CommonOpts ver_common;
  std::string ver_name;
  CLI::App* ver = app.add_subcommand("verify", "Run a corpus entry's expected-property list");
  add_common(ver, ver_common);
  ver->add_option("name", ver_name, "Corpus entry name")->required();
  ver->callback([&] {
    const VerifyReport rep = corpus_verify(ver_name, ver_common.threads);
    Json summary{{"command", "verify"}, {"result", report_json(rep)}};
    summary["config"] = Json{{"name", ver_name}};
    if (!rep.all_pass) exit_code = kExitNumeric;
    emit(summary, ver_common, {});
  });

  // axioms
  CommonOpts ax_common;
  MetricOpts ax_mopts;
  std::vector<std::string> ax_fns;
  int ax_random = 0;
  std::uint64_t ax_seed = 1;
  CLI::App* ax = app.add_subcommand("axioms", "Pseudometric axiom suite on sample functions");
  add_common(ax, ax_common);
  add_metric(ax, ax_mopts);
  ax->add_option("--fn", ax_fns, "Sample function spec (repeatable)");
  ax->add_option("--random", ax_random, "Append this many random trig polynomials");
  ax->add_option("--seed", ax_seed, "Random sample seed (default 1)");
  ax->callback([&] {
    std::vector<FunctionDescriptor> samples;
    for (const std::string& spec : ax_fns) samples.push_back(parse_fn_spec(spec, nullptr));
    std::mt19937_64 rng(ax_seed);
    for (int k = 0; k < ax_random; ++k) samples.push_back(random_trig_poly(rng, 3));
    const AxiomReport rep =
        check_space_axioms(metric_spec(ax_mopts), samples, ax_common.threads);
    Json summary{{"command", "axioms"}, {"result", report_json(rep)}};
    summary["config"] = metric_config_json(ax_mopts);
    summary["config"]["random"] = ax_random;
    summary["config"]["seed"] = ax_seed;
    emit(summary, ax_common, {});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return exit_code;
}

}  // namespace metap

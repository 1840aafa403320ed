#ifndef METAP_GENNORMS_HPP
#define METAP_GENNORMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "metap/funcspace.hpp"

namespace metap {

enum class SeminormFamily { Stepanov, Weyl, Besicovitch };

std::string seminorm_family_name(SeminormFamily f);
SeminormFamily seminorm_family_from_name(const std::string& s);

struct SeminormSpec {
  SeminormFamily family = SeminormFamily::Stepanov;
  double p = 1.0;
  Box omega{{0.0, 1.0}};   // inner cell (stepanov / weyl unit cell)
  ScalarMap phi;           // monotone comparator, phi(0) = 0; default identity
  WeightFunction nu;       // inner weight, default 1
  double outer_scale = 1.0;  // constant outer weight (stepanov)
  double a = 0.0;            // besicovitch exponent: outer weight t^-a

  Box anchor_window{{0.0, 100.0}};  // outer sup window (stepanov / weyl)
  int anchor_density = 16;          // anchors per unit length
  int quad_density = 32;            // inner quadrature nodes per unit length

  // Geometric abscissa grids. Weyl: l = l0 * ratio^k; Besicovitch: t likewise.
  double l0 = 1.0;
  double t0 = 10.0;
  double ratio = 2.0;
  int grid_count = 12;
};

struct SeminormCurve {
  std::vector<double> abscissae;
  std::vector<double> values;
  double limit_estimate = 0.0;
  std::string estimator;  // "max over final third of geometric grid"
  bool converged = true;
};

// Window sample of s -> f(t+s) on the omega grid (the windowed lift of f).
std::vector<CVec> bochner_transform(const FunctionDescriptor& f, double t, const Box& omega,
                                    int density, int threads = 1);

// sup over anchors t of outer_scale * (int_omega phi(|h(t+s)|)^p nu(s)^p ds)^(1/p).
double stepanov_seminorm(const FunctionDescriptor& h, const SeminormSpec& spec,
                         int threads = 1);

// Per l: sup over anchors t of l^(-1/p) * (int over t+[0,l] of phi(|h|)^p nu^p)^(1/p).
// Anchors range over spec.anchor_window; l grid is l0 * ratio^k, k < grid_count.
SeminormCurve weyl_seminorm_curve(const FunctionDescriptor& h, const SeminormSpec& spec,
                                  int threads = 1);

// Per t: t^-a * (int over [-t,t] of phi(|h|)^p nu^p)^(1/p); t = t0 * ratio^k.
SeminormCurve besicovitch_seminorm_curve(const FunctionDescriptor& h, const SeminormSpec& spec,
                                         int threads = 1);

// limit_estimate of the Besicovitch curve of f - g.
double besicovitch_pseudometric(const FunctionDescriptor& f, const FunctionDescriptor& g,
                                const SeminormSpec& spec, int threads = 1);

struct StepanovScanOptions {
  double window_len = 2.0 * 3.14159265358979323846;
  int baseline_anchors = 32;        // uniform anchors per T
  std::vector<double> peak_hints;   // candidate window centers (e.g. zeta minima)
  std::int64_t eval_budget = 500000;  // quadrature budget per window
  double rel_tol = 1e-6;
  double abs_tol = 1e-9;
};

struct StepanovScanPoint {
  double T = 0.0;
  double max_integral = 0.0;
  double argmax_t = 0.0;
  bool converged = true;       // every window quadrature met tolerance
  std::int64_t evals = 0;
};

struct StepanovScanReport {
  std::vector<StepanovScanPoint> points;
  double window_len = 0.0;
  double p = 1.0;
  bool all_converged = true;
};

// Per T in T_grid: max over anchors t in [0, T] of int_t^{t+window_len} |f|^p,
// anchors = uniform baseline plus windows centered on the peak hints <= T.
StepanovScanReport stepanov_bound_scan(const FunctionDescriptor& f, double p,
                                       const std::vector<double>& T_grid,
                                       const StepanovScanOptions& opt, int threads = 1);

}  // namespace metap

#endif

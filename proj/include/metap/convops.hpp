#ifndef METAP_CONVOPS_HPP
#define METAP_CONVOPS_HPP

#include <vector>

#include "metap/periods.hpp"

namespace metap {

enum class KernelFamily { ExpDecay, PowerBound, Heat };

struct Kernel {
  KernelFamily family = KernelFamily::ExpDecay;
  double mu = 1.0;                    // exp_decay: R(s) = e^{-mu s}
  double M = 1.0, beta = 0.5, gamma = 2.0;  // power_bound: M s^{beta-1}/(1+s^gamma)
  double t0 = 1.0;                    // heat time
  int n = 1;                          // heat dimension (1 or 2)

  double value(double s) const;       // R(s), s > 0 (exp_decay / power_bound)
  double mass() const;                // closed-form integral of R over (0, inf)
  double tail_mass(double S) const;   // closed-form bound on integral over (S, inf)
  // Smallest S with f_sup * tail_mass(S) <= tol.
  double truncation_support(double f_sup, double tol) const;
};

Kernel make_exp_decay(double mu);
Kernel make_power_bound(double M, double beta, double gamma);

struct ConvolutionResult {
  FunctionDescriptor F;          // exact trig polynomial or quadrature-backed node
  std::vector<Complex> samples;  // F at the requested points
  bool exact = false;            // closed-form multiplier path taken
  bool converged = true;         // all sample quadratures met tolerance
  double truncation_S = 0.0;
  double tail_bound = 0.0;       // f_sup * tail_mass(S)
};

// F(t) = integral over (0, inf) of R(s) f(t-s) ds, truncated at S with the
// closed-form tail rule. exp_decay on trig polynomials multiplies each
// coefficient by 1/(mu + i omega) exactly.
ConvolutionResult infinite_convolution(const Kernel& kernel, const FunctionDescriptor& f,
                                       const std::vector<double>& t_points,
                                       double tail_tol = 1e-10, int threads = 1);

enum class HeatMethod { Analytic, Quadrature };

struct HeatResult {
  FunctionDescriptor F;
  std::vector<CVec> samples;    // at the requested points (row per point)
  bool exact = false;
  double radius = 0.0;          // quadrature truncation radius
};

// Gaussian semigroup at time t0: analytic path multiplies trig-polynomial
// coefficients by e^{-|lambda|^2 t0}; quadrature path integrates the kernel
// over |y| <= radius with tail * growth envelope <= 1e-8. n in {1, 2}.
HeatResult heat_apply(const FunctionDescriptor& f, double t0, HeatMethod method,
                      const std::vector<RVec>& points, int threads = 1);

struct PreservationReport {
  double tau = 0.0;
  Complex c{1.0, 0.0};
  double residual_in = 0.0;    // in-variation residual of the input
  double residual_out = 0.0;   // same for the convolved output
  double mass = 0.0;           // integral of the kernel
  double ratio = 0.0;          // residual_out / (mass * residual_in); 0 if 0/0
  bool dominated = false;      // residual_out <= mass * residual_in + tol
  double tolerance = 0.0;
  double lookback = 0.0;       // input anchor window extends this far left
  Box window_out;
  Box window_in;
};

// Translation-invariance preservation under convolution: measures the
// (c, tau)-in-variation residual sup_t(|D(t)| + V_1(D; [t-1,t+1])),
// D = F(.+tau) - c F, for input and output. The input anchor window is the
// output window extended left by the kernel's truncated support so every
// point the operator consumed is covered.
PreservationReport preservation_report(const FunctionDescriptor& f_in,
                                       const FunctionDescriptor& f_out, const Kernel& kernel,
                                       double tau, Complex c, const Box& window_out,
                                       int anchor_density = 16, double tolerance = 1e-5,
                                       int threads = 1);

}  // namespace metap

#endif

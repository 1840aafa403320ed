#ifndef METAP_APPROX_HPP
#define METAP_APPROX_HPP

#include <vector>

#include "metap/periods.hpp"

namespace metap {

struct BohrCoefficient {
  CVec value;              // mean at half length T
  CVec half_T_value;       // mean at T/2
  double richardson_delta = 0.0;  // max component |value - half_T_value|
};

// (2T)^-n * integral over [-T,T]^n of f(t) e^{-i<lambda,t>} dt by composite
// trapezoid; O(1/T) accurate for trig polynomials.
BohrCoefficient bohr_coefficient(const FunctionDescriptor& f, const RVec& lambda, double T,
                                 int density = 16, int threads = 1);
Complex bohr_coefficient1(const FunctionDescriptor& f, double lambda, double T,
                          int density = 16, int threads = 1);

// Declared frequencies for symbolic kinds; discrete spectrum peaks for
// tabulated data. Capped at budget.
std::vector<RVec> frequency_candidates(const FunctionDescriptor& f, int budget);

// Bohr-mean coefficients at the given frequencies.
TrigPolynomial fit_trig_polynomial(const FunctionDescriptor& f, const std::vector<RVec>& freqs,
                                   double T, int density = 16, int threads = 1);

struct ApproximationCurve {
  std::vector<int> ks;
  std::vector<double> errors;
  std::vector<double> bounds;  // analytic bound per k; NaN when undeclared
  bool has_bounds = false;
};

// Per-k error of f - P_k under the given residual spec. When f is a corpus
// series and approximants are its partial sums, analytic tail bounds matching
// the metric family are attached.
ApproximationCurve approximation_curve(const FunctionDescriptor& f,
                                       const std::vector<FunctionDescriptor>& approximants,
                                       const std::vector<int>& ks, const ResidualSpec& spec,
                                       int threads = 1);

}  // namespace metap

#endif

#ifndef METAP_PERIODS_HPP
#define METAP_PERIODS_HPP

#include <variant>
#include <vector>

#include "metap/gennorms.hpp"
#include "metap/pseudometrics.hpp"

namespace metap {

// Residual backend: pseudometric distance or Stepanov/Besicovitch seminorm of
// the difference f(.+tau) - c f.
using ResidualSpec = std::variant<PseudometricSpec, SeminormSpec>;

// Distance between two functions under either backend (seminorm backends
// measure the seminorm of a - b).
double residual_norm(const FunctionDescriptor& a, const FunctionDescriptor& b,
                     const ResidualSpec& spec, int threads = 1);

double translation_residual(const FunctionDescriptor& f, double tau, Complex c,
                            const ResidualSpec& spec, int threads = 1);

struct PeriodCluster {
  double center = 0.0;    // golden-section refined local minimum
  double lo = 0.0, hi = 0.0;  // sub-epsilon grid range
  double residual = 0.0;  // residual at the refined center
};

struct PeriodScanReport {
  Complex c{1.0, 0.0};
  double epsilon = 0.0;
  double tau_lo = 0.0, tau_hi = 0.0, tau_step = 0.0;
  std::vector<double> taus;        // scanned grid
  std::vector<double> residuals;   // residual per tau
  std::vector<double> periods;     // taus with residual <= epsilon, sorted
  std::vector<PeriodCluster> clusters;
  double max_gap = 0.0;            // includes boundary gaps
  bool empty_set = false;          // no period found: max_gap meaningless
  bool boundary_censored = false;  // first/last period within one gap of an edge
};

PeriodScanReport scan_eps_periods(const FunctionDescriptor& f, const ResidualSpec& spec,
                                  Complex c, double epsilon, double tau_lo, double tau_hi,
                                  double tau_step, int threads = 1);

// Empirical inclusion length: the report's max_gap. Empty set signalled via
// the report flag; this throws on it.
double relative_density(const PeriodScanReport& report);

// Besicovitch limit estimate of f(.+tau) - c f.
double doss_period_check(const FunctionDescriptor& f, double tau, Complex c,
                         const SeminormSpec& spec, int threads = 1);

struct SemiPeriodicityReport {
  std::vector<int> ms;
  std::vector<double> residuals;  // residual of f(.+ m omega) - c^m f
  double max_residual = 0.0;
  int type = 1;  // 1: m in N, 2: m in Z
};

// One axis (n = 1): residuals of f(.+ m omega) - c^m f for m = 1..m_max
// (type 1) or m = -m_max..m_max, m != 0 (type 2).
SemiPeriodicityReport semi_periodicity_check(const FunctionDescriptor& f, Complex c,
                                             double omega, const ResidualSpec& spec, int m_max,
                                             int type, int threads = 1);

struct NormalityReport {
  std::vector<double> translates;
  std::vector<std::size_t> selected;  // indices into translates
  std::vector<double> pair_residuals;  // row-major over selected pairs (i<j)
  double cauchy_epsilon = 0.0;         // requested
  double achieved_epsilon = 0.0;       // max pairwise residual on selection
};

// Greedy epsilon-ball clustering of the residual metric on translates: for
// each candidate seed (lowest index first) collect all points within eps of
// it, filter to pairwise-consistent members, keep the largest cluster.
NormalityReport normality_check(const FunctionDescriptor& f,
                                const std::vector<double>& translates,
                                const ResidualSpec& spec, double cauchy_eps,
                                int threads = 1);

}  // namespace metap

#endif

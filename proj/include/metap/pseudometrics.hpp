#ifndef METAP_PSEUDOMETRICS_HPP
#define METAP_PSEUDOMETRICS_HPP

#include <string>
#include <vector>

#include "metap/funcspace.hpp"

namespace metap {

enum class MetricFamily {
  WeightedSup,
  WeightedLp,
  BvpComposite,
  BvpSlow,
  ArctanSup,
  CompactExhaustion,
  DiscreteUnit,
};

std::string metric_family_name(MetricFamily f);
MetricFamily metric_family_from_name(const std::string& s);

struct PseudometricSpec {
  MetricFamily family = MetricFamily::WeightedSup;
  double p = 1.0;          // WeightedLp / Bvp families
  WeightFunction nu;       // weighted families; must be positive
  Box window{{0.0, 100.0}};
  int grid_density = 16;
};

struct DistanceValue {
  double value = 0.0;             // evaluated at 2x grid_density
  double grid_used = 0.0;         // finer grid step
  double refinement_delta = 0.0;  // |refined - base| across the halving
};

DistanceValue distance(const PseudometricSpec& spec, const FunctionDescriptor& f,
                       const FunctionDescriptor& g, int threads = 1);

// Exact supremum over sub-partitions of the sample nodes, O(N^2) dynamic
// program. Values are codomain vectors; increments use the Euclidean norm.
double p_variation(const std::vector<double>& u, const std::vector<CVec>& v, double p);
double p_variation(const std::vector<double>& u, const std::vector<double>& v, double p);

namespace detail {
// Shared increment term so exhaustive oracles can reproduce the DP bitwise.
double vp_increment(const CVec& a, const CVec& b, double p);
}  // namespace detail

// distance(spec, f(.+omega), c*f); zero iff (omega, cI)-periodic on the window
// up to grid resolution.
double periodicity_residual(const FunctionDescriptor& f, const RVec& omega, Complex c,
                            const PseudometricSpec& spec, int threads = 1);
double periodicity_residual1(const FunctionDescriptor& f, double omega, Complex c,
                             const PseudometricSpec& spec, int threads = 1);

struct AxiomCheck {
  std::string name;
  bool pass = false;
  bool falsifiable_only = false;  // pass means "consistent on samples"
  double measured = 0.0;
  double bound = 0.0;
  std::string witness;
};

struct AxiomReport {
  PseudometricSpec spec;
  std::vector<AxiomCheck> checks;
  bool all_pass = true;
};

// Identity / symmetry / triangle plus the scaling and subadditivity bounds,
// evaluated on the given sample functions (>= 3).
AxiomReport check_space_axioms(const PseudometricSpec& spec,
                               const std::vector<FunctionDescriptor>& samples,
                               int threads = 1);

}  // namespace metap

#endif

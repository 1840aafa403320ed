#ifndef METAP_NUMERIC_HPP
#define METAP_NUMERIC_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace metap {

using Complex = std::complex<double>;
using RVec = std::vector<double>;
using CVec = std::vector<Complex>;

// Sums in a fixed pairwise tree so the result is independent of chunking and
// thread count, and rounding error stays O(log n).
double pairwise_sum(const double* v, std::size_t n);
double pairwise_sum(const std::vector<double>& v);
Complex pairwise_sum(const Complex* v, std::size_t n);
Complex pairwise_sum(const CVec& v);

// Runs fn(i) for i in [0, n). Each index must write only its own output slot;
// reductions happen after the loop, in index order, so results do not depend
// on the thread count.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

double digamma(double x);   // psi(x), x > 0
double trigamma(double x);  // psi'(x), x > 0

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;   // accumulated interval error estimate
  bool converged = true;
  std::int64_t evals = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-6;
  int max_depth = 40;
  std::int64_t eval_budget = 500000;
};

// Globally adaptive bisection with a closed 5-point rule per interval.
// Worst-error interval splits first (stable tie-break on creation order), so
// the refinement pattern and the final leaf set are deterministic. Exceeding
// the depth cap or the evaluation budget flags converged = false; the best
// available estimate is still returned.
QuadratureResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opt = {});
struct ComplexQuadratureResult {
  Complex value{0.0, 0.0};
  double abs_error = 0.0;
  bool converged = true;
  std::int64_t evals = 0;
};
ComplexQuadratureResult adaptive_integrate_c(const std::function<Complex(double)>& f, double a,
                                             double b, const QuadratureOptions& opt = {});

// Deterministic golden-section minimizer for unimodal-ish residual profiles.
double golden_section_minimize(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-10, int max_iter = 200);

// Uniform [0,1) from raw mt19937_64 output; avoids distribution objects whose
// streams differ across standard library implementations.
double uniform01(std::uint64_t raw);

// Shortest 17-significant-digit decimal form used by every CSV/table writer.
std::string fmt17(double x);

}  // namespace metap

#endif

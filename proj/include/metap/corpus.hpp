#ifndef METAP_CORPUS_HPP
#define METAP_CORPUS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "metap/funcspace.hpp"

namespace metap {

struct CheckOutcome {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double bound = 0.0;
  std::string note;
};

struct CorpusCheck {
  std::string name;
  std::function<CheckOutcome(int threads)> run;
};

// A named example function with analytic side data. All entries have domain R
// and scalar codomain; series entries expose 1-based terms and partial sums.
struct CorpusEntry {
  std::string name;
  bool complex_valued = false;
  bool is_series = false;
  int default_trunc = 0;

  std::function<Complex(double, int)> term;     // term(t, m)
  std::function<Complex(double, int)> partial;  // sum of terms 1..N
  std::function<Complex(double)> value;         // reference evaluation

  // Sup-norm bound of the tail beyond N, valid on |t| <= t_max.
  std::function<double(int, double)> sup_tail;
  // Bound on the 1-variation of the tail over any window of length 2.
  std::function<double(int)> var1_tail;

  std::function<std::vector<double>(int)> freq_family;
  std::function<std::optional<TrigPolynomial>(int)> partial_trig_poly;

  // Pointwise envelope |f(t)| <= envelope(t); sup_on(T) = sup bound on |t|<=T.
  std::function<double(double)> envelope;
  std::function<double(double)> sup_on;

  std::vector<CorpusCheck> checks;
  std::string notes;
};

const CorpusEntry& corpus_get(const std::string& name);
bool corpus_has(const std::string& name);
std::vector<std::string> corpus_names();

// Descriptor for a corpus entry; trunc < 0 means the entry default.
FunctionDescriptor corpus_function(const std::string& name, int trunc = -1);

// One periodic bump block: period 2^(n+1), unit-width bump of Gevrey class s
// starting at every odd multiple of 2^n.
FunctionDescriptor gevrey_block(double s, int n);

// zeta(t) = 2 + cos t + cos(sqrt(2) t) and its derivative; shared by the
// stepanov entries and the peak locator.
double corpus_zeta(double t);
double corpus_zeta_prime(double t);

// Centers tau (near-minima of zeta) found by scanning odd multiples of pi on
// (0, t_max], ranked by zeta value ascending; at most `count` returned.
std::vector<double> locate_g_peaks(double t_max, int count);

struct VerifyReport {
  std::string entry;
  std::vector<CheckOutcome> outcomes;
  bool all_pass = true;
};
VerifyReport corpus_verify(const std::string& name, int threads);

}  // namespace metap

#endif

#ifndef METAP_FUNCSPACE_HPP
#define METAP_FUNCSPACE_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "metap/numeric.hpp"

namespace metap {

struct AxisRange {
  double lo = 0.0, hi = 0.0;
  double length() const { return hi - lo; }
};
using Box = std::vector<AxisRange>;  // one range per axis

// Uniform grid over a box; density = samples per unit length per axis, so a
// unit window always lands on density+1 aligned nodes and windows slice by
// integer index arithmetic instead of floating comparisons.
struct UniformGrid {
  Box window;
  int density = 16;
  std::vector<std::size_t> npts;

  static UniformGrid make(const Box& window, int density);
  double step() const { return 1.0 / density; }
  std::size_t total() const;
  std::size_t axes() const { return window.size(); }
  double coord(std::size_t axis, std::size_t i) const { return window[axis].lo + i * step(); }
  // Per-axis trapezoid weight (no step factor).
  double trap_weight(std::size_t axis, std::size_t i) const {
    return (i == 0 || i + 1 == npts[axis]) ? 0.5 : 1.0;
  }
  void unflatten(std::size_t flat, std::vector<std::size_t>& idx) const;
  RVec point(std::size_t flat) const;
};

enum class ScalarMapKind { Identity, Abs, Power, Sign, Arctan, MonotoneTable };

struct ScalarMap {
  ScalarMapKind kind = ScalarMapKind::Identity;
  double alpha = 1.0;                            // Power exponent, > 0
  std::vector<std::pair<double, double>> table;  // MonotoneTable nodes (x ascending)
  double apply(double x) const;
};

enum class WeightKind { Constant, PowerRadial, PowerTime, Table };

struct WeightFunction {
  WeightKind kind = WeightKind::Constant;
  double c = 1.0;                                // Constant value
  double b = 0.0;                                // PowerRadial: (1+|x|)^b
  double a = 0.0;                                // PowerTime: max(|t|,t_floor)^-a
  double t_floor = 1.0;
  std::vector<std::pair<double, double>> table;  // 1-D piecewise linear in |x|
  double eval(const RVec& x) const;
  double eval1(double x) const;
};

struct TrigTerm {
  RVec freq;   // lambda in R^n
  CVec coeff;  // one coefficient per codomain component
};

struct TrigPolynomial {
  int dim = 1;
  int codim = 1;
  std::vector<TrigTerm> terms;

  void merge_duplicates();  // merges exactly equal frequency vectors
  double sup_bound() const;  // sum of coefficient norms
};

class FunctionDescriptor;
struct CorpusEntry;

struct SeriesRef {
  std::string name;
  int trunc = -1;                        // -1 = corpus default
  const CorpusEntry* entry = nullptr;    // resolved at construction
};

struct ScaledNode {
  std::shared_ptr<const FunctionDescriptor> inner;
  Complex c{1.0, 0.0};
};

struct ShiftedNode {
  std::shared_ptr<const FunctionDescriptor> inner;
  RVec tau;
};

// Identity passes values through, Sign acts componentwise on real parts and
// keeps the codomain dimension, every other map acts on the modulus and
// collapses to one component.
struct ScalarComposedNode {
  ScalarMap map;
  std::shared_ptr<const FunctionDescriptor> inner;
};

struct TabulatedFn {
  double t0 = 0.0, dt = 1.0;
  std::vector<CVec> values;  // n = 1 only
  int codim = 1;
};

struct CustomFn {
  std::string tag;  // e.g. "kernel_transform", "gevrey_block"
  int dim = 1, codim = 1;
  std::function<CVec(const RVec&)> eval;
  std::function<Complex(double)> eval1;  // optional scalar fast path
  std::string meta;                      // JSON blob used to rebuild the node
  double sup_hint = -1.0;                // valid sup bound when >= 0
};

struct LinCombNode {
  std::vector<std::pair<Complex, std::shared_ptr<const FunctionDescriptor>>> parts;
};

using FnVariant =
    std::variant<TrigPolynomial, SeriesRef, ScaledNode, ShiftedNode, ScalarComposedNode,
                 TabulatedFn, CustomFn, LinCombNode>;
struct FnNode {
  FnVariant v;
};

class FunctionDescriptor {
 public:
  FunctionDescriptor() = default;
  explicit FunctionDescriptor(FnVariant v) : node_(std::make_shared<FnNode>(FnNode{std::move(v)})) {}

  const FnVariant& node() const;
  bool empty() const { return node_ == nullptr; }
  int dim() const;
  int codim() const;

 private:
  std::shared_ptr<const FnNode> node_;
};

FunctionDescriptor make_trig_poly(TrigPolynomial p);
FunctionDescriptor make_series(std::string corpus_name, int trunc = -1);
FunctionDescriptor make_tabulated(TabulatedFn t);
FunctionDescriptor make_custom(CustomFn c);

CVec evaluate(const FunctionDescriptor& f, const RVec& t);
Complex evaluate1(const FunctionDescriptor& f, double t);  // requires n = d = 1
// Parallel sampling; slot i of the result is written by exactly one task.
CVec evaluate_grid1(const FunctionDescriptor& f, const std::vector<double>& ts, int threads = 1);
std::vector<CVec> evaluate_grid(const FunctionDescriptor& f, const UniformGrid& grid,
                                int threads = 1);

// Exact for trig polynomials (coefficient phase rotation); wraps a shift node
// otherwise. translate(f, tau)(t) == f(t + tau).
FunctionDescriptor translate(const FunctionDescriptor& f, const RVec& tau);
FunctionDescriptor translate1(const FunctionDescriptor& f, double tau);
FunctionDescriptor scale(const FunctionDescriptor& f, Complex c);
FunctionDescriptor compose_scalar(const ScalarMap& map, const FunctionDescriptor& inner);
// Pointwise sum of scaled parts; collapses to one trig polynomial when every
// part is one.
FunctionDescriptor lincomb(std::vector<std::pair<Complex, FunctionDescriptor>> parts);
FunctionDescriptor subtract(const FunctionDescriptor& f, const FunctionDescriptor& g);

struct TruncationResult {
  FunctionDescriptor partial;
  double sup_tail;   // sup-norm tail bound valid on |t| <= window_radius
  double var1_tail;  // V_1 tail bound over any window of length 2 (NaN if undeclared)
};
TruncationResult truncate_series(const FunctionDescriptor& f, int N, double window_radius);

// Flattens Scaled/Shifted chains over a trig polynomial into one polynomial.
std::optional<TrigPolynomial> as_trig_poly(const FunctionDescriptor& f);

// Best available sup bound on |f| over |t| <= window_radius (throws if none).
double sup_bound(const FunctionDescriptor& f, double window_radius);

}  // namespace metap

#endif

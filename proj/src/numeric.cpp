#include "metap/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <stdexcept>
#include <thread>

namespace metap {

namespace {

template <typename T>
T pairwise_sum_impl(const T* v, std::size_t n) {
  if (n == 0) return T(0);
  if (n <= 8) {
    T s = v[0];
    for (std::size_t i = 1; i < n; ++i) s += v[i];
    return s;
  }
  std::size_t half = n / 2;
  return pairwise_sum_impl(v, half) + pairwise_sum_impl(v + half, n - half);
}

}  // namespace

double pairwise_sum(const double* v, std::size_t n) { return pairwise_sum_impl(v, n); }
double pairwise_sum(const std::vector<double>& v) { return pairwise_sum_impl(v.data(), v.size()); }
Complex pairwise_sum(const Complex* v, std::size_t n) { return pairwise_sum_impl(v, n); }
Complex pairwise_sum(const CVec& v) { return pairwise_sum_impl(v.data(), v.size()); }

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t nthreads = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::size_t chunk = (n + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

double digamma(double x) {
  if (!(x > 0)) throw std::invalid_argument("digamma: x must be positive");
  double r = 0.0;
  while (x < 10.0) {
    r -= 1.0 / x;
    x += 1.0;
  }
  // Asymptotic expansion, |error| < 1e-15 for x >= 10.
  double inv = 1.0 / x, inv2 = inv * inv;
  double s = std::log(x) - 0.5 * inv;
  s -= inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240))));
  return r + s;
}

double trigamma(double x) {
  if (!(x > 0)) throw std::invalid_argument("trigamma: x must be positive");
  double r = 0.0;
  while (x < 10.0) {
    r += 1.0 / (x * x);
    x += 1.0;
  }
  double inv = 1.0 / x, inv2 = inv * inv;
  double s = inv * (1.0 + 0.5 * inv);
  s += inv * inv2 * (1.0 / 6 - inv2 * (1.0 / 30 - inv2 * (1.0 / 42 - inv2 * (1.0 / 30))));
  return r + s;
}

namespace {

// Closed 5-point Newton-Cotes (Boole) rule.
template <typename T, typename F>
T boole(const F& f, double a, double b) {
  double h = (b - a) / 4.0;
  T s = T(7) * (f(a) + f(b)) + T(32) * (f(a + h) + f(a + 3 * h)) + T(12) * f(a + 2 * h);
  return s * (2.0 * h / 45.0);
}

inline double vnorm(double x) { return std::fabs(x); }
inline double vnorm(const Complex& x) { return std::abs(x); }

struct Interval {
  double a, b;
  int depth;
  std::size_t id;
  double err;
};

struct WorseError {
  bool operator()(const Interval& x, const Interval& y) const {
    if (x.err != y.err) return x.err < y.err;
    return x.id > y.id;  // stable: older interval wins ties
  }
};

template <typename T, typename F, typename R>
void adaptive_impl(const F& f, double a, double b, const QuadratureOptions& opt, R& out) {
  out = R{};
  if (a == b) return;
  struct Leaf {
    double a;
    T value;
    double err;
  };
  std::vector<Leaf> frozen;  // converged or depth/budget-capped leaves
  std::priority_queue<Interval, std::vector<Interval>, WorseError> active;
  std::vector<std::pair<Interval, T>> store;  // parallel value store keyed by id

  std::int64_t evals = 0;
  std::size_t next_id = 0;
  auto eval_rule = [&](double lo, double hi) {
    evals += 5;
    return boole<T>(f, lo, hi);
  };

  T whole = eval_rule(a, b);
  T left = eval_rule(a, 0.5 * (a + b));
  T right = eval_rule(0.5 * (a + b), b);
  // Seed with the two halves; the parent only provides the first error estimate.
  double seed_err = vnorm((left + right) - whole);
  struct Node {
    double a, b;
    int depth;
    T value;
    double err;
  };
  std::vector<Node> heap_nodes;
  auto push = [&](double lo, double hi, int depth, const T& val, double err) {
    Interval iv{lo, hi, depth, next_id, err};
    heap_nodes.push_back(Node{lo, hi, depth, val, err});
    active.push(iv);
    ++next_id;
  };
  push(a, 0.5 * (a + b), 1, left, 0.5 * seed_err);
  push(0.5 * (a + b), b, 1, right, 0.5 * seed_err);

  bool budget_hit = false, depth_hit = false;
  double total_err = seed_err;
  T total_val = left + right;

  while (!active.empty()) {
    double tol = std::max(opt.abs_tol, opt.rel_tol * vnorm(total_val));
    if (total_err <= tol) break;
    Interval top = active.top();
    if (evals + 20 > opt.eval_budget) {
      budget_hit = true;
      break;
    }
    active.pop();
    const Node& nd = heap_nodes[top.id];
    if (nd.depth >= opt.max_depth) {
      depth_hit = true;
      frozen.push_back(Leaf{nd.a, nd.value, nd.err});
      continue;
    }
    double mid = 0.5 * (nd.a + nd.b);
    T lv = eval_rule(nd.a, mid);
    T rv = eval_rule(mid, nd.b);
    double err = vnorm((lv + rv) - nd.value);
    total_val = total_val - nd.value + lv + rv;
    total_err = total_err - nd.err + err;
    double ca = nd.a, cb = nd.b;
    int cd = nd.depth;
    push(ca, mid, cd + 1, lv, 0.5 * err);
    push(mid, cb, cd + 1, rv, 0.5 * err);
  }

  // Final deterministic reduction in spatial order.
  std::vector<Leaf> leaves = std::move(frozen);
  while (!active.empty()) {
    const Interval iv = active.top();
    active.pop();
    const Node& nd = heap_nodes[iv.id];
    leaves.push_back(Leaf{nd.a, nd.value, nd.err});
  }
  std::sort(leaves.begin(), leaves.end(), [](const Leaf& x, const Leaf& y) { return x.a < y.a; });
  std::vector<T> vals;
  std::vector<double> errs;
  vals.reserve(leaves.size());
  errs.reserve(leaves.size());
  for (const auto& l : leaves) {
    vals.push_back(l.value);
    errs.push_back(l.err);
  }
  T value = pairwise_sum_impl(vals.data(), vals.size());
  double err_sum = pairwise_sum_impl(errs.data(), errs.size());
  double tol = std::max(opt.abs_tol, opt.rel_tol * vnorm(value));
  out.value = value;
  out.abs_error = err_sum;
  out.evals = evals;
  out.converged = !(budget_hit || (depth_hit && err_sum > tol)) && err_sum <= tol;
}

}  // namespace

QuadratureResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opt) {
  QuadratureResult r;
  adaptive_impl<double>(f, a, b, opt, r);
  return r;
}

ComplexQuadratureResult adaptive_integrate_c(const std::function<Complex(double)>& f, double a,
                                           double b, const QuadratureOptions& opt) {
  ComplexQuadratureResult r;
  adaptive_impl<Complex>(f, a, b, opt, r);
  return r;
}

double golden_section_minimize(const std::function<double(double)>& f, double a, double b,
                               double tol, int max_iter) {
  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

double uniform01(std::uint64_t raw) { return static_cast<double>(raw >> 11) * 0x1.0p-53; }

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace metap

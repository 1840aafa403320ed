#include "metap/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "metap/corpus.hpp"
#include "metap/errors.hpp"

namespace metap {

namespace {

CVec mean_over_box(const FunctionDescriptor& f, const RVec& lambda, double T, int density,
                   int threads) {
  const Box box(static_cast<std::size_t>(f.dim()), AxisRange{-T, T});
  const UniformGrid grid = UniformGrid::make(box, density);
  const std::vector<CVec> vals = evaluate_grid(f, grid, threads);
  const std::size_t d = vals.front().size();
  const std::size_t total = grid.total();

  std::vector<CVec> comp(d, CVec(total));
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < total; ++i) {
    grid.unflatten(i, idx);
    double w = 1.0;
    double phase = 0.0;
    for (std::size_t ax = 0; ax < idx.size(); ++ax) {
      w *= grid.trap_weight(ax, idx[ax]);
      phase -= lambda[ax] * grid.coord(ax, idx[ax]);
    }
    const Complex rot(std::cos(phase), std::sin(phase));
    for (std::size_t j = 0; j < d; ++j) comp[j][i] = vals[i][j] * rot * w;
  }
  const double cell = std::pow(grid.step(), static_cast<double>(grid.axes()));
  const double volume = std::pow(2.0 * T, static_cast<double>(grid.axes()));
  CVec out(d);
  for (std::size_t j = 0; j < d; ++j) out[j] = pairwise_sum(comp[j]) * cell / volume;
  return out;
}

void collect_freqs(const FunctionDescriptor& f, int budget, std::vector<RVec>& out);

void push_unique(std::vector<RVec>& out, const RVec& w, int budget) {
  if (static_cast<int>(out.size()) >= budget) return;
  for (const RVec& have : out)
    if (have == w) return;
  out.push_back(w);
}

void tabulated_peaks(const TabulatedFn& tab, int budget, std::vector<RVec>& out) {
  const std::size_t n = tab.values.size();
  if (n < 2) return;
  struct Bin {
    double mag;
    std::size_t k;
  };
  std::vector<Bin> bins(n);
  for (std::size_t k = 0; k < n; ++k) {
    double mag2 = 0.0;
    for (std::size_t j = 0; j < tab.values.front().size(); ++j) {
      Complex X(0.0, 0.0);
      for (std::size_t t = 0; t < n; ++t) {
        const double ph = -2.0 * 3.14159265358979323846 * static_cast<double>(k * t) / n;
        X += tab.values[t][j] * Complex(std::cos(ph), std::sin(ph));
      }
      mag2 += std::norm(X);
    }
    bins[k] = {std::sqrt(mag2), k};
  }
  std::stable_sort(bins.begin(), bins.end(),
                   [](const Bin& a, const Bin& b) { return a.mag > b.mag; });
  for (const Bin& b : bins) {
    if (static_cast<int>(out.size()) >= budget) break;
    if (b.mag <= 1e-12 * bins.front().mag) break;
    const double kk = b.k <= n / 2 ? static_cast<double>(b.k)
                                   : static_cast<double>(b.k) - static_cast<double>(n);
    push_unique(out, RVec{2.0 * 3.14159265358979323846 * kk / (n * tab.dt)}, budget);
  }
}

void collect_freqs(const FunctionDescriptor& f, int budget, std::vector<RVec>& out) {
  if (static_cast<int>(out.size()) >= budget) return;
  const FnVariant& v = f.node();
  if (const auto* tp = std::get_if<TrigPolynomial>(&v)) {
    for (const TrigTerm& t : tp->terms) push_unique(out, t.freq, budget);
  } else if (const auto* sr = std::get_if<SeriesRef>(&v)) {
    for (double w : sr->entry->freq_family(budget)) push_unique(out, RVec{w}, budget);
  } else if (const auto* sc = std::get_if<ScaledNode>(&v)) {
    collect_freqs(*sc->inner, budget, out);
  } else if (const auto* sh = std::get_if<ShiftedNode>(&v)) {
    collect_freqs(*sh->inner, budget, out);
  } else if (const auto* cmp = std::get_if<ScalarComposedNode>(&v)) {
    collect_freqs(*cmp->inner, budget, out);
  } else if (const auto* tab = std::get_if<TabulatedFn>(&v)) {
    tabulated_peaks(*tab, budget, out);
  } else if (const auto* cf = std::get_if<CustomFn>(&v)) {
    if (!cf->meta.empty()) {
      const nlohmann::json meta = nlohmann::json::parse(cf->meta, nullptr, false);
      if (meta.is_object() && meta.contains("corpus")) {
        const std::string name = meta["corpus"].get<std::string>();
        if (corpus_has(name) && corpus_get(name).freq_family)
          for (double w : corpus_get(name).freq_family(budget)) push_unique(out, RVec{w}, budget);
      }
    }
  } else if (const auto* lc = std::get_if<LinCombNode>(&v)) {
    for (const auto& part : lc->parts) collect_freqs(*part.second, budget, out);
  }
}

const SeriesRef* series_root(const FunctionDescriptor& f) {
  return std::get_if<SeriesRef>(&f.node());
}

// Valid upper bound on the residual of a function whose sup norm on the
// relevant window is at most `sup` and whose 1-variation over any length-2
// window is at most `var1`.
double family_tail_bound(const ResidualSpec& spec, double sup, double var1) {
  constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
  if (const auto* ps = std::get_if<PseudometricSpec>(&spec)) {
    if (ps->nu.kind != WeightKind::Constant) return kNan;
    const double c = ps->nu.c;
    switch (ps->family) {
      case MetricFamily::WeightedSup:
        return c * sup;
      case MetricFamily::WeightedLp: {
        double vol = 1.0;
        for (const AxisRange& ax : ps->window) vol *= ax.length();
        return c * sup * std::pow(vol, 1.0 / ps->p);
      }
      case MetricFamily::BvpComposite:
        return std::isnan(var1) ? kNan : sup + var1;
      case MetricFamily::BvpSlow:
        return var1;
      case MetricFamily::ArctanSup:
        return sup;  // arctan is 1-Lipschitz
      case MetricFamily::CompactExhaustion:
        return sup;  // sum_k 2^-k s/(1+s) <= sup
      case MetricFamily::DiscreteUnit:
        return kNan;
    }
    return kNan;
  }
  const SeminormSpec& ss = std::get<SeminormSpec>(spec);
  if (ss.nu.kind != WeightKind::Constant || ss.nu.c != 1.0) return kNan;
  if (ss.phi.kind != ScalarMapKind::Identity) return kNan;
  switch (ss.family) {
    case SeminormFamily::Stepanov: {
      double vol = 1.0;
      for (const AxisRange& ax : ss.omega) vol *= ax.length();
      return ss.outer_scale * sup * std::pow(vol, 1.0 / ss.p);
    }
    case SeminormFamily::Weyl:
      return sup;  // l^(-1/p) (l sup^p)^(1/p)
    case SeminormFamily::Besicovitch: {
      double factor = 0.0;
      for (int k = 0; k < ss.grid_count; ++k) {
        const double t = ss.t0 * std::pow(ss.ratio, k);
        factor = std::max(factor, std::pow(t, -ss.a) * std::pow(2.0 * t, 1.0 / ss.p));
      }
      return factor * sup;
    }
  }
  return kNan;
}

double spec_window_radius(const ResidualSpec& spec) {
  const auto radius = [](const Box& b) {
    double r = 0.0;
    for (const AxisRange& ax : b) r = std::max({r, std::abs(ax.lo), std::abs(ax.hi)});
    return r;
  };
  if (const auto* ps = std::get_if<PseudometricSpec>(&spec)) {
    double r = radius(ps->window);
    if (ps->family == MetricFamily::BvpComposite || ps->family == MetricFamily::BvpSlow)
      r += 1.0;
    return r;
  }
  const SeminormSpec& ss = std::get<SeminormSpec>(spec);
  switch (ss.family) {
    case SeminormFamily::Stepanov:
      return radius(ss.anchor_window) + radius(ss.omega);
    case SeminormFamily::Weyl:
      return radius(ss.anchor_window) + ss.l0 * std::pow(ss.ratio, ss.grid_count - 1);
    case SeminormFamily::Besicovitch:
      return ss.t0 * std::pow(ss.ratio, ss.grid_count - 1);
  }
  return radius(Box{});
}

}  // namespace

BohrCoefficient bohr_coefficient(const FunctionDescriptor& f, const RVec& lambda, double T,
                                 int density, int threads) {
  if (f.empty()) throw ValidationError("bohr_coefficient: empty function");
  if (static_cast<int>(lambda.size()) != f.dim())
    throw ValidationError("bohr_coefficient: lambda arity does not match the function");
  if (!(T > 0.0)) throw ValidationError("bohr_coefficient: T must be positive");
  if (density < 1) throw ValidationError("bohr_coefficient: density must be positive");

  BohrCoefficient out;
  out.value = mean_over_box(f, lambda, T, density, threads);
  out.half_T_value = mean_over_box(f, lambda, T / 2.0, density, threads);
  for (std::size_t j = 0; j < out.value.size(); ++j)
    out.richardson_delta = std::max(out.richardson_delta, std::abs(out.value[j] - out.half_T_value[j]));
  return out;
}

Complex bohr_coefficient1(const FunctionDescriptor& f, double lambda, double T, int density,
                          int threads) {
  if (f.codim() != 1)
    throw ValidationError("bohr_coefficient: scalar form requires a scalar codomain");
  return bohr_coefficient(f, RVec{lambda}, T, density, threads).value[0];
}

std::vector<RVec> frequency_candidates(const FunctionDescriptor& f, int budget) {
  if (f.empty()) throw ValidationError("frequency_candidates: empty function");
  if (budget < 1) throw ValidationError("frequency_candidates: budget must be positive");
  std::vector<RVec> out;
  collect_freqs(f, budget, out);
  return out;
}

TrigPolynomial fit_trig_polynomial(const FunctionDescriptor& f, const std::vector<RVec>& freqs,
                                   double T, int density, int threads) {
  TrigPolynomial poly;
  poly.dim = f.dim();
  poly.codim = f.codim();
  for (const RVec& w : freqs) {
    TrigTerm term;
    term.freq = w;
    term.coeff = mean_over_box(f, w, T, density, threads);
    poly.terms.push_back(std::move(term));
  }
  poly.merge_duplicates();
  return poly;
}

ApproximationCurve approximation_curve(const FunctionDescriptor& f,
                                       const std::vector<FunctionDescriptor>& approximants,
                                       const std::vector<int>& ks, const ResidualSpec& spec,
                                       int threads) {
  if (approximants.size() != ks.size())
    throw ValidationError("approximation_curve: one approximant per k required");
  if (approximants.empty()) throw ValidationError("approximation_curve: empty approximant list");

  ApproximationCurve curve;
  curve.ks = ks;
  curve.errors.resize(ks.size());
  curve.bounds.assign(ks.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < ks.size(); ++i)
    curve.errors[i] = residual_norm(f, approximants[i], spec, threads);

  if (const SeriesRef* sr = series_root(f)) {
    const double R = spec_window_radius(spec);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const double sup = sr->entry->sup_tail(ks[i], R);
      const double var1 = sr->entry->var1_tail ? sr->entry->var1_tail(ks[i])
                                               : std::numeric_limits<double>::quiet_NaN();
      curve.bounds[i] = family_tail_bound(spec, sup, var1);
      if (std::isfinite(curve.bounds[i])) curve.has_bounds = true;
    }
  }
  return curve;
}

}  // namespace metap

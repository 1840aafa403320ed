#include "metap/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "metap/corpus.hpp"
#include "metap/errors.hpp"

namespace metap {

namespace {

constexpr double kGridSnap = 1e-9;

double vec_norm(const CVec& v) {
  if (v.size() == 1) return std::abs(v[0]);
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

UniformGrid UniformGrid::make(const Box& window, int density) {
  if (window.empty()) throw ValidationError("grid: window has no axes");
  if (density < 1) throw ValidationError("grid: density must be >= 1");
  UniformGrid g;
  g.window = window;
  g.density = density;
  g.npts.reserve(window.size());
  for (const AxisRange& ax : window) {
    if (!(ax.hi >= ax.lo)) throw ValidationError("grid: axis with hi < lo");
    const double steps_real = (ax.hi - ax.lo) * density;
    long long steps = std::llround(steps_real);
    if (std::abs(steps_real - static_cast<double>(steps)) > kGridSnap)
      steps = static_cast<long long>(std::ceil(steps_real - kGridSnap));
    steps = std::max<long long>(steps, 1);
    g.npts.push_back(static_cast<std::size_t>(steps) + 1);
  }
  return g;
}

std::size_t UniformGrid::total() const {
  std::size_t n = 1;
  for (std::size_t k : npts) n *= k;
  return n;
}

void UniformGrid::unflatten(std::size_t flat, std::vector<std::size_t>& idx) const {
  idx.assign(npts.size(), 0);
  for (std::size_t ax = npts.size(); ax-- > 0;) {
    idx[ax] = flat % npts[ax];
    flat /= npts[ax];
  }
}

RVec UniformGrid::point(std::size_t flat) const {
  std::vector<std::size_t> idx;
  unflatten(flat, idx);
  RVec x(npts.size());
  for (std::size_t ax = 0; ax < npts.size(); ++ax) x[ax] = coord(ax, idx[ax]);
  return x;
}

double ScalarMap::apply(double x) const {
  switch (kind) {
    case ScalarMapKind::Identity:
      return x;
    case ScalarMapKind::Abs:
      return std::abs(x);
    case ScalarMapKind::Power:
      return std::pow(std::max(x, 0.0), alpha);
    case ScalarMapKind::Sign:
      return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
    case ScalarMapKind::Arctan:
      return std::atan(x);
    case ScalarMapKind::MonotoneTable: {
      if (table.size() < 2) throw ValidationError("scalar map: table needs >= 2 nodes");
      if (x <= table.front().first) return table.front().second;
      if (x >= table.back().first) return table.back().second;
      auto it = std::upper_bound(table.begin(), table.end(), x,
                                 [](double v, const auto& node) { return v < node.first; });
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double w = (x - lo.first) / (hi.first - lo.first);
      return lo.second + w * (hi.second - lo.second);
    }
  }
  throw ValidationError("scalar map: unknown kind");
}

double WeightFunction::eval1(double x) const {
  switch (kind) {
    case WeightKind::Constant:
      return c;
    case WeightKind::PowerRadial:
      return std::pow(1.0 + std::abs(x), b);
    case WeightKind::PowerTime:
      return std::pow(std::max(std::abs(x), t_floor), -a);
    case WeightKind::Table: {
      ScalarMap m;
      m.kind = ScalarMapKind::MonotoneTable;
      m.table = table;
      return m.apply(std::abs(x));
    }
  }
  throw ValidationError("weight: unknown kind");
}

double WeightFunction::eval(const RVec& x) const {
  if (x.size() == 1) return eval1(x[0]);
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  return eval1(std::sqrt(r2));
}

void TrigPolynomial::merge_duplicates() {
  std::sort(terms.begin(), terms.end(), [](const TrigTerm& a, const TrigTerm& b) {
    return std::lexicographical_compare(a.freq.begin(), a.freq.end(), b.freq.begin(),
                                        b.freq.end());
  });
  std::vector<TrigTerm> merged;
  for (TrigTerm& t : terms) {
    if (!merged.empty() && merged.back().freq == t.freq) {
      CVec& acc = merged.back().coeff;
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += t.coeff[j];
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms = std::move(merged);
}

double TrigPolynomial::sup_bound() const {
  double s = 0.0;
  for (const TrigTerm& t : terms) s += vec_norm(t.coeff);
  return s;
}

const FnVariant& FunctionDescriptor::node() const {
  if (!node_) throw ValidationError("descriptor: empty");
  return node_->v;
}

namespace {

void validate_trig_poly(const TrigPolynomial& p) {
  if (p.dim < 1 || p.codim < 1) throw ValidationError("trig poly: bad dimensions");
  for (const TrigTerm& t : p.terms) {
    if (static_cast<int>(t.freq.size()) != p.dim)
      throw ValidationError("trig poly: frequency arity mismatch");
    if (static_cast<int>(t.coeff.size()) != p.codim)
      throw ValidationError("trig poly: coefficient arity mismatch");
  }
}

int node_dim(const FnVariant& v);
int node_codim(const FnVariant& v);

int node_dim(const FnVariant& v) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TrigPolynomial>) return n.dim;
        if constexpr (std::is_same_v<T, SeriesRef>) return 1;
        if constexpr (std::is_same_v<T, ScaledNode> || std::is_same_v<T, ShiftedNode>)
          return n.inner->dim();
        if constexpr (std::is_same_v<T, ScalarComposedNode>) return n.inner->dim();
        if constexpr (std::is_same_v<T, TabulatedFn>) return 1;
        if constexpr (std::is_same_v<T, CustomFn>) return n.dim;
        if constexpr (std::is_same_v<T, LinCombNode>) return n.parts.front().second->dim();
        throw ValidationError("descriptor: unknown node kind");
      },
      v);
}

int node_codim(const FnVariant& v) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TrigPolynomial>) return n.codim;
        if constexpr (std::is_same_v<T, SeriesRef>) return 1;
        if constexpr (std::is_same_v<T, ScaledNode> || std::is_same_v<T, ShiftedNode>)
          return n.inner->codim();
        if constexpr (std::is_same_v<T, ScalarComposedNode>) {
          const auto k = n.map.kind;
          if (k == ScalarMapKind::Identity || k == ScalarMapKind::Sign)
            return n.inner->codim();
          return 1;
        }
        if constexpr (std::is_same_v<T, TabulatedFn>) return n.codim;
        if constexpr (std::is_same_v<T, CustomFn>) return n.codim;
        if constexpr (std::is_same_v<T, LinCombNode>) return n.parts.front().second->codim();
        throw ValidationError("descriptor: unknown node kind");
      },
      v);
}

}  // namespace

int FunctionDescriptor::dim() const { return node_dim(node()); }
int FunctionDescriptor::codim() const { return node_codim(node()); }

FunctionDescriptor make_trig_poly(TrigPolynomial p) {
  p.merge_duplicates();
  validate_trig_poly(p);
  return FunctionDescriptor(FnVariant(std::move(p)));
}

FunctionDescriptor make_series(std::string corpus_name, int trunc) {
  SeriesRef ref;
  ref.entry = &corpus_get(corpus_name);
  if (!ref.entry->is_series) throw KindError("series: corpus entry '" + corpus_name +
                                             "' is not a series");
  ref.name = std::move(corpus_name);
  ref.trunc = trunc;
  return FunctionDescriptor(FnVariant(std::move(ref)));
}

FunctionDescriptor make_tabulated(TabulatedFn t) {
  if (t.values.size() < 2) throw ValidationError("tabulated: needs >= 2 samples");
  if (!(t.dt > 0.0)) throw ValidationError("tabulated: dt must be positive");
  for (const CVec& v : t.values)
    if (static_cast<int>(v.size()) != t.codim)
      throw ValidationError("tabulated: sample arity mismatch");
  return FunctionDescriptor(FnVariant(std::move(t)));
}

FunctionDescriptor make_custom(CustomFn c) {
  if (!c.eval && !c.eval1) throw ValidationError("custom: missing evaluator");
  return FunctionDescriptor(FnVariant(std::move(c)));
}

namespace {

CVec eval_node(const FnVariant& v, const RVec& t);

CVec eval_tabulated(const TabulatedFn& n, double t) {
  const double pos = (t - n.t0) / n.dt;
  const double last = static_cast<double>(n.values.size() - 1);
  if (pos < -kGridSnap || pos > last + kGridSnap)
    throw DomainError("tabulated: point outside domain");
  const double clamped = std::min(std::max(pos, 0.0), last);
  const long long i = std::llround(clamped);
  if (std::abs(clamped - static_cast<double>(i)) <= 1e-9) return n.values[i];
  const std::size_t lo = static_cast<std::size_t>(clamped);
  const double w = clamped - static_cast<double>(lo);
  CVec out(n.values[lo].size());
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = n.values[lo][j] + w * (n.values[lo + 1][j] - n.values[lo][j]);
  return out;
}

CVec eval_node(const FnVariant& v, const RVec& t) {
  return std::visit(
      [&t](const auto& n) -> CVec {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TrigPolynomial>) {
          CVec out(static_cast<std::size_t>(n.codim), Complex(0.0, 0.0));
          for (const TrigTerm& term : n.terms) {
            double phase = 0.0;
            for (std::size_t ax = 0; ax < term.freq.size(); ++ax)
              phase += term.freq[ax] * t[ax];
            const Complex e(std::cos(phase), std::sin(phase));
            for (std::size_t j = 0; j < out.size(); ++j) out[j] += term.coeff[j] * e;
          }
          return out;
        }
        if constexpr (std::is_same_v<T, SeriesRef>) {
          const int N = n.trunc < 0 ? n.entry->default_trunc : n.trunc;
          return CVec{n.entry->partial(t[0], N)};
        }
        if constexpr (std::is_same_v<T, ScaledNode>) {
          CVec out = evaluate(*n.inner, t);
          for (Complex& z : out) z *= n.c;
          return out;
        }
        if constexpr (std::is_same_v<T, ShiftedNode>) {
          RVec shifted(t.size());
          for (std::size_t ax = 0; ax < t.size(); ++ax) shifted[ax] = t[ax] + n.tau[ax];
          return evaluate(*n.inner, shifted);
        }
        if constexpr (std::is_same_v<T, ScalarComposedNode>) {
          CVec in = evaluate(*n.inner, t);
          const auto k = n.map.kind;
          if (k == ScalarMapKind::Identity) return in;
          if (k == ScalarMapKind::Sign) {
            for (Complex& z : in) z = Complex(n.map.apply(z.real()), 0.0);
            return in;
          }
          return CVec{Complex(n.map.apply(vec_norm(in)), 0.0)};
        }
        if constexpr (std::is_same_v<T, TabulatedFn>) return eval_tabulated(n, t[0]);
        if constexpr (std::is_same_v<T, CustomFn>) {
          if (t.size() == 1 && n.eval1) return CVec{n.eval1(t[0])};
          return n.eval(t);
        }
        if constexpr (std::is_same_v<T, LinCombNode>) {
          CVec out(static_cast<std::size_t>(n.parts.front().second->codim()),
                   Complex(0.0, 0.0));
          for (const auto& [c, part] : n.parts) {
            CVec pv = evaluate(*part, t);
            for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * pv[j];
          }
          return out;
        }
      },
      v);
}

Complex eval1_node(const FnVariant& v, double t);

Complex eval1_node(const FnVariant& v, double t) {
  switch (v.index()) {
    case 0: {  // TrigPolynomial
      const auto& n = std::get<TrigPolynomial>(v);
      Complex out(0.0, 0.0);
      for (const TrigTerm& term : n.terms) {
        const double phase = term.freq[0] * t;
        out += term.coeff[0] * Complex(std::cos(phase), std::sin(phase));
      }
      return out;
    }
    case 1: {  // SeriesRef
      const auto& n = std::get<SeriesRef>(v);
      const int N = n.trunc < 0 ? n.entry->default_trunc : n.trunc;
      return n.entry->partial(t, N);
    }
    case 2: {  // ScaledNode
      const auto& n = std::get<ScaledNode>(v);
      return n.c * evaluate1(*n.inner, t);
    }
    case 3: {  // ShiftedNode
      const auto& n = std::get<ShiftedNode>(v);
      return evaluate1(*n.inner, t + n.tau[0]);
    }
    case 4: {  // ScalarComposedNode
      const auto& n = std::get<ScalarComposedNode>(v);
      const Complex in = evaluate1(*n.inner, t);
      const auto k = n.map.kind;
      if (k == ScalarMapKind::Identity) return in;
      if (k == ScalarMapKind::Sign) return Complex(n.map.apply(in.real()), 0.0);
      return Complex(n.map.apply(std::abs(in)), 0.0);
    }
    case 5:  // TabulatedFn
      return eval_tabulated(std::get<TabulatedFn>(v), t)[0];
    case 6: {  // CustomFn
      const auto& n = std::get<CustomFn>(v);
      if (n.eval1) return n.eval1(t);
      return n.eval(RVec{t})[0];
    }
    default: {  // LinCombNode
      const auto& n = std::get<LinCombNode>(v);
      Complex out(0.0, 0.0);
      for (const auto& [c, part] : n.parts) out += c * evaluate1(*part, t);
      return out;
    }
  }
}

}  // namespace

CVec evaluate(const FunctionDescriptor& f, const RVec& t) {
  if (static_cast<int>(t.size()) != f.dim())
    throw ValidationError("evaluate: point arity mismatch");
  return eval_node(f.node(), t);
}

Complex evaluate1(const FunctionDescriptor& f, double t) {
  if (f.dim() != 1 || f.codim() != 1)
    throw ValidationError("evaluate1: requires scalar function of one variable");
  return eval1_node(f.node(), t);
}

CVec evaluate_grid1(const FunctionDescriptor& f, const std::vector<double>& ts, int threads) {
  if (f.dim() != 1 || f.codim() != 1)
    throw ValidationError("evaluate_grid1: requires scalar function of one variable");
  CVec out(ts.size());
  const FnVariant& v = f.node();
  parallel_for(ts.size(), threads, [&](std::size_t i) { out[i] = eval1_node(v, ts[i]); });
  return out;
}

std::vector<CVec> evaluate_grid(const FunctionDescriptor& f, const UniformGrid& grid,
                                int threads) {
  if (static_cast<int>(grid.axes()) != f.dim())
    throw ValidationError("evaluate_grid: grid arity mismatch");
  std::vector<CVec> out(grid.total());
  const FnVariant& v = f.node();
  parallel_for(out.size(), threads, [&](std::size_t i) { out[i] = eval_node(v, grid.point(i)); });
  return out;
}

namespace {

bool bounded_domain(const FunctionDescriptor& f) {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TabulatedFn>) return true;
        if constexpr (std::is_same_v<T, ScaledNode> || std::is_same_v<T, ShiftedNode> ||
                      std::is_same_v<T, ScalarComposedNode>)
          return bounded_domain(*n.inner);
        if constexpr (std::is_same_v<T, LinCombNode>) {
          for (const auto& [c, part] : n.parts)
            if (bounded_domain(*part)) return true;
          return false;
        }
        return false;
      },
      f.node());
}

std::shared_ptr<const FunctionDescriptor> box(const FunctionDescriptor& f) {
  return std::make_shared<const FunctionDescriptor>(f);
}

}  // namespace

FunctionDescriptor translate(const FunctionDescriptor& f, const RVec& tau) {
  if (static_cast<int>(tau.size()) != f.dim())
    throw ValidationError("translate: shift arity mismatch");
  bool zero = true;
  for (double v : tau) zero = zero && v == 0.0;
  if (zero) return f;
  if (bounded_domain(f))
    throw DomainError("translate: shift leaves the descriptor's bounded domain");
  const FnVariant& v = f.node();
  if (const auto* p = std::get_if<TrigPolynomial>(&v)) {
    TrigPolynomial out = *p;
    for (TrigTerm& term : out.terms) {
      double phase = 0.0;
      for (std::size_t ax = 0; ax < term.freq.size(); ++ax) phase += term.freq[ax] * tau[ax];
      const Complex rot(std::cos(phase), std::sin(phase));
      for (Complex& cjk : term.coeff) cjk *= rot;
    }
    return FunctionDescriptor(FnVariant(std::move(out)));
  }
  if (const auto* s = std::get_if<ShiftedNode>(&v)) {
    ShiftedNode out = *s;
    for (std::size_t ax = 0; ax < tau.size(); ++ax) out.tau[ax] += tau[ax];
    return FunctionDescriptor(FnVariant(std::move(out)));
  }
  if (const auto* s = std::get_if<ScaledNode>(&v))
    return scale(translate(*s->inner, tau), s->c);
  if (const auto* s = std::get_if<ScalarComposedNode>(&v))
    return compose_scalar(s->map, translate(*s->inner, tau));
  if (const auto* l = std::get_if<LinCombNode>(&v)) {
    std::vector<std::pair<Complex, FunctionDescriptor>> parts;
    parts.reserve(l->parts.size());
    for (const auto& [c, part] : l->parts) parts.emplace_back(c, translate(*part, tau));
    return lincomb(std::move(parts));
  }
  ShiftedNode out;
  out.inner = box(f);
  out.tau = tau;
  return FunctionDescriptor(FnVariant(std::move(out)));
}

FunctionDescriptor translate1(const FunctionDescriptor& f, double tau) {
  return translate(f, RVec{tau});
}

FunctionDescriptor scale(const FunctionDescriptor& f, Complex c) {
  if (c == Complex(1.0, 0.0)) return f;
  const FnVariant& v = f.node();
  if (const auto* p = std::get_if<TrigPolynomial>(&v)) {
    TrigPolynomial out = *p;
    for (TrigTerm& term : out.terms)
      for (Complex& cjk : term.coeff) cjk *= c;
    return FunctionDescriptor(FnVariant(std::move(out)));
  }
  if (const auto* s = std::get_if<ScaledNode>(&v)) {
    ScaledNode out = *s;
    out.c *= c;
    return FunctionDescriptor(FnVariant(std::move(out)));
  }
  if (const auto* l = std::get_if<LinCombNode>(&v)) {
    LinCombNode out = *l;
    for (auto& [pc, part] : out.parts) pc *= c;
    return FunctionDescriptor(FnVariant(std::move(out)));
  }
  ScaledNode out;
  out.inner = box(f);
  out.c = c;
  return FunctionDescriptor(FnVariant(std::move(out)));
}

FunctionDescriptor compose_scalar(const ScalarMap& map, const FunctionDescriptor& inner) {
  ScalarComposedNode out;
  out.map = map;
  out.inner = box(inner);
  return FunctionDescriptor(FnVariant(std::move(out)));
}

FunctionDescriptor lincomb(std::vector<std::pair<Complex, FunctionDescriptor>> parts) {
  if (parts.empty()) throw ValidationError("lincomb: no parts");
  const int d = parts.front().second.dim();
  const int cd = parts.front().second.codim();
  for (const auto& [c, part] : parts)
    if (part.dim() != d || part.codim() != cd)
      throw ValidationError("lincomb: mismatched part dimensions");

  bool all_poly = true;
  std::vector<TrigPolynomial> polys;
  polys.reserve(parts.size());
  for (const auto& [c, part] : parts) {
    auto p = as_trig_poly(part);
    if (!p) {
      all_poly = false;
      break;
    }
    polys.push_back(std::move(*p));
  }
  if (all_poly) {
    TrigPolynomial merged;
    merged.dim = d;
    merged.codim = cd;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const Complex c = parts[k].first;
      for (TrigTerm& term : polys[k].terms) {
        for (Complex& cjk : term.coeff) cjk *= c;
        merged.terms.push_back(std::move(term));
      }
    }
    return make_trig_poly(std::move(merged));
  }

  LinCombNode out;
  out.parts.reserve(parts.size());
  for (auto& [c, part] : parts) out.parts.emplace_back(c, box(part));
  return FunctionDescriptor(FnVariant(std::move(out)));
}

FunctionDescriptor subtract(const FunctionDescriptor& f, const FunctionDescriptor& g) {
  return lincomb({{Complex(1.0, 0.0), f}, {Complex(-1.0, 0.0), g}});
}

TruncationResult truncate_series(const FunctionDescriptor& f, int N, double window_radius) {
  const auto* ref = std::get_if<SeriesRef>(&f.node());
  if (!ref) throw KindError("truncate_series: descriptor is not a series");
  if (N < 0) throw ValidationError("truncate_series: negative index");
  TruncationResult out;
  out.partial = make_series(ref->name, N);
  out.sup_tail = ref->entry->sup_tail(N, window_radius);
  out.var1_tail = ref->entry->var1_tail ? ref->entry->var1_tail(N)
                                        : std::numeric_limits<double>::quiet_NaN();
  return out;
}

std::optional<TrigPolynomial> as_trig_poly(const FunctionDescriptor& f) {
  const FnVariant& v = f.node();
  if (const auto* p = std::get_if<TrigPolynomial>(&v)) return *p;
  if (const auto* s = std::get_if<ScaledNode>(&v)) {
    auto inner = as_trig_poly(*s->inner);
    if (!inner) return std::nullopt;
    for (TrigTerm& term : inner->terms)
      for (Complex& c : term.coeff) c *= s->c;
    return inner;
  }
  if (const auto* s = std::get_if<ShiftedNode>(&v)) {
    auto inner = as_trig_poly(*s->inner);
    if (!inner) return std::nullopt;
    for (TrigTerm& term : inner->terms) {
      double phase = 0.0;
      for (std::size_t ax = 0; ax < term.freq.size(); ++ax) phase += term.freq[ax] * s->tau[ax];
      const Complex rot(std::cos(phase), std::sin(phase));
      for (Complex& c : term.coeff) c *= rot;
    }
    return inner;
  }
  if (const auto* s = std::get_if<SeriesRef>(&v)) {
    if (!s->entry->partial_trig_poly) return std::nullopt;
    return s->entry->partial_trig_poly(s->trunc < 0 ? s->entry->default_trunc : s->trunc);
  }
  if (const auto* s = std::get_if<ScalarComposedNode>(&v)) {
    if (s->map.kind == ScalarMapKind::Identity) return as_trig_poly(*s->inner);
    return std::nullopt;
  }
  if (const auto* l = std::get_if<LinCombNode>(&v)) {
    TrigPolynomial merged;
    merged.dim = f.dim();
    merged.codim = f.codim();
    for (const auto& [c, part] : l->parts) {
      auto p = as_trig_poly(*part);
      if (!p) return std::nullopt;
      for (TrigTerm& term : p->terms) {
        for (Complex& cjk : term.coeff) cjk *= c;
        merged.terms.push_back(std::move(term));
      }
    }
    merged.merge_duplicates();
    return merged;
  }
  return std::nullopt;
}

double sup_bound(const FunctionDescriptor& f, double window_radius) {
  const FnVariant& v = f.node();
  if (const auto* p = std::get_if<TrigPolynomial>(&v)) return p->sup_bound();
  if (const auto* s = std::get_if<SeriesRef>(&v)) return s->entry->sup_on(window_radius);
  if (const auto* s = std::get_if<ScaledNode>(&v))
    return std::abs(s->c) * sup_bound(*s->inner, window_radius);
  if (const auto* s = std::get_if<ShiftedNode>(&v)) {
    double shift = 0.0;
    for (double t : s->tau) shift = std::max(shift, std::abs(t));
    return sup_bound(*s->inner, window_radius + shift);
  }
  if (const auto* s = std::get_if<ScalarComposedNode>(&v)) {
    const double inner = sup_bound(*s->inner, window_radius);
    switch (s->map.kind) {
      case ScalarMapKind::Identity:
      case ScalarMapKind::Abs:
        return inner;
      case ScalarMapKind::Sign:
        return 1.0;
      case ScalarMapKind::Power:
        return std::pow(inner, s->map.alpha);
      case ScalarMapKind::Arctan:
        return std::atan(inner);
      case ScalarMapKind::MonotoneTable:
        return std::max(std::abs(s->map.apply(inner)), std::abs(s->map.apply(0.0)));
    }
  }
  if (const auto* t = std::get_if<TabulatedFn>(&v)) {
    double m = 0.0;
    for (const CVec& val : t->values) m = std::max(m, vec_norm(val));
    return m;
  }
  if (const auto* cfn = std::get_if<CustomFn>(&v)) {
    if (cfn->sup_hint >= 0.0) return cfn->sup_hint;
    throw ValidationError("sup_bound: custom node without a sup hint");
  }
  if (const auto* l = std::get_if<LinCombNode>(&v)) {
    double s = 0.0;
    for (const auto& [c, part] : l->parts) s += std::abs(c) * sup_bound(*part, window_radius);
    return s;
  }
  throw ValidationError("sup_bound: unsupported descriptor");
}

}  // namespace metap

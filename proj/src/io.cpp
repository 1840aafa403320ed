#include "metap/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "metap/errors.hpp"

namespace metap {

namespace {

Json json_num(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json map_to_json(const ScalarMap& m) {
  switch (m.kind) {
    case ScalarMapKind::Identity: return "identity";
    case ScalarMapKind::Abs: return "abs";
    case ScalarMapKind::Sign: return "sign";
    case ScalarMapKind::Arctan: return "arctan";
    case ScalarMapKind::Power: return Json{{"kind", "power"}, {"alpha", m.alpha}};
    case ScalarMapKind::MonotoneTable: {
      Json nodes = Json::array();
      for (const auto& [x, y] : m.table) nodes.push_back(Json::array({x, y}));
      return Json{{"kind", "monotone_table"}, {"nodes", nodes}};
    }
  }
  throw IoError("descriptor: unknown scalar map");
}

ScalarMap map_from_json(const Json& j) {
  ScalarMap m;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "identity") m.kind = ScalarMapKind::Identity;
    else if (s == "abs") m.kind = ScalarMapKind::Abs;
    else if (s == "sign") m.kind = ScalarMapKind::Sign;
    else if (s == "arctan") m.kind = ScalarMapKind::Arctan;
    else throw IoError("descriptor: unknown scalar map '" + s + "'");
    return m;
  }
  if (!j.is_object() || !j.contains("kind"))
    throw IoError("descriptor: scalar map must be a name or an object with a kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "power") {
    m.kind = ScalarMapKind::Power;
    m.alpha = j.at("alpha").get<double>();
  } else if (kind == "monotone_table") {
    m.kind = ScalarMapKind::MonotoneTable;
    for (const Json& node : j.at("nodes"))
      m.table.emplace_back(node.at(0).get<double>(), node.at(1).get<double>());
  } else {
    throw IoError("descriptor: unknown scalar map kind '" + kind + "'");
  }
  return m;
}

Json custom_to_json(const CustomFn& c) {
  if (c.meta.empty()) throw IoError("descriptor: opaque node is not serializable");
  const Json meta = Json::parse(c.meta, nullptr, false);
  if (!meta.is_object()) throw IoError("descriptor: opaque node is not serializable");
  if (meta.contains("corpus")) return Json{{"kind", "series"}, {"name", meta["corpus"]}};
  if (meta.contains("gevrey_block"))
    return Json{{"kind", "gevrey_block"},
                {"s", meta["gevrey_block"].at("s")},
                {"n", meta["gevrey_block"].at("n")}};
  if (meta.contains("kind")) return meta;
  throw IoError("descriptor: opaque node is not serializable");
}

}  // namespace

Json descriptor_to_json(const FunctionDescriptor& f) {
  if (f.empty()) throw IoError("descriptor: empty function");
  const FnVariant& v = f.node();
  if (const auto* tp = std::get_if<TrigPolynomial>(&v)) {
    Json terms = Json::array();
    for (const TrigTerm& t : tp->terms) {
      Json re = Json::array(), im = Json::array();
      for (const Complex& a : t.coeff) {
        re.push_back(a.real());
        im.push_back(a.imag());
      }
      terms.push_back(Json{{"freq", t.freq}, {"re", re}, {"im", im}});
    }
    return Json{{"kind", "trig_poly"}, {"dim", tp->dim}, {"codim", tp->codim}, {"terms", terms}};
  }
  if (const auto* sr = std::get_if<SeriesRef>(&v))
    return Json{{"kind", "series"}, {"name", sr->name}, {"trunc", sr->trunc}};
  if (const auto* sc = std::get_if<ScaledNode>(&v))
    return Json{{"kind", "scaled"},
                {"re", sc->c.real()},
                {"im", sc->c.imag()},
                {"inner", descriptor_to_json(*sc->inner)}};
  if (const auto* sh = std::get_if<ShiftedNode>(&v))
    return Json{
        {"kind", "shifted"}, {"tau", sh->tau}, {"inner", descriptor_to_json(*sh->inner)}};
  if (const auto* cmp = std::get_if<ScalarComposedNode>(&v))
    return Json{{"kind", "scalar_composed"},
                {"map", map_to_json(cmp->map)},
                {"inner", descriptor_to_json(*cmp->inner)}};
  if (const auto* tab = std::get_if<TabulatedFn>(&v)) {
    Json re = Json::array(), im = Json::array();
    for (const CVec& row : tab->values) {
      Json rr = Json::array(), ri = Json::array();
      for (const Complex& z : row) {
        rr.push_back(z.real());
        ri.push_back(z.imag());
      }
      re.push_back(rr);
      im.push_back(ri);
    }
    return Json{{"kind", "tabulated"}, {"t0", tab->t0},     {"dt", tab->dt},
                {"codim", tab->codim}, {"re", re},          {"im", im}};
  }
  if (const auto* cf = std::get_if<CustomFn>(&v)) return custom_to_json(*cf);
  if (const auto* lc = std::get_if<LinCombNode>(&v)) {
    Json parts = Json::array();
    for (const auto& [coeff, part] : lc->parts)
      parts.push_back(Json{{"re", coeff.real()},
                           {"im", coeff.imag()},
                           {"fn", descriptor_to_json(*part)}});
    return Json{{"kind", "lincomb"}, {"parts", parts}};
  }
  throw IoError("descriptor: unknown node kind");
}

FunctionDescriptor descriptor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw IoError("descriptor: document must be an object with a string kind");
  const std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "trig_poly") {
      TrigPolynomial poly;
      const Json& terms = j.at("terms");
      poly.dim = j.contains("dim") ? j["dim"].get<int>() : -1;
      poly.codim = j.contains("codim") ? j["codim"].get<int>() : -1;
      for (const Json& tj : terms) {
        TrigTerm term;
        term.freq = tj.at("freq").get<RVec>();
        const RVec re = tj.at("re").get<RVec>();
        const RVec im = tj.contains("im") ? tj["im"].get<RVec>() : RVec(re.size(), 0.0);
        if (re.size() != im.size())
          throw IoError("descriptor: re/im arrays must have equal length");
        for (std::size_t k = 0; k < re.size(); ++k) term.coeff.emplace_back(re[k], im[k]);
        if (poly.dim < 0) poly.dim = static_cast<int>(term.freq.size());
        if (poly.codim < 0) poly.codim = static_cast<int>(term.coeff.size());
        poly.terms.push_back(std::move(term));
      }
      if (poly.dim < 0) poly.dim = 1;
      if (poly.codim < 0) poly.codim = 1;
      return make_trig_poly(std::move(poly));
    }
    if (kind == "series") {
      const int trunc = j.contains("trunc") ? j["trunc"].get<int>() : -1;
      return corpus_function(j.at("name").get<std::string>(), trunc);
    }
    if (kind == "scalar_composed")
      return compose_scalar(map_from_json(j.at("map")), descriptor_from_json(j.at("inner")));
    if (kind == "scaled")
      return scale(descriptor_from_json(j.at("inner")),
                   Complex(j.at("re").get<double>(),
                           j.contains("im") ? j["im"].get<double>() : 0.0));
    if (kind == "shifted")
      return translate(descriptor_from_json(j.at("inner")), j.at("tau").get<RVec>());
    if (kind == "tabulated") {
      TabulatedFn tab;
      tab.t0 = j.at("t0").get<double>();
      tab.dt = j.at("dt").get<double>();
      const Json& re = j.at("re");
      const Json& im = j.at("im");
      for (std::size_t r = 0; r < re.size(); ++r) {
        CVec row;
        for (std::size_t c = 0; c < re[r].size(); ++c)
          row.emplace_back(re[r][c].get<double>(), im[r][c].get<double>());
        tab.values.push_back(std::move(row));
      }
      tab.codim = j.contains("codim")
                      ? j["codim"].get<int>()
                      : static_cast<int>(tab.values.empty() ? 1 : tab.values.front().size());
      return make_tabulated(std::move(tab));
    }
    if (kind == "gevrey_block")
      return gevrey_block(j.at("s").get<double>(), j.at("n").get<int>());
    if (kind == "kernel_transform") {
      const Json& kj = j.at("kernel");
      const std::string family = kj.at("family").get<std::string>();
      Kernel kernel;
      if (family == "exp_decay") {
        kernel = make_exp_decay(kj.at("mu").get<double>());
      } else if (family == "power_bound") {
        kernel = make_power_bound(kj.at("M").get<double>(), kj.at("beta").get<double>(),
                                  kj.at("gamma").get<double>());
      } else {
        throw IoError("descriptor: unknown kernel family '" + family + "'");
      }
      const double tol = j.contains("tail_tol") ? j["tail_tol"].get<double>() : 1e-10;
      FunctionDescriptor F =
          infinite_convolution(kernel, descriptor_from_json(j.at("inner")), {}, tol).F;
      if (const auto* cf = std::get_if<CustomFn>(&F.node())) {
        CustomFn rebound = *cf;
        rebound.meta = j.dump();
        return make_custom(std::move(rebound));
      }
      return F;  // exact path collapsed to a trig polynomial
    }
    if (kind == "lincomb") {
      std::vector<std::pair<Complex, FunctionDescriptor>> parts;
      for (const Json& pj : j.at("parts"))
        parts.emplace_back(Complex(pj.at("re").get<double>(),
                                   pj.contains("im") ? pj["im"].get<double>() : 0.0),
                           descriptor_from_json(pj.at("fn")));
      return lincomb(std::move(parts));
    }
  } catch (const Json::exception& e) {
    throw IoError(std::string("descriptor: malformed document: ") + e.what());
  }
  throw IoError("descriptor: unknown kind '" + kind + "'");
}

FunctionDescriptor load_descriptor(const std::string& path) {
  const Json j = Json::parse(read_text_file(path), nullptr, false);
  if (j.is_discarded()) throw IoError("descriptor: invalid JSON in " + path);
  return descriptor_from_json(j);
}

std::string csv_from_curve(const SeminormCurve& curve, const std::string& abscissa_name) {
  std::ostringstream out;
  out << abscissa_name << ",value\n";
  for (std::size_t i = 0; i < curve.abscissae.size(); ++i)
    out << fmt17(curve.abscissae[i]) << ',' << fmt17(curve.values[i]) << '\n';
  return out.str();
}

std::string csv_from_approximation(const ApproximationCurve& curve) {
  std::ostringstream out;
  out << (curve.has_bounds ? "k,error,bound\n" : "k,error\n");
  for (std::size_t i = 0; i < curve.ks.size(); ++i) {
    out << curve.ks[i] << ',' << fmt17(curve.errors[i]);
    if (curve.has_bounds) out << ',' << fmt17(curve.bounds[i]);
    out << '\n';
  }
  return out.str();
}

std::string csv_from_scan(const PeriodScanReport& report) {
  std::ostringstream out;
  out << "tau,residual\n";
  for (double tau : report.periods) {
    const std::size_t k =
        static_cast<std::size_t>(std::llround((tau - report.tau_lo) / report.tau_step));
    out << fmt17(tau) << ',' << fmt17(report.residuals[k]) << '\n';
  }
  return out.str();
}

std::string csv_from_stepanov_scan(const StepanovScanReport& report) {
  std::ostringstream out;
  out << "T,max_integral,argmax_t,converged\n";
  for (const StepanovScanPoint& pt : report.points)
    out << fmt17(pt.T) << ',' << fmt17(pt.max_integral) << ',' << fmt17(pt.argmax_t) << ','
        << (pt.converged ? 1 : 0) << '\n';
  return out.str();
}

Json report_json(const DistanceValue& v) {
  return Json{{"value", v.value},
              {"grid_used", v.grid_used},
              {"refinement_delta", v.refinement_delta}};
}

Json report_json(const SeminormCurve& curve) {
  return Json{{"abscissae", curve.abscissae},
              {"values", curve.values},
              {"limit_estimate", curve.limit_estimate},
              {"estimator", curve.estimator},
              {"converged", curve.converged}};
}

Json report_json(const StepanovScanReport& report) {
  Json points = Json::array();
  for (const StepanovScanPoint& pt : report.points)
    points.push_back(Json{{"T", pt.T},
                          {"max_integral", pt.max_integral},
                          {"argmax_t", pt.argmax_t},
                          {"converged", pt.converged},
                          {"evals", pt.evals}});
  return Json{{"points", points},
              {"window_len", report.window_len},
              {"p", report.p},
              {"all_converged", report.all_converged}};
}

Json report_json(const PeriodScanReport& report) {
  Json clusters = Json::array();
  for (const PeriodCluster& cl : report.clusters)
    clusters.push_back(Json{
        {"center", cl.center}, {"lo", cl.lo}, {"hi", cl.hi}, {"residual", cl.residual}});
  return Json{{"c", complex_json(report.c)},
              {"epsilon", report.epsilon},
              {"tau_lo", report.tau_lo},
              {"tau_hi", report.tau_hi},
              {"tau_step", report.tau_step},
              {"periods", report.periods},
              {"clusters", clusters},
              {"max_gap", json_num(report.max_gap)},
              {"empty_set", report.empty_set},
              {"boundary_censored", report.boundary_censored}};
}

Json report_json(const SemiPeriodicityReport& report) {
  return Json{{"ms", report.ms},
              {"residuals", report.residuals},
              {"max_residual", report.max_residual},
              {"type", report.type}};
}

Json report_json(const NormalityReport& report) {
  return Json{{"translates", report.translates},
              {"selected", report.selected},
              {"pair_residuals", report.pair_residuals},
              {"cauchy_epsilon", report.cauchy_epsilon},
              {"achieved_epsilon", report.achieved_epsilon}};
}

Json report_json(const AxiomReport& report) {
  Json checks = Json::array();
  for (const AxiomCheck& c : report.checks)
    checks.push_back(Json{{"name", c.name},
                          {"pass", c.pass},
                          {"falsifiable_only", c.falsifiable_only},
                          {"measured", json_num(c.measured)},
                          {"bound", c.bound},
                          {"witness", c.witness}});
  return Json{{"family", metric_family_name(report.spec.family)},
              {"p", report.spec.p},
              {"checks", checks},
              {"all_pass", report.all_pass}};
}

Json report_json(const ApproximationCurve& curve) {
  Json bounds = Json::array();
  for (double b : curve.bounds) bounds.push_back(json_num(b));
  return Json{{"ks", curve.ks},
              {"errors", curve.errors},
              {"bounds", bounds},
              {"has_bounds", curve.has_bounds}};
}

Json report_json(const BohrCoefficient& coeff) {
  Json value = Json::array(), half = Json::array();
  for (const Complex& z : coeff.value) value.push_back(complex_json(z));
  for (const Complex& z : coeff.half_T_value) half.push_back(complex_json(z));
  return Json{{"value", value},
              {"half_T_value", half},
              {"richardson_delta", coeff.richardson_delta}};
}

Json report_json(const ConvolutionResult& result, const std::vector<double>& t_points) {
  Json samples = Json::array();
  for (std::size_t i = 0; i < result.samples.size(); ++i)
    samples.push_back(Json{{"t", t_points[i]}, {"value", complex_json(result.samples[i])}});
  return Json{{"samples", samples},
              {"exact", result.exact},
              {"converged", result.converged},
              {"truncation_S", result.truncation_S},
              {"tail_bound", result.tail_bound}};
}

Json report_json(const HeatResult& result, const std::vector<RVec>& points) {
  Json samples = Json::array();
  for (std::size_t i = 0; i < result.samples.size(); ++i) {
    Json value = Json::array();
    for (const Complex& z : result.samples[i]) value.push_back(complex_json(z));
    samples.push_back(Json{{"point", points[i]}, {"value", value}});
  }
  return Json{{"samples", samples}, {"exact", result.exact}, {"radius", result.radius}};
}

Json report_json(const PreservationReport& report) {
  return Json{{"tau", report.tau},
              {"c", complex_json(report.c)},
              {"residual_in", report.residual_in},
              {"residual_out", report.residual_out},
              {"mass", report.mass},
              {"ratio", report.ratio},
              {"dominated", report.dominated},
              {"tolerance", report.tolerance},
              {"lookback", report.lookback},
              {"window_out", Json::array({report.window_out[0].lo, report.window_out[0].hi})},
              {"window_in", Json::array({report.window_in[0].lo, report.window_in[0].hi})}};
}

Json report_json(const VerifyReport& report) {
  Json outcomes = Json::array();
  for (const CheckOutcome& o : report.outcomes)
    outcomes.push_back(Json{{"name", o.name},
                            {"pass", o.pass},
                            {"measured", json_num(o.measured)},
                            {"bound", json_num(o.bound)},
                            {"note", o.note}});
  return Json{{"entry", report.entry}, {"outcomes", outcomes}, {"all_pass", report.all_pass}};
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace metap

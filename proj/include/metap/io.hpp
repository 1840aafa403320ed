#ifndef METAP_IO_HPP
#define METAP_IO_HPP

#include <string>

#include <json.hpp>

#include "metap/approx.hpp"
#include "metap/convops.hpp"
#include "metap/corpus.hpp"
#include "metap/gennorms.hpp"
#include "metap/periods.hpp"
#include "metap/pseudometrics.hpp"

namespace metap {

using Json = nlohmann::json;

// Descriptor schema: {"kind":"trig_poly","terms":[{"freq":[...],"re":[...],"im":[...]}]}
// | {"kind":"series","name":...,"trunc":N} | {"kind":"scalar_composed","map":...,"inner":...}
// | {"kind":"tabulated",...} | {"kind":"gevrey_block",...} | {"kind":"kernel_transform",...}
// | {"kind":"scaled"|"shifted"|"lincomb",...}. One descriptor per document.
Json descriptor_to_json(const FunctionDescriptor& f);
FunctionDescriptor descriptor_from_json(const Json& j);
FunctionDescriptor load_descriptor(const std::string& path);

// CSV bodies: UTF-8, comma separators, '\n' endings, mandatory header,
// 17-significant-digit numbers, stable column order.
std::string csv_from_curve(const SeminormCurve& curve, const std::string& abscissa_name);
std::string csv_from_approximation(const ApproximationCurve& curve);
std::string csv_from_scan(const PeriodScanReport& report);
std::string csv_from_stepanov_scan(const StepanovScanReport& report);

Json report_json(const DistanceValue& v);
Json report_json(const SeminormCurve& curve);
Json report_json(const StepanovScanReport& report);
Json report_json(const PeriodScanReport& report);
Json report_json(const SemiPeriodicityReport& report);
Json report_json(const NormalityReport& report);
Json report_json(const AxiomReport& report);
Json report_json(const ApproximationCurve& curve);
Json report_json(const BohrCoefficient& coeff);
Json report_json(const ConvolutionResult& result, const std::vector<double>& t_points);
Json report_json(const HeatResult& result, const std::vector<RVec>& points);
Json report_json(const PreservationReport& report);
Json report_json(const VerifyReport& report);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace metap

#endif

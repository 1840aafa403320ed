#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "metap/cli.hpp"
#include "metap/errors.hpp"
#include "metap/io.hpp"

using namespace metap;

namespace {

int run(const std::vector<std::string>& args, std::string* captured = nullptr) {
  std::vector<std::string> full{"metap"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : full) argv.push_back(a.c_str());

  std::ostringstream buf;
  std::streambuf* old = std::cout.rdbuf(buf.rdbuf());
  const int code = run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old);
  if (captured) *captured = buf.str();
  return code;
}

std::string tmp_path(const std::string& stem) {
  return "/tmp/metap_cli_test_" + stem;
}

std::string slurp(const std::string& path) { return read_text_file(path); }

void spit(const std::string& path, const std::string& content) {
  write_text_file(path, content);
}

}  // namespace

TEST_CASE("distance command emits a JSON summary with the computed value") {
  const std::string fn = tmp_path("const2.json");
  spit(fn, R"({"kind":"trig_poly","terms":[{"freq":[0.0],"re":[2.0],"im":[0.0]}]})");
  const std::string out = tmp_path("dist_out.json");

  std::string stdout_text;
  const int code = run({"distance", "--fn", "json:" + fn, "--against", "zero",
                        "--metric", "sup", "--window", "0:10", "--out", out},
                       &stdout_text);
  CHECK(code == 0);

  const Json j = Json::parse(stdout_text);
  CHECK(j.at("command") == "distance");
  CHECK(j.at("result").at("value").get<double>() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(Json::parse(slurp(out)) == j);
  std::remove(fn.c_str());
  std::remove(out.c_str());
}

TEST_CASE("corpus and partial function specs resolve") {
  std::string text;
  const int code = run({"distance", "--fn", "corpus:semi-anti@8", "--against", "partial:2",
                        "--metric", "sup", "--window", "0:20"},
                       &text);
  CHECK(code == 0);
  const double v = Json::parse(text).at("result").at("value").get<double>();
  CHECK(v > 0.0);
  CHECK(v < 0.4);
}

TEST_CASE("bad invocations exit with the validation code") {
  CHECK(run({"frobnicate"}) == 2);
  CHECK(run({}) == 2);
  CHECK(run({"distance", "--fn", "martian:x", "--against", "zero"}) == 2);
  CHECK(run({"distance", "--fn", "corpus:semi-anti", "--against", "zero",
             "--metric", "no_such_family"}) == 2);
  CHECK(run({"seminorm", "--family", "stepanov", "--fn", "corpus:semi-anti", "--p", "0.5"}) ==
        2);
  CHECK(run({"distance", "--fn", "partial:3", "--against", "zero"}) == 2);
}

TEST_CASE("malformed descriptors exit 2, unreadable paths exit 4") {
  const std::string bad = tmp_path("bad.json");
  spit(bad, "{not json at all");
  CHECK(run({"distance", "--fn", "json:" + bad, "--against", "zero"}) == 2);
  spit(bad, R"({"kind":"no_such_kind"})");
  CHECK(run({"distance", "--fn", "json:" + bad, "--against", "zero"}) == 2);
  std::remove(bad.c_str());

  CHECK(run({"distance", "--fn", "json:/tmp/metap_does_not_exist_477.json",
             "--against", "zero"}) == 4);
  const std::string fn = tmp_path("sin.json");
  spit(fn, R"({"kind":"trig_poly","terms":[{"freq":[1.0],"re":[1.0],"im":[0.0]}]})");
  CHECK(run({"distance", "--fn", "json:" + fn, "--against", "zero", "--out",
             "/tmp/metap_no_such_dir_477/out.json"}) == 4);
  std::remove(fn.c_str());
}

TEST_CASE("non-convergent seminorm curves exit 3") {
  const std::string fn = tmp_path("sin3.json");
  spit(fn,
       R"({"kind":"trig_poly","terms":[{"freq":[1.0],"re":[0.0],"im":[-0.5]},)"
       R"({"freq":[-1.0],"re":[0.0],"im":[0.5]}]})");
  std::string text;
  const int code = run({"seminorm", "--family", "besicovitch", "--fn", "json:" + fn,
                        "--a", "0.3", "--grid-count", "8"},
                       &text);
  CHECK(code == 3);
  CHECK_FALSE(Json::parse(text).at("curve").at("converged").get<bool>());
  std::remove(fn.c_str());
}

TEST_CASE("csv emission writes a header plus one row per abscissa") {
  const std::string csv = tmp_path("weyl.csv");
  const int code = run({"seminorm", "--family", "weyl", "--fn", "corpus:haraux@16",
                        "--anchor-window", "0:20", "--grid-count", "4", "--csv", csv});
  CHECK(code == 0);
  const std::string body = slurp(csv);
  std::istringstream lines(body);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "l,value");
  CHECK(rows[1].rfind("1,", 0) == 0);
  CHECK(body.find("\r") == std::string::npos);
  std::remove(csv.c_str());
}

TEST_CASE("csv requested on a command without curves is a validation error") {
  CHECK(run({"distance", "--fn", "corpus:semi-anti@2", "--against", "zero", "--csv",
             tmp_path("never.csv")}) == 2);
}

TEST_CASE("verify runs corpus checks and exits clean") {
  std::string text;
  const int code = run({"verify", "gevrey", "--threads", "2"}, &text);
  CHECK(code == 0);
  const Json j = Json::parse(text);
  CHECK(j.at("result").at("all_pass").get<bool>());
  CHECK(run({"verify", "unknown-entry"}) == 2);
}

TEST_CASE("verify output is byte-identical across thread counts") {
  const std::string out1 = tmp_path("v1.json");
  const std::string out4 = tmp_path("v4.json");
  std::string text1, text4;
  CHECK(run({"verify", "sign-pair", "--threads", "1", "--out", out1}, &text1) == 0);
  CHECK(run({"verify", "sign-pair", "--threads", "4", "--out", out4}, &text4) == 0);
  CHECK(text1 == text4);
  CHECK(slurp(out1) == slurp(out4));
  std::remove(out1.c_str());
  std::remove(out4.c_str());
}

TEST_CASE("periods command emits sorted periods and a csv table") {
  const std::string fn = tmp_path("sin_p.json");
  spit(fn,
       R"({"kind":"trig_poly","terms":[{"freq":[1.0],"re":[0.0],"im":[-0.5]},)"
       R"({"freq":[-1.0],"re":[0.0],"im":[0.5]}]})");
  const std::string csv = tmp_path("periods.csv");
  std::string text;
  const int code = run({"periods", "--fn", "json:" + fn, "--eps", "0.1", "--range", "0:7",
                        "--step", "0.05", "--window", "0:30", "--csv", csv},
                       &text);
  CHECK(code == 0);
  const Json j = Json::parse(text);
  const auto periods = j.at("result").at("periods").get<std::vector<double>>();
  REQUIRE(!periods.empty());
  for (std::size_t i = 1; i < periods.size(); ++i) CHECK(periods[i] > periods[i - 1]);

  std::istringstream lines(slurp(csv));
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  CHECK(rows.size() == periods.size() + 1);
  CHECK(rows[0] == "tau,residual");
  std::remove(fn.c_str());
  std::remove(csv.c_str());
}

TEST_CASE("descriptor JSON round-trips canonically for every kind") {
  std::vector<std::string> docs{
      R"({"kind":"trig_poly","terms":[{"freq":[1.5],"re":[2.0],"im":[0.0]},)"
      R"({"freq":[-0.5],"re":[1.0],"im":[-1.0]}]})",
      R"({"kind":"series","name":"semi-anti","trunc":6})",
      R"({"kind":"scaled","re":0.0,"im":2.0,)"
      R"("inner":{"kind":"series","name":"haraux","trunc":8}})",
      R"({"kind":"shifted","tau":[1.25],)"
      R"("inner":{"kind":"trig_poly","terms":[{"freq":[1.0],"re":[1.0],"im":[0.0]}]}})",
      R"({"kind":"scalar_composed","map":"abs",)"
      R"("inner":{"kind":"series","name":"semi-anti","trunc":3}})",
      R"({"kind":"tabulated","t0":0.0,"dt":0.5,)"
      R"("re":[[0.0],[1.0],[0.0]],"im":[[0.0],[0.5],[1.0]]})",
      R"({"kind":"gevrey_block","s":2.0,"n":2})",
      R"({"kind":"lincomb","parts":[)"
      R"({"re":1.0,"im":0.0,"fn":{"kind":"series","name":"semi-anti","trunc":2}},)"
      R"({"re":-1.0,"im":0.0,"fn":{"kind":"series","name":"semi-anti","trunc":4}}]})",
  };
  for (const std::string& text : docs) {
    const Json doc = Json::parse(text);
    const FunctionDescriptor f = descriptor_from_json(doc);
    const Json once = descriptor_to_json(f);
    const FunctionDescriptor g = descriptor_from_json(once);
    const Json twice = descriptor_to_json(g);
    CHECK(once == twice);
    for (double t : {0.1, 0.9}) {
      CHECK(std::abs(evaluate1(f, t) - evaluate1(g, t)) <= 1e-14);
    }
  }
}

TEST_CASE("kernel transform descriptors rebuild through their metadata") {
  const Json doc = Json::parse(
      R"({"kind":"kernel_transform","kernel":{"family":"power_bound","M":1.0,)"
      R"("beta":0.5,"gamma":2.0},"tail_tol":1e-8,)"
      R"("inner":{"kind":"trig_poly","terms":[{"freq":[1.0],"re":[0.5],"im":[0.0]},)"
      R"({"freq":[-1.0],"re":[0.5],"im":[0.0]}]}})");
  const FunctionDescriptor f = descriptor_from_json(doc);
  const Json round = descriptor_to_json(f);
  const FunctionDescriptor g = descriptor_from_json(round);
  CHECK(descriptor_to_json(g) == round);
  CHECK(std::abs(evaluate1(f, 0.0) - evaluate1(g, 0.0)) <= 1e-9);
  CHECK(std::abs(evaluate1(f, 0.0).real() - 1.5579198314763517) <= 1e-5);
}

TEST_CASE("io primitives reject missing files and bad documents") {
  CHECK_THROWS_AS((void)load_descriptor("/tmp/metap_missing_8812.json"), IoError);
  CHECK_THROWS_AS((void)descriptor_from_json(Json::parse(R"({"kind":"wat"})")), IoError);
  TrigPolynomial p;
  p.terms.push_back({{1.0}, {Complex(1.0, 0.0)}});
  CustomFn opaque;
  opaque.tag = "opaque";
  opaque.eval1 = [](double) { return Complex(0.0, 0.0); };
  opaque.sup_hint = 1.0;
  CHECK_THROWS_AS((void)descriptor_to_json(make_custom(opaque)), IoError);
}

TEST_CASE("csv serializers follow the fixed shapes") {
  SeminormCurve empty;
  CHECK(csv_from_curve(empty, "t") == "t,value\n");

  SeminormCurve three;
  three.abscissae = {1.0, 2.0, 4.0};
  three.values = {0.5, 0.25, 1.0 / 3.0};
  const std::string body = csv_from_curve(three, "l");
  std::istringstream lines(body);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 4);
  CHECK(rows[3].find("0.3333333333333333") != std::string::npos);
}

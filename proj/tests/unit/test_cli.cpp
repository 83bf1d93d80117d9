#include <doctest.h>

#include <sstream>

#include "posmap/cli.hpp"
#include "posmap/poly_parse.hpp"

using namespace posmap;
using namespace posmap::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "posmap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(POSMAP_TEST_DATA_DIR) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string line_after(const std::string& text, const std::string& key) {
  const auto at = text.find(key);
  if (at == std::string::npos) return {};
  const auto start = at + key.size();
  return text.substr(start, text.find('\n', start) - start);
}

}  // namespace

TEST_CASE("negation map is not positive") {
  const auto r = invoke({"decide", data("negation_n1.json")});
  CHECK(r.code == kExitNo);
  CHECK(contains(r.out, "verdict: no"));
  const auto witness = line_after(r.out, "witness: (");
  CHECK(std::count(witness.begin(), witness.end(), ',') == 3);
  const auto value = parse_rational(line_after(r.out, "value at witness: "));
  CHECK(sgn(value) < 0);
}

TEST_CASE("witness re-evaluates on the printed polynomial") {
  const auto r = invoke({"decide", data("negation_n1.json")});
  const auto poly = parse_multipoly(line_after(r.out, "polynomial: "), 4);
  std::string w = line_after(r.out, "witness: (");
  w = w.substr(0, w.find(')'));
  std::vector<Rational> point;
  std::stringstream ss(w);
  for (std::string item; std::getline(ss, item, ',');) point.push_back(parse_rational(item.substr(item.find_first_not_of(' '))));
  REQUIRE(point.size() == 4);
  CHECK(poly.eval(point) == parse_rational(line_after(r.out, "value at witness: ")));
}

TEST_CASE("identity map under the default caps is unknown") {
  const auto r = invoke({"decide", data("identity_n1.json")});
  CHECK(r.code == kExitUnknown);
  CHECK(contains(r.out, "verdict: unknown-capped"));
  CHECK(contains(r.out, "exhaustive mode was not run"));
  CHECK(contains(r.out, "exhaustive: false"));
  CHECK(contains(r.out, "work cap: 1000000"));
  CHECK(contains(r.out, "sturm decisions: 0"));
}

TEST_CASE("transpose map has no sampled witness") {
  const auto r = invoke({"falsify", "--samples", "500", data("transpose_n2.json")});
  CHECK(r.code == kExitUnknown);
  const auto d = invoke({"decide", "--samples", "500", data("transpose_n2.json")});
  CHECK(d.code == kExitUnknown);
}

TEST_CASE("falsify and nonneg on inline polynomials") {
  CHECK(invoke({"falsify", "-x1^2"}).code == kExitNo);
  CHECK(invoke({"falsify", "x1^2 + x2^2"}).code == kExitUnknown);
  CHECK(invoke({"nonneg", "x1^2"}).code == kExitYes);
  CHECK(invoke({"nonneg", "x1*x2"}).code == kExitNo);
  CHECK(invoke({"nonneg", "--work-cap", "1", "--samples", "0", "x1^2"}).code == kExitUnknown);
}

TEST_CASE("sturm queries") {
  auto r = invoke({"sturm", "tarski", "x^3 - x", "x"});
  CHECK(r.code == kExitYes);
  CHECK(r.out == "0\n");
  CHECK(invoke({"sturm", "count", "x^3 - x", "x + 2", "1"}).out == "3\n");
  CHECK(invoke({"sturm", "exists-pos", "x", "-x"}).code == kExitNo);
  CHECK(invoke({"sturm", "exists-pos", "-x", "4 - x^2"}).code == kExitYes);
  CHECK(invoke({"sturm", "exists-pos", "x"}).code == kExitUsage);
}

TEST_CASE("usage and parse errors") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({"nonneg", "--work-cap", "5", "--exhaustive", "x1^2"}).code == kExitUsage);
  CHECK(invoke({"nonneg", "x1^2 + x2"}).code == kExitUsage);
  CHECK(invoke({"nonneg", "x1^2 +"}).code == kExitUsage);
  const auto bad = invoke({"choi", R"({"n": 1, "terms": [{"alpha": "1", "matrix": [[{"re": 0.5, "im": "0"}]]}]})"});
  CHECK(bad.code == kExitUsage);
  CHECK(contains(bad.err, "$.terms[0].matrix[0][0].re"));
  CHECK(invoke({"decide", R"({"n": 1, "terms": [{"alpha": "0", "matrix": [[{"re": "1", "im": "0"}]]}]})"}).code ==
        kExitUsage);
  CHECK(invoke({"poly", "--route", "sideways", data("identity_n1.json")}).code == kExitUsage);
}

TEST_CASE("routes print identical polynomials") {
  const auto kraus = invoke({"poly", "--route", "kraus", data("transpose_n2.json")});
  const auto choi = invoke({"poly", "--route", "choi", data("transpose_n2.json")});
  const auto dsum = invoke({"poly", "--route", "doublesum", data("transpose_n2.json")});
  CHECK(kraus.code == kExitYes);
  CHECK(kraus.out == choi.out);
  CHECK(kraus.out == dsum.out);
  // The printed text re-parses to itself.
  const auto p = parse_multipoly(kraus.out, 8);
  CHECK(posmap::to_string(p) + "\n" == kraus.out);
}

TEST_CASE("choi entries") {
  const auto r = invoke({"choi", data("negation_n1.json")});
  CHECK(r.code == kExitYes);
  CHECK(r.out == "T(1,1)(1,1) = (-1, 0)\n");
}

TEST_CASE("runs are byte-identical and echo their configuration") {
  const std::vector<std::string> args{"decide", "--seed", "9", "--samples", "300", "--format", "structured",
                                      data("negation_n1.json")};
  const auto a = invoke(args), b = invoke(args);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "\"seed\": 9"));
  CHECK(contains(a.out, "\"samples\": 300"));
  const auto t1 = invoke({"nonneg", "--samples", "0", "x1^2"}), t2 = invoke({"nonneg", "--samples", "0", "x1^2"});
  CHECK(t1.out == t2.out);
  CHECK(contains(t1.out, "samples: 0"));
}

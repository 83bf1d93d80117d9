#include <fstream>
#include <sstream>

#include <json.hpp>

#include "posmap/choi.hpp"

namespace posmap::choi {
namespace {

using json = nlohmann::json;

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw ParseError("map file: field '" + path + "': " + what);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) field_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) field_error(path + "." + key, "missing");
  return *it;
}

Rational read_rational(const json& v, const std::string& path) {
  if (v.is_number_float()) field_error(path, "floating-point literals are not accepted; use \"num/den\"");
  if (v.is_number_integer()) return Rational(Integer(v.dump(), 10));
  if (!v.is_string()) field_error(path, "expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    field_error(path, e.what());
  }
}

}  // namespace

HermMap parse_map_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.what() carries "at line L, column C".
    throw ParseError(std::string("map file: malformed JSON: ") + e.what());
  }
  const json& jn = require(doc, "n", "$");
  if (!jn.is_number_unsigned() || jn.get<std::uint64_t>() == 0) field_error("$.n", "expected a positive integer");
  const auto n = static_cast<std::size_t>(jn.get<std::uint64_t>());
  const json& jterms = require(doc, "terms", "$");
  if (!jterms.is_array() || jterms.empty()) field_error("$.terms", "expected a nonempty list");

  std::vector<KrausTerm> terms;
  for (std::size_t r = 0; r < jterms.size(); ++r) {
    const std::string tpath = "$.terms[" + std::to_string(r) + "]";
    const json& jt = jterms[r];
    Rational alpha = read_rational(require(jt, "alpha", tpath), tpath + ".alpha");
    if (sgn(alpha) == 0) field_error(tpath + ".alpha", "alpha must be nonzero");
    const json& jm = require(jt, "matrix", tpath);
    if (!jm.is_array() || jm.size() != n) field_error(tpath + ".matrix", "expected " + std::to_string(n) + " rows");
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string rpath = tpath + ".matrix[" + std::to_string(i) + "]";
      if (!jm[i].is_array() || jm[i].size() != n) field_error(rpath, "expected " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) {
        const std::string epath = rpath + "[" + std::to_string(j) + "]";
        const json& je = jm[i][j];
        a(i, j) = ComplexRational(read_rational(require(je, "re", epath), epath + ".re"),
                                  read_rational(require(je, "im", epath), epath + ".im"));
      }
    }
    terms.push_back({std::move(alpha), std::move(a)});
  }
  return HermMap(n, std::move(terms));
}

HermMap load_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open map file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_map_json(ss.str());
}

std::string to_map_json(const HermMap& phi) {
  json doc;
  doc["n"] = phi.dim();
  doc["terms"] = json::array();
  for (const auto& [alpha, a] : phi.terms()) {
    json jm = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < a.dim(); ++j) row.push_back({{"re", posmap::to_string(a(i, j).re)}, {"im", posmap::to_string(a(i, j).im)}});
      jm.push_back(std::move(row));
    }
    doc["terms"].push_back({{"alpha", posmap::to_string(alpha)}, {"matrix", std::move(jm)}});
  }
  return doc.dump(2);
}

}  // namespace posmap::choi

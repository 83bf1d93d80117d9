#include "posmap/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "posmap/poly_parse.hpp"
#include "posmap/sturm.hpp"

namespace posmap::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A path to an existing file is read; anything else is taken literally.
std::string resolve_input(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot open " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

const std::string& single_input(const RunConfig& c, std::size_t count) {
  if (c.inputs.size() != count) throw UsageError(c.command + ": expected " + std::to_string(count) + " argument(s)");
  return c.inputs.front();
}

int verdict_exit(renegar::Verdict v) {
  switch (v) {
    case renegar::Verdict::kYes: return kExitYes;
    case renegar::Verdict::kNo: return kExitNo;
    case renegar::Verdict::kUnknownCapped: return kExitUnknown;
  }
  return kExitUnknown;
}

choi::PositivityPolynomial checked_poly(const choi::HermMap& phi, choi::Route route) {
  if (!choi::cross_check_routes(phi)) throw std::logic_error("positivity polynomial routes disagree");
  return choi::positivity_poly(phi, route);
}

std::string point_text(const std::vector<Rational>& point) {
  std::string s = "(";
  for (std::size_t i = 0; i < point.size(); ++i) s += (i ? ", " : "") + posmap::to_string(point[i]);
  return s + ")";
}

int cmd_decide(const RunConfig& c, std::ostream& out) {
  const auto phi = choi::parse_map_json(resolve_input(single_input(c, 1)));
  const auto p = choi::positivity_poly(phi, c.route);
  const auto report = decide_positivity(phi, c);
  if (c.format == Format::kStructured) {
    ordered_json doc;
    doc["route"] = choi::to_string(c.route);
    doc["polynomial"] = posmap::to_string(p.poly());
    doc["report"] = ordered_json::parse(renegar::format_structured(report));
    out << doc.dump(2) << '\n';
  } else {
    out << "route: " << choi::to_string(c.route) << '\n';
    out << "positivity polynomial: " << posmap::to_string(p.poly()) << '\n';
    out << renegar::format_text(report);
  }
  return verdict_exit(report.verdict);
}

int cmd_poly(const RunConfig& c, std::ostream& out) {
  const auto phi = choi::parse_map_json(resolve_input(single_input(c, 1)));
  const auto p = checked_poly(phi, c.route);
  if (c.format == Format::kStructured) {
    ordered_json doc;
    doc["route"] = choi::to_string(c.route);
    doc["variables"] = p.poly().variables();
    doc["polynomial"] = posmap::to_string(p.poly());
    out << doc.dump(2) << '\n';
  } else {
    out << posmap::to_string(p.poly()) << '\n';
  }
  return kExitYes;
}

int cmd_choi(const RunConfig& c, std::ostream& out) {
  const auto phi = choi::parse_map_json(resolve_input(single_input(c, 1)));
  const auto t = choi::choi_matrix(phi);
  const std::size_t n = t.dim();
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const auto& z = t(i, j, k, l);
          if (c.format == Format::kStructured) {
            entries.push_back({{"index", {i + 1, j + 1, k + 1, l + 1}},
                               {"re", posmap::to_string(z.re)},
                               {"im", posmap::to_string(z.im)}});
          } else {
            out << "T(" << i + 1 << ',' << j + 1 << ")(" << k + 1 << ',' << l + 1 << ") = " << posmap::to_string(z)
                << '\n';
          }
        }
  if (c.format == Format::kStructured) {
    ordered_json doc;
    doc["n"] = n;
    doc["entries"] = entries;
    out << doc.dump(2) << '\n';
  }
  return kExitYes;
}

int cmd_nonneg(const RunConfig& c, std::ostream& out) {
  const auto g = parse_multipoly(resolve_input(single_input(c, 1)));
  const auto report = renegar::decide_nonneg(g, decide_options(c));
  out << (c.format == Format::kStructured ? renegar::format_structured(report) : renegar::format_text(report));
  return verdict_exit(report.verdict);
}

int cmd_falsify(const RunConfig& c, std::ostream& out) {
  const std::string text = resolve_input(single_input(c, 1));
  const MultiPoly g = looks_like_json(text) ? checked_poly(choi::parse_map_json(text), c.route).poly()
                                            : parse_multipoly(text);
  const auto w = renegar::falsify_by_sampling(g, c.samples, c.seed);
  if (c.format == Format::kStructured) {
    ordered_json doc;
    doc["seed"] = c.seed;
    doc["samples"] = c.samples;
    if (w) {
      ordered_json pt = ordered_json::array();
      for (const auto& x : *w) pt.push_back(posmap::to_string(x));
      doc["witness"] = pt;
      doc["value"] = posmap::to_string(g.eval(*w));
    } else {
      doc["witness"] = nullptr;
    }
    out << doc.dump(2) << '\n';
  } else if (w) {
    out << "witness: " << point_text(*w) << '\n' << "value: " << posmap::to_string(g.eval(*w)) << '\n';
  } else {
    out << "no negative value in " << c.samples << " samples (seed " << c.seed << ")\n";
  }
  return w ? kExitNo : kExitUnknown;
}

int cmd_sturm(const RunConfig& c, std::ostream& out) {
  std::vector<UniPoly> ps;
  const std::size_t want = c.query == "count" ? 3 : 2;
  if (c.inputs.size() != want) throw UsageError("sturm " + c.query + ": expected " + std::to_string(want) + " polynomials");
  for (const auto& arg : c.inputs) ps.push_back(parse_unipoly(resolve_input(arg)));
  if (c.query == "exists-pos") {
    const bool r = sturm::exists_both_positive(ps[0], ps[1]);
    out << (r ? "true" : "false") << '\n';
    return r ? kExitYes : kExitNo;
  }
  if (c.query == "tarski") {
    out << sturm::tarski_query(ps[0], ps[1]) << '\n';
    return kExitYes;
  }
  if (c.query == "count") {
    out << sturm::count_pos_pos(ps[0], ps[1], ps[2]) << '\n';
    return kExitYes;
  }
  throw UsageError("unknown sturm query: " + c.query);
}

}  // namespace

renegar::DecideOptions decide_options(const RunConfig& config) {
  renegar::DecideOptions o;
  o.seed = config.seed;
  o.samples = config.samples;
  o.work_cap = config.work_cap;
  o.max_system_size = config.max_system_size;
  return o;
}

renegar::DecisionReport decide_positivity(const choi::HermMap& phi, const RunConfig& config) {
  const auto p = choi::positivity_poly(phi, config.route);
  const auto other = config.route == choi::Route::kKraus ? choi::Route::kChoi : choi::Route::kKraus;
  if (!(choi::positivity_poly(phi, other) == p)) throw std::logic_error("positivity polynomial routes disagree");
  return renegar::decide_nonneg(p.poly(), decide_options(config));
}

int run_subcommand(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "decide") return cmd_decide(config, out);
    if (config.command == "poly") return cmd_poly(config, out);
    if (config.command == "choi") return cmd_choi(config, out);
    if (config.command == "nonneg") return cmd_nonneg(config, out);
    if (config.command == "falsify") return cmd_falsify(config, out);
    if (config.command == "sturm") return cmd_sturm(config, out);
    throw UsageError("unknown command: " + config.command);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide positivity of hermiticity-preserving maps with exact arithmetic", "posmap"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig config;
  std::optional<std::uint64_t> work_cap;
  std::optional<std::uint64_t> max_system;
  bool exhaustive = false;
  std::string route = "kraus";
  std::string format = "text";
  app.add_option("--seed", config.seed, "Seed of the sampling falsifier");
  app.add_option("--samples", config.samples, "Number of falsifier samples");
  auto* cap_opt = app.add_option("--work-cap", work_cap, "Maximum number of Sturm decisions (default 1000000)");
  auto* size_opt =
      app.add_option("--max-system-size", max_system, "Largest construction matrix to build (default 64)");
  app.add_flag("--exhaustive", exhaustive, "Run the full enumeration without caps")->excludes(cap_opt)->excludes(size_opt);
  app.add_option("--route", route, "Positivity polynomial route")->check(CLI::IsMember({"kraus", "choi", "doublesum"}));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  auto add_cmd = [&](const std::string& name, const std::string& help, const std::string& arg) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option(arg, config.inputs, "File path or inline text")->required();
    return sub;
  };
  add_cmd("decide", "Decide positivity of a map (map file)", "map");
  add_cmd("poly", "Print the positivity polynomial of a map", "map");
  add_cmd("choi", "Print the Choi operator entries of a map", "map");
  add_cmd("nonneg", "Decide nonnegativity of a homogeneous polynomial", "poly");
  add_cmd("falsify", "Search for a point where a polynomial or map polynomial is negative", "input");
  auto* sturm_cmd = app.add_subcommand("sturm", "Univariate Sturm queries");
  sturm_cmd->require_subcommand(1);
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"exists-pos", "Is there t with p(t) > 0 and q(t) > 0"},
           {"tarski", "Tarski query TaQ(g, f)"},
           {"count", "Roots of f where p > 0 and q > 0"}}) {
    auto* q = sturm_cmd->add_subcommand(name, help);
    q->add_option("polys", config.inputs, "Univariate polynomials in x")->required();
  }

  // A polynomial such as "-x^2" would read as a short option; a leading space
  // hides the dash from the option parser and is stripped again below.
  std::vector<std::string> args(argv, argv + argc);
  for (std::size_t i = 1; i < args.size(); ++i)
    if (args[i].size() > 1 && args[i][0] == '-' && args[i][1] != '-' && args[i] != "-h") args[i].insert(0, " ");
  std::vector<const char*> patched;
  for (const auto& a : args) patched.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(patched.size()), patched.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  for (auto& in : config.inputs) in.erase(0, in.find_first_not_of(' '));
  const auto* chosen = app.get_subcommands().front();
  config.command = chosen->get_name();
  if (config.command == "sturm") config.query = chosen->get_subcommands().front()->get_name();
  config.route = choi::parse_route(route);
  config.format = format == "structured" ? Format::kStructured : Format::kText;
  if (exhaustive) {
    config.work_cap.reset();
    config.max_system_size.reset();
  } else {
    if (work_cap) config.work_cap = work_cap;
    if (max_system) config.max_system_size = max_system;
  }
  return run_subcommand(config, out, err);
}

}  // namespace posmap::cli

#include <sstream>

#include <json.hpp>

#include "posmap/renegar.hpp"

namespace posmap::renegar {

namespace {

std::string point_text(const std::vector<Rational>& point) {
  std::string s = "(";
  for (std::size_t i = 0; i < point.size(); ++i) s += (i ? ", " : "") + posmap::to_string(point[i]);
  return s + ")";
}

std::string optional_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "none"; }

}  // namespace

std::string format_text(const DecisionReport& r) {
  std::ostringstream out;
  const auto& log = r.log;
  out << "verdict: " << to_string(r.verdict) << '\n';
  if (r.witness) {
    out << "witness: " << point_text(*r.witness) << '\n';
    out << "value at witness: " << posmap::to_string(*r.witness_value) << '\n';
    out << "witness source: " << r.witness_source << '\n';
  }
  out << "seed: " << r.seed << '\n';
  out << "samples: " << r.samples << '\n';
  out << "work cap: " << optional_text(r.work_cap) << '\n';
  out << "max system size: " << optional_text(r.max_system_size) << '\n';
  out << "work log:\n";
  out << "  samples drawn: " << log.samples_drawn << '\n';
  out << "  system sizes: " << log.system0_size << ", " << log.system1_size << '\n';
  out << "  |R_g|: " << log.rg_size << " (" << log.rg_distinct_up_to_scalar << " up to scalar)\n";
  out << "  |J|: " << log.j_count << '\n';
  out << "  |B|: " << log.beta_count << '\n';
  out << "  triples examined: " << log.triples_examined << " (" << log.triples_skipped_zero << " with a zero polynomial)\n";
  out << "  sturm decisions: " << log.sturm_decisions << '\n';
  out << "  max chain length: " << log.max_chain_length << '\n';
  out << "  exhaustive: " << (log.exhaustive ? "true" : "false") << '\n';
  for (const auto& note : log.notes) out << "  note: " << note << '\n';
  return out.str();
}

std::string format_structured(const DecisionReport& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["verdict"] = to_string(r.verdict);
  if (r.witness) {
    ordered_json w = ordered_json::array();
    for (const auto& x : *r.witness) w.push_back(posmap::to_string(x));
    doc["witness"] = w;
    doc["witness_value"] = posmap::to_string(*r.witness_value);
    doc["witness_source"] = r.witness_source;
  } else {
    doc["witness"] = nullptr;
  }
  doc["seed"] = r.seed;
  doc["samples"] = r.samples;
  doc["work_cap"] = r.work_cap ? ordered_json(*r.work_cap) : ordered_json(nullptr);
  doc["max_system_size"] = r.max_system_size ? ordered_json(*r.max_system_size) : ordered_json(nullptr);
  const auto& log = r.log;
  ordered_json wl;
  wl["samples_drawn"] = log.samples_drawn;
  wl["system0_size"] = log.system0_size;
  wl["system1_size"] = log.system1_size;
  wl["rg_size"] = log.rg_size;
  wl["rg_distinct_up_to_scalar"] = log.rg_distinct_up_to_scalar;
  wl["j_count"] = log.j_count;
  wl["beta_count"] = log.beta_count;
  wl["triples_examined"] = log.triples_examined;
  wl["triples_skipped_zero"] = log.triples_skipped_zero;
  wl["sturm_decisions"] = log.sturm_decisions;
  wl["max_chain_length"] = log.max_chain_length;
  wl["exhaustive"] = log.exhaustive;
  wl["notes"] = log.notes;
  doc["work_log"] = wl;
  return doc.dump(2) + "\n";
}

}  // namespace posmap::renegar

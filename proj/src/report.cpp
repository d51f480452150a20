#include "report.hpp"

#include <json.hpp>

namespace mcgb {

std::string render_text(const Report& r) {
  std::string out = "suite: " + r.suite + "\n";
  for (const auto& [k, v] : r.header) out += k + "=" + v + " ";
  if (!r.header.empty()) out += "\n";
  out += "checks: " + std::to_string(r.total()) +
         "  passed: " + std::to_string(r.total() - r.failures()) +
         "  failed: " + std::to_string(r.failures()) + "\n";
  for (const auto& c : r.checks) {
    out += c.passed ? "ok   " : "FAIL ";
    out += c.name;
    for (const auto& [k, v] : c.params) out += " " + k + "=" + v;
    if (!c.claim.empty()) out += " | " + c.claim;
    if (c.witness) out += "\n     witness: " + *c.witness;
    out += "\n";
  }
  return out;
}

std::string render_structured(const Report& r) {
  nlohmann::ordered_json header;
  header["suite"] = r.suite;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.header) cfg[k] = v;
  header["config"] = cfg;
  header["checks"] = r.total();
  header["passed"] = r.total() - r.failures();
  header["failed"] = r.failures();
  std::string out = header.dump() + "\n";
  for (const auto& c : r.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    j["params"] = params;
    j["passed"] = c.passed;
    j["witness"] = c.witness ? nlohmann::ordered_json(*c.witness)
                             : nlohmann::ordered_json(nullptr);
    j["claim"] = c.claim;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace mcgb

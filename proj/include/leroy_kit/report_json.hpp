#ifndef LEROY_KIT_REPORT_JSON_HPP
#define LEROY_KIT_REPORT_JSON_HPP

// JSON form of identity reports. Non-finite numbers are written as null.

#include <string>
#include <vector>

#include <json.hpp>

#include "leroy_kit/harness.hpp"

namespace leroy_kit {

using ordered_json = nlohmann::ordered_json;

inline ordered_json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

inline ordered_json to_json(const GridPoint& p) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : p.params) j[k] = json_number(v);
  return j;
}

inline ordered_json to_json(const IdentityReport& r) {
  ordered_json j;
  j["identity_id"] = r.identity_id;
  j["paper_anchor"] = r.paper_anchor;
  ordered_json grid = ordered_json::array();
  for (const auto& p : r.grid) grid.push_back(to_json(p));
  j["grid"] = std::move(grid);
  j["max_abs_err"] = json_number(r.max_abs_err);
  j["tolerance"] = json_number(r.tolerance);
  j["status"] = to_string(r.status);
  j["oracle"] = r.oracle;
  j["printed_form"] = r.printed_form;
  j["error_kind"] = to_string(r.error_kind);
  if (!r.error_note.empty()) j["error_note"] = r.error_note;
  return j;
}

inline ordered_json to_json(const std::vector<IdentityReport>& reports) {
  ordered_json j = ordered_json::array();
  for (const auto& r : reports) j.push_back(to_json(r));
  return j;
}

}  // namespace leroy_kit

#endif  // LEROY_KIT_REPORT_JSON_HPP

#pragma once

// Validator for the machine-readable CLI output.  Every field is optional;
// present fields must carry the published type, and no other field may appear.

#include <string>

#include <json.hpp>

namespace slicereg::testing {

inline bool valid_orbit(const nlohmann::json& o, std::string& why) {
  if (!o.is_object()) return why = "orbit: not an object", false;
  for (const auto& [key, value] : o.items()) {
    if (key != "kind" && key != "lambda" && key != "isotropy") return why = "orbit: unknown field " + key, false;
    if (!value.is_string()) return why = "orbit." + key + ": not a string", false;
  }
  return true;
}

inline bool valid_checks(const nlohmann::json& c, std::string& why) {
  if (!c.is_array()) return why = "checks: not an array", false;
  for (const auto& item : c) {
    if (!item.is_object() || item.size() != 3) return why = "checks: malformed entry", false;
    if (!item.contains("name") || !item["name"].is_string()) return why = "checks: name", false;
    if (!item.contains("pass") || !item["pass"].is_boolean()) return why = "checks: pass", false;
    if (!item.contains("detail") || !item["detail"].is_string()) return why = "checks: detail", false;
  }
  return true;
}

inline bool valid_output(const nlohmann::json& doc, std::string& why) {
  if (!doc.is_object()) return why = "document: not an object", false;
  if (!doc.contains("command") || !doc["command"].is_string()) return why = "command: missing", false;
  for (const auto& [key, value] : doc.items()) {
    if (key == "command" || key == "trace" || key == "norm" || key == "cdiv" || key == "branch" ||
        key == "norm_alpha") {
      if (!value.is_string()) return why = key + ": not a string", false;
    } else if (key == "inputs" || key == "intertwiners") {
      if (!value.is_array()) return why = key + ": not an array", false;
      for (const auto& s : value) {
        if (!s.is_string()) return why = key + ": element not a string", false;
      }
    } else if (key == "equivalent" || key == "invertible_on_C") {
      if (!value.is_boolean()) return why = key + ": not a boolean", false;
    } else if (key == "reason") {
      if (!value.is_string() && !value.is_null()) return why = "reason: not string or null", false;
    } else if (key == "orbit") {
      if (!valid_orbit(value, why)) return false;
    } else if (key == "checks") {
      if (!valid_checks(value, why)) return false;
    } else {
      return why = "unknown field " + key, false;
    }
  }
  return true;
}

}  // namespace slicereg::testing

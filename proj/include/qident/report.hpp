#pragma once

#include <json.hpp>

#include <string>

namespace qident {

/// Machine-readable outcome of one CLI verification run. status is "pass"
/// exactly when every asserted equality or bracket in details held.
struct Report {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  bool pass = false;
  nlohmann::json details = nlohmann::json::object();
  double timing_ms = 0.0;

  nlohmann::json to_json() const;
};

}  // namespace qident

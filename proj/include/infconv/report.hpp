#pragma once

#include <json.hpp>

#include <string>

namespace infconv {

// Structured pass/fail evidence emitted by every verifier. `theorem` is the
// stable identifier of the statement being checked (it matches the CLI
// subcommand that produces the report).
struct TheoremReport {
  std::string theorem;
  bool hypothesis_met = true;
  bool holds = false;
  long long checks = 0;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

nlohmann::ordered_json report_to_json(const TheoremReport& r);

}  // namespace infconv

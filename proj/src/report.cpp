#include "infconv/report.hpp"

namespace infconv {

nlohmann::ordered_json report_to_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  j["hypothesis_met"] = r.hypothesis_met;
  j["holds"] = r.holds;
  j["checks"] = r.checks;
  j["witnesses"] = r.witnesses;
  j["violations"] = r.violations;
  j["details"] = r.details;
  return j;
}

}  // namespace infconv

#include "qident/report.hpp"

namespace qident {

nlohmann::json Report::to_json() const {
  return nlohmann::json{{"command", command},
                        {"parameters", parameters},
                        {"status", pass ? "pass" : "fail"},
                        {"details", details},
                        {"timing_ms", timing_ms}};
}

}  // namespace qident

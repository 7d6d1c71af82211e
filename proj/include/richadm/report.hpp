#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace richadm {

// Outcome of one verification routine: what was checked, how many instances,
// and structured records for anything that failed.
struct CheckReport {
  std::string name;
  std::string instance;
  long long n_checked = 0;
  std::vector<nlohmann::json> failures;

  bool ok() const { return failures.empty(); }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["theorem"] = name;
    j["instance"] = instance;
    j["n_checked"] = n_checked;
    j["failures"] = failures;
    return j;
  }
};

}  // namespace richadm

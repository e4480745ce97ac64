#pragma once

#include <optional>
#include <string>
#include <vector>

namespace whitdaha {

struct CheckResult {
  std::string id;          // stable identity tag
  std::string anchor;      // formula tag the check certifies
  std::string status;      // "pass" | "fail" | "skipped"
  std::string detail;      // first mismatch / skip reason
  double wall_ms = 0;

  bool passed() const { return status == "pass"; }
  static CheckResult pass(std::string id, std::string anchor);
  static CheckResult fail(std::string id, std::string anchor, std::string detail);
  static CheckResult skip(std::string id, std::string anchor, std::string reason);
};

std::string results_to_json(const std::vector<CheckResult>& rs, const std::string& config_echo,
                            unsigned seed);

}  // namespace whitdaha

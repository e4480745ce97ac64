#include "whitdaha/report.hpp"

#include <json.hpp>

namespace whitdaha {

CheckResult CheckResult::pass(std::string id, std::string anchor) {
  return CheckResult{std::move(id), std::move(anchor), "pass", "", 0};
}
CheckResult CheckResult::fail(std::string id, std::string anchor, std::string detail) {
  return CheckResult{std::move(id), std::move(anchor), "fail", std::move(detail), 0};
}
CheckResult CheckResult::skip(std::string id, std::string anchor, std::string reason) {
  return CheckResult{std::move(id), std::move(anchor), "skipped", std::move(reason), 0};
}

std::string results_to_json(const std::vector<CheckResult>& rs, const std::string& config_echo,
                            unsigned seed) {
  nlohmann::json j;
  j["config"] = config_echo;
  j["seed"] = seed;
  int pass = 0, fail = 0, skip = 0;
  nlohmann::json arr = nlohmann::json::array();
  for (auto& r : rs) {
    nlohmann::json e;
    e["identity_id"] = r.id;
    e["anchor"] = r.anchor;
    e["status"] = r.status;
    if (!r.detail.empty()) e["detail"] = r.detail;
    e["wall_ms"] = r.wall_ms;
    arr.push_back(e);
    if (r.status == "pass") ++pass;
    else if (r.status == "fail") ++fail;
    else ++skip;
  }
  j["checks"] = arr;
  j["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skip}};
  return j.dump(2);
}

}  // namespace whitdaha

#pragma once

#include "whitdaha/asympt.hpp"
#include "whitdaha/globalfn.hpp"

namespace whitdaha {

// Run configuration shared by the CLI and the python module.
struct RunConfig {
  char family = 'A';
  int rank = 1;
  char lattice = 'P';
  std::string task = "verify_all";
  int sweep_box = 2;
  int cutoff = 16;       // in v units
  int parallel = 1;
  // numeric block
  double q = 0.5;
  double k = 1.0;
  std::vector<double> x = {0.8};
  std::vector<double> lambda = {0.9};
  int n_max = 40;
  std::string out_path;
  std::string format = "json";  // json | csv | text
};

// Execute the selected task; results are sorted by identity id.
std::vector<CheckResult> run_task(const RunConfig& cfg);

// Canonical text of a named polynomial family member.
std::string emit_polynomial(const RunConfig& cfg, const std::string& kind, const Wt& weight);

std::string results_to_text(const std::vector<CheckResult>& rs);
std::string config_echo(const RunConfig& cfg);

}  // namespace whitdaha

#include <CLI11.hpp>
#include <json.hpp>

#include "whitdaha/suite.hpp"

#include <fstream>
#include <iostream>

using namespace whitdaha;

namespace {

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  nlohmann::json j;
  in >> j;
  if (j.contains("root_system")) {
    auto& r = j["root_system"];
    if (r.contains("family")) cfg.family = r["family"].get<std::string>().at(0);
    if (r.contains("rank")) cfg.rank = r["rank"].get<int>();
    if (r.contains("lattice")) cfg.lattice = r["lattice"].get<std::string>().at(0);
  }
  if (j.contains("task")) cfg.task = j["task"].get<std::string>();
  if (j.contains("sweep_box")) cfg.sweep_box = j["sweep_box"].get<int>();
  if (j.contains("cutoff")) cfg.cutoff = j["cutoff"].get<int>();
  if (j.contains("parallel")) cfg.parallel = j["parallel"].get<int>();
  if (j.contains("numeric")) {
    auto& nn = j["numeric"];
    if (nn.contains("q")) cfg.q = nn["q"].get<double>();
    if (nn.contains("k")) cfg.k = nn["k"].get<double>();
    if (nn.contains("x")) cfg.x = nn["x"].get<std::vector<double>>();
    if (nn.contains("lambda")) cfg.lambda = nn["lambda"].get<std::vector<double>>();
    if (nn.contains("n_max")) cfg.n_max = nn["n_max"].get<int>();
  }
  if (j.contains("output")) {
    auto& o = j["output"];
    if (o.contains("path")) cfg.out_path = o["path"].get<std::string>();
    if (o.contains("format")) cfg.format = o["format"].get<std::string>();
  }
}

std::vector<int> parse_weight(const std::string& s) {
  std::vector<int> w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) w.push_back(std::stoi(tok));
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Macdonald polynomials, q-Whittaker series and their identities"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path, type_str, weight_str, kind = "barP";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", type_str, "root system family (A..G)");
    sub->add_option("--rank", cfg.rank, "rank of the root system");
    sub->add_option("--lattice", cfg.lattice, "lattice choice: P or Q");
    sub->add_option("--box", cfg.sweep_box, "sweep box for lattice coordinates");
    sub->add_option("--cutoff", cfg.cutoff, "series order in v units");
    sub->add_option("--out", cfg.out_path, "output file path");
    sub->add_option("--format", cfg.format, "json, csv or text");
  };

  CLI::App* run = app.add_subcommand("run", "run verification tasks");
  run->add_option("--config", config_path, "JSON configuration file");
  run->add_option("--task", cfg.task, "task name (verify_all, verify_relations, ...)");
  run->add_option("--parallel", cfg.parallel, "number of concurrent checks");
  run->add_option("--q", cfg.q, "numeric base, 0 < q < 1");
  run->add_option("--k", cfg.k, "numeric Hecke exponent");
  run->add_option("--n-max", cfg.n_max, "limit sweep length");
  add_common(run);

  CLI::App* poly = app.add_subcommand("poly", "print one polynomial in canonical form");
  poly->add_option("--kind", kind, "E, P, barE or barP");
  poly->add_option("--weight", weight_str, "comma separated weight coordinates")->required();
  add_common(poly);

  CLI::App* rootdata = app.add_subcommand("rootdata", "dump root datum as JSON");
  add_common(rootdata);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed() && !config_path.empty()) {
      RunConfig file_cfg;
      load_config_file(config_path, file_cfg);
      // command line overrides file values
      if (type_str.empty()) type_str = std::string(1, file_cfg.family);
      for (auto& [flag, apply] : std::vector<std::pair<std::string, std::function<void()>>>{
               {"--rank", [&] { cfg.rank = file_cfg.rank; }},
               {"--lattice", [&] { cfg.lattice = file_cfg.lattice; }},
               {"--task", [&] { cfg.task = file_cfg.task; }},
               {"--box", [&] { cfg.sweep_box = file_cfg.sweep_box; }},
               {"--cutoff", [&] { cfg.cutoff = file_cfg.cutoff; }},
               {"--parallel", [&] { cfg.parallel = file_cfg.parallel; }},
               {"--q", [&] { cfg.q = file_cfg.q; }},
               {"--k", [&] { cfg.k = file_cfg.k; }},
               {"--n-max", [&] { cfg.n_max = file_cfg.n_max; }},
               {"--out", [&] { cfg.out_path = file_cfg.out_path; }},
               {"--format", [&] { cfg.format = file_cfg.format; }}})
        if (run->count(flag) == 0) apply();
      cfg.x = file_cfg.x;
      cfg.lambda = file_cfg.lambda;
    }
    if (!type_str.empty()) cfg.family = type_str.at(0);

    if (rootdata->parsed()) {
      RootDatum d = RootDatum::build(family_from_char(cfg.family), cfg.rank,
                                     cfg.lattice == 'Q' ? LatticeChoice::Q : LatticeChoice::P);
      std::cout << d.json_dump() << "\n";
      return 0;
    }
    if (poly->parsed()) {
      std::string text = emit_polynomial(cfg, kind, parse_weight(weight_str));
      if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path);
        out << text << "\n";
      } else {
        std::cout << text << "\n";
      }
      return 0;
    }
    // run
    auto results = run_task(cfg);
    std::string payload = cfg.format == "text" ? results_to_text(results)
                                               : results_to_json(results, config_echo(cfg), 0);
    if (!cfg.out_path.empty()) {
      std::ofstream out(cfg.out_path);
      out << payload << "\n";
    }
    std::cout << payload << "\n";
    bool any_fail = false;
    for (auto& r : results) any_fail = any_fail || r.status == "fail";
    return any_fail ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

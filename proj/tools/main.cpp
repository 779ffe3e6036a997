#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crdyn/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Run a closed-relation dynamics scenario"};
  std::string scenario_path;
  std::uint64_t seed = 0;
  std::string emit_path;
  bool quiet = false;
  app.add_option("--scenario", scenario_path, "Scenario file")->required();
  app.add_option("--seed", seed, "Seed for randomized suites");
  app.add_option("--emit", emit_path, "Write the machine-readable report (JSON) here");
  app.add_flag("--quiet", quiet, "Only print the final summary line");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::ifstream in(scenario_path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << scenario_path << "\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  crdyn::cli::Scenario scenario;
  try {
    scenario = crdyn::cli::parse_scenario(buffer.str());
  } catch (const crdyn::Error& e) {
    std::cerr << scenario_path << ": " << e.what() << "\n";
    return 2;
  }

  const auto report = crdyn::cli::run(scenario, seed);
  if (quiet) {
    std::cout << (report.all_met ? "all expectations met" : "some expectations not met") << "\n";
  } else {
    std::cout << report.text;
  }
  if (!emit_path.empty()) {
    std::ofstream out(emit_path, std::ios::binary);
    out << report.json;
    if (!out) {
      std::cerr << "cannot write " << emit_path << "\n";
      return 2;
    }
  }
  return report.all_met ? 0 : 1;
}

#include "gauge2/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
  CLI::App app{"Exact verification suites for 2-gauge exterior calculus"};

  std::string scenario_path;
  std::string suite = "all";
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int trials = 0;

  app.add_option("--scenario", scenario_path, "scenario file path")->required();
  app.add_option("--suite", suite, "one of: axioms bianchi closedness chsas chern-weil proof-steps gauge-invariance eom boundary all");
  app.add_option("--seed", seed, "override the scenario seed")->each([&](const std::string&) {
    seed_set = true;
  });
  app.add_option("--trials", trials, "override the scenario trial count");
  app.add_option("--format", format, "text | records")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--out", out_path, "write the report to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    gauge2::Scenario scenario = gauge2::load_scenario_file(scenario_path);
    if (seed_set) scenario.seed = seed;
    if (trials > 0) scenario.trials = trials;

    const gauge2::Report report = gauge2::run_suite(scenario, suite);
    const std::string doc =
        format == "records" ? gauge2::emit_records(report) : gauge2::emit_text(report);

    if (out_path.empty()) {
      std::cout << doc;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return 2;
      }
      out << doc;
    }
    return report.overall_pass() ? 0 : 1;
  } catch (const gauge2::ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return 2;
  } catch (const gauge2::SuiteError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

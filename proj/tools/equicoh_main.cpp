#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "equicoh/acceptance.hpp"
#include "equicoh/errors.hpp"
#include "equicoh/scenario.hpp"

namespace {

int run_command(const std::string& path, const std::string& out_path, int cutoff, int seed,
                const std::string& format) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open scenario file: " << path << "\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  equicoh::Scenario s = equicoh::parse_scenario(buffer.str());
  // command-line options win over the file's options section
  if (cutoff > 0) s.cutoff = cutoff;
  if (seed > 0) s.seed = seed;
  if (!format.empty()) s.machine = format == "machine";
  equicoh::validate_scenario(s);

  equicoh::RunResult result = equicoh::run_scenario(s);
  if (out_path.empty()) {
    std::cout << result.report;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write report to: " << out_path << "\n";
      return 2;
    }
    out << result.report;
  }
  return result.verified_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact equivariant cohomology of flag-type zero schemes"};
  app.require_subcommand(1);

  std::string scenario_path, out_path, format;
  int cutoff = 0, seed = 0;
  CLI::App* run = app.add_subcommand("run", "evaluate a scenario file and emit its report");
  run->add_option("scenario", scenario_path, "scenario file")->required();
  run->add_option("--out", out_path, "write the report to this file instead of stdout");
  run->add_option("--cutoff", cutoff, "override the degree cutoff")->check(CLI::Range(1, 64));
  run->add_option("--seed", seed, "override the sampling seed")
      ->check(CLI::Range(1, 1000000));
  run->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "machine"}));

  CLI::App* list = app.add_subcommand("list", "print the built-in scenario catalog");
  CLI::App* verify = app.add_subcommand("verify-all", "run the complete verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      std::cout << equicoh::builtin_catalog();
      return 0;
    }
    if (verify->parsed()) {
      return equicoh::run_acceptance(std::cout) == 0 ? 0 : 1;
    }
    return run_command(scenario_path, out_path, cutoff, seed, format);
  } catch (const equicoh::ResourceError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const equicoh::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

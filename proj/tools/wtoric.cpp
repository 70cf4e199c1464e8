#include "wtoric/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int emit(const wtoric::RunResult& rr, const std::string& out_path) {
  const std::string text = rr.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path);
    if (!os) {
      std::cerr << "cannot open " << out_path << "\n";
      return 2;
    }
    os << text;
  }
  return rr.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"wtoric: Weyl-symmetric polytopes, chamber quotients, and graded algebra verification"};
  app.set_version_flag("--version", std::string("wtoric ") + wtoric::engine_version());
  app.require_subcommand(0, 1);

  std::string config_path, out_path, example_name;
  int sweep_cap = 3;

  CLI::App* cmd_run = app.add_subcommand("run", "run a pipeline job from a JSON config");
  cmd_run->add_option("config", config_path, "job config (JSON)")->required();
  cmd_run->add_option("--out", out_path, "write the report to a file instead of stdout");

  CLI::App* cmd_example = app.add_subcommand("example", "reproduce a worked example against embedded expectations");
  cmd_example->add_option("name", example_name, "a2-hexagon | i25-pentagon")->required();

  CLI::App* cmd_selftest = app.add_subcommand("selftest", "sweep the supported types and verify the dossier");
  cmd_selftest->add_option("--rank-cap", sweep_cap, "largest rank included in the sweep")
      ->default_val(3);
  cmd_selftest->add_option("--out", out_path, "write the report to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_run->parsed()) {
      std::ifstream is(config_path);
      if (!is) {
        std::cerr << "cannot open " << config_path << "\n";
        return 2;
      }
      wtoric::Json j = wtoric::Json::parse(is);
      return emit(wtoric::run(wtoric::parse_config(j)), out_path);
    }
    if (cmd_example->parsed()) {
      wtoric::RunResult rr = wtoric::run_example(example_name);
      if (!rr.ok) std::cerr << rr.report["golden"].get<std::string>();
      return emit(rr, "");
    }
    if (cmd_selftest->parsed()) {
      wtoric::RunResult rr = wtoric::selftest(sweep_cap);
      std::cerr << rr.report["summary"].get<std::string>();
      return emit(rr, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << app.help();
  return 0;
}

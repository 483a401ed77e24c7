// glab: batch driver for exact equivariant computations. Reads a JSON task
// document, runs the named computation, writes a JSON report to stdout.
// Exit codes: 0 completed, 2 inconclusive verdict, 1 error.

#include "glab/task.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{"exact invariant-theory computations over Z and Z/n"};
  app.require_subcommand(1);

  std::string task_file;
  glab::TaskOverrides overrides;
  CLI::App* run = app.add_subcommand("run", "execute a task document");
  run->add_option("file", task_file, "JSON task document")->required();
  run->add_option("--d-max", overrides.d_max, "override the degree search bound");
  run->add_option("--s-max", overrides.s_max, "override the exponent search bound");
  run->add_option("--degree", overrides.degree, "override the truncation degree");
  run->add_option("--seed", overrides.seed, "override the sampling seed");

  CLI::App* check = app.add_subcommand("check", "run the embedded fixture suite");

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) return glab::run_embedded_checks(std::cout) ? 0 : 1;

  std::ifstream in(task_file);
  if (!in) {
    std::cerr << "glab: cannot open " << task_file << "\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  try {
    glab::TaskSpec spec = glab::parse_spec(buffer.str());
    spec = glab::apply_overrides(std::move(spec), overrides);
    glab::Report report = glab::run_task(spec);
    std::cout << report.dump() << "\n";
    if (report.exit_code != 0 && report.doc.contains("results") &&
        report.doc["results"].contains("error"))
      std::cerr << "glab: " << report.doc["results"]["error"].get<std::string>() << "\n";
    return report.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "glab: " << e.what() << "\n";
    return 1;
  }
}

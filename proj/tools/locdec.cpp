#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "locdec/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace locdec::cli;
  CLI::App app{"Block-diagonal decomposability of matrices over Q[x]_(x)"};
  app.set_version_flag("--version", "locdec 0.1.0");

  std::string command_name, input;
  Flags flags;
  std::size_t fitting_index = 0;
  std::string factors;
  unsigned long seed = 0;
  bool json = false;

  app.add_option("command", command_name,
                 "fitting | check | decompose | split | mf | jacobian | assumptions")
      ->required();
  app.add_option("input", input, "problem file, or - for stdin")->required();
  app.add_option("--matrix", flags.matrix, "matrix name (default: the only matrix)");
  auto* j_opt = app.add_option("-j,--index", fitting_index, "Fitting ideal index (fitting)");
  app.add_option("--f1", flags.f1, "first factor (polynomial name)");
  app.add_option("--f2", flags.f2, "second factor (polynomial name)");
  app.add_option("--j1", flags.j1, "first ideal (ideal or polynomial name)");
  app.add_option("--j2", flags.j2, "second ideal (ideal or polynomial name)");
  app.add_option("--factors", factors, "comma separated polynomial names; mf accepts name^p");
  app.add_option("--map", flags.map, "map name (jacobian)");
  app.add_flag("--skip-kernel-check", flags.skip_kernel_check,
               "do not test the kernel condition of the rectangular criterion");
  app.add_option("--max-order", flags.max_order, "jet order for certificates")
      ->check(CLI::Range(1u, 1000u));
  auto* seed_opt = app.add_option("--seed", seed, "recorded in the report; algorithms are deterministic");
  app.add_flag("--json", json, "machine-readable report");
  app.add_flag("--timing", flags.timing, "include wall time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_code::kInputError;
  }

  auto command = parse_command(command_name);
  if (!command) {
    std::cerr << "unknown command '" << command_name << "'\n";
    return exit_code::kInputError;
  }
  if (j_opt->count()) flags.fitting_index = fitting_index;
  if (seed_opt->count()) flags.seed = seed;
  std::stringstream fs(factors);
  for (std::string item; std::getline(fs, item, ',');)
    if (!item.empty()) flags.factors.push_back(item);

  std::string text;
  try {
    text = read_input(input);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return exit_code::kInputError;
  }

  ReportDocument report = run_command(*command, text, flags);
  std::cout << (json ? emit_json(report) : emit_text(report));
  if (report.exit_code == exit_code::kInputError || report.exit_code >= exit_code::kResourceBound)
    std::cerr << report.verdict << ": " << report.result.value("error", "") << "\n";
  return report.exit_code;
}

// mot2: block decompositions, verification suites and exports for finite groups.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cli/commands.hpp"

namespace {

void add_common(CLI::App* cmd, mot2::cli::RunConfig& config) {
  auto* group = cmd->add_option("--group", config.group, "catalog name or definition like 'G = perm(3): (1 2), (1 2 3)'");
  cmd->add_option("--group-file", config.group_file, "file holding a group definition")->excludes(group);
  cmd->add_option("--field", config.field, "Q or Fp:<p>");
  cmd->add_option("--seed", config.seed, "seed for sampled checks");
  cmd->add_option("--json", config.json_path, "write the JSON report here ('-' for standard output)");
  cmd->add_option("--max-order", config.max_order, "largest accepted group order");
}

int emit(const mot2::cli::CommandOutput& out, const mot2::cli::RunConfig& config, bool json_by_default) {
  const std::string text = out.report.dump(2) + "\n";
  if (config.json_path == "-" || (config.json_path.empty() && json_by_default)) {
    std::cout << text;
    return out.exit_code;
  }
  std::cout << out.summary;
  if (!config.json_path.empty()) {
    std::ofstream file(config.json_path);
    if (!(file << text)) {
      std::cerr << "error: cannot write " << config.json_path << "\n";
      return 2;
    }
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossed Burnside algebras, permutation modules and Mackey functors of finite groups"};
  app.require_subcommand(1);
  mot2::cli::RunConfig config;
  std::string kind;

  auto* blocks = app.add_subcommand("blocks", "block idempotents of kG and their lifts");
  add_common(blocks, config);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, config);
  verify->add_option("--suite", config.suites, "suites: all or a comma list of biequivalence, adjunctions, yoshida, "
                                               "mackey-axioms, decat, blocks")
      ->required()
      ->delimiter(',');
  verify->add_option("--samples", config.samples, "samples per sampled property");
  verify->add_flag("--timings", config.timings, "include wall times in the JSON report");

  auto* exporter = app.add_subcommand("export", "write an algebra, matrix or table as JSON");
  add_common(exporter, config);
  exporter->add_option("kind", kind, "group, xburnside, center, rho, burnside or mackey")->required();
  exporter->add_option("--from", config.from, "mackey: source G/H by subgroup class position");
  exporter->add_option("--to", config.to, "mackey: target G/H by subgroup class position");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*blocks) return emit(mot2::cli::cmd_blocks(config), config, false);
    if (*verify) return emit(mot2::cli::cmd_verify(config), config, false);
    return emit(mot2::cli::cmd_export(config, kind), config, true);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

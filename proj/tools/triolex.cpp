#include <iostream>

#include "CLI11.hpp"
#include "triolex/workspace.hpp"

int main(int argc, char** argv) {
  CLI::App app{"triolex: exact calculus on triole algebras"};
  app.require_subcommand(1);

  std::string file;
  bool pretty = false;

  auto* validate = app.add_subcommand("validate", "validate every object in a workspace file");
  validate->add_option("file", file, "workspace JSON")->required();
  validate->add_flag("--pretty", pretty, "indent the report");

  std::string cmd, target;
  int dmax = 3;
  auto* analyze = app.add_subcommand("analyze", "run one analysis on a named object");
  analyze->add_option("file", file, "workspace JSON")->required();
  analyze->add_option("--cmd", cmd, "curvature, flat-check, poisson-check, symbol, atiyah, h0, bracket or gauge")
      ->required();
  analyze->add_option("--target", target, "object name (bracket takes X,Y)")->required();
  analyze->add_flag("--pretty", pretty, "indent the report");
  analyze->add_option("--dmax", dmax, "degree bound for h0")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : triolex::kExitSchema;
  }

  const triolex::CommandResult r =
      validate->parsed() ? triolex::cmd_validate(file) : triolex::cmd_analyze(file, cmd, target, dmax);
  if (!r.diagnostic.empty()) std::cerr << "triolex: " << r.diagnostic << "\n";
  std::cout << triolex::render(r.report, pretty);
  return r.exit_code;
}

#include <cstdlib>
#include <iostream>

#include "commands.hpp"
#include "lkcds/errors.hpp"

int main(int argc, char** argv) {
  using namespace lkcds;
  CLI::App app{"approximate kernels for connected distance-r domination"};
  app.require_subcommand(1);
  cli::RunConfig cfg;
  std::function<int()> run;
  cli::register_commands(app, cfg, run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }

  try {
    return run();
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return cli::kBudget;
  } catch (const ContractError& e) {
    std::cerr << "contract: " << e.what() << '\n';
    return cli::kVerifyFailed;
  } catch (const Error& e) {
    std::cerr << "input: " << e.what() << '\n';
    return cli::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInputError;
  }
}

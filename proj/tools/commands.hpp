#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include <CLI11.hpp>

namespace lkcds::cli {

// stable process exit codes
enum Exit : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kBudget = 3, kRejected = 10 };

struct RunConfig {
  std::string input;
  std::string format = "edgelist";
  std::string kernel;
  std::string solution;
  std::string out;
  std::string stats;
  std::string x;
  std::string problem = "ds";
  std::string sizes = "4x4,6x6";
  std::string alpha = "7";
  std::string epsilon = "1/2";
  std::string core_mode = "exact";
  int k = 1;
  int r = 1;
  int s = 0;
  int cap = 0;
  bool connected = false;
  std::uint64_t budget_nodes = 0;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
};

/// Adds every subcommand to `app`. After parsing, `run` holds the selected one.
void register_commands(CLI::App& app, RunConfig& cfg, std::function<int()>& run);

}  // namespace lkcds::cli

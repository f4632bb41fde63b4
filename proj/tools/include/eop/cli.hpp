#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eop/dispatch.hpp"
#include "eop/graph_io.hpp"

namespace eop::cli {

struct RunConfig {
  enum class Command { None, Solve, Classify, Generate, Verify, Crosscheck };
  Command command = Command::None;

  std::string input = "-";  // graph path, '-' for the input stream
  io::GraphFormat format = io::GraphFormat::EdgeList;
  SolverClass cls = SolverClass::Auto;
  bool witness = false;
  bool verify = false;
  bool json = false;
  SearchBudget budget;

  // generate
  std::string gen_class = "pig";
  int n = 8;
  double density = 0.5;
  int blocks = 3;
  int max_block_size = 3;
  int k = 3;
  int s = 5;
  double p = 0.5;
  std::string out = "-";

  // verify
  std::string set_path;

  // crosscheck
  std::string check_class = "pig";  // pig | block | split | tree
  int count = 100;
  int max_n = 12;

  uint64_t seed = 1;
};

/// Exit codes: 0 success, 1 recognition failure, 2 input or parse error,
/// 3 internal assertion failure, 4 crosscheck mismatch.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Argument parsing plus run(); also handles --help.
int run_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace eop::cli

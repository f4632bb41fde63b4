#pragma once

#include <optional>
#include <string>

#include "eop/graph.hpp"
#include "eop/oracle.hpp"

namespace eop::cli {

enum class SolverClass { Auto, Pig, Block, Split, Brute };

struct SolveOutcome {
  std::string solver;  // "proper_interval", "block", "split" or "brute"
  EOPSolution solution;
};

/// Recognize-and-solve. Auto mode tries proper interval, then block, then
/// split, then the exhaustive solver when the instance fits its edge cap;
/// the reported value is identical whichever applicable solver runs. Block
/// graphs may be disconnected here: components are solved independently and
/// merged. Returns nullopt when the requested class (or, in auto mode, every
/// class) fails recognition.
std::optional<SolveOutcome> solve_dispatch(const Graph& g, SolverClass cls,
                                           const SearchBudget& budget = {});

}  // namespace eop::cli

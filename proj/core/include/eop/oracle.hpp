#pragma once

#include <stdexcept>

#include "eop/graph.hpp"

namespace eop {

/// Caps for the exhaustive solver. max_edges bounds the instance size up
/// front (at most 64 is supported); max_nodes bounds the explored search
/// states across both passes.
struct SearchBudget {
  int max_edges = 24;
  long long max_nodes = 50'000'000;
};

/// Raised when the node cap is hit mid-search; carries the best solution
/// found so far.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(EOPSolution partial)
      : std::runtime_error("search node budget exceeded"), partial_(std::move(partial)) {}
  const EOPSolution& partial() const { return partial_; }

 private:
  EOPSolution partial_;
};

/// Exact maximum edge open packing by branch and bound over edge
/// include/exclude decisions. The returned witness is the lexicographically
/// least optimal edge set under edge-id order. Throws std::invalid_argument
/// when |E| exceeds the edge cap, BudgetExceeded when the node cap is hit.
EOPSolution brute_force_eop(const Graph& g, const SearchBudget& budget = {});

}  // namespace eop

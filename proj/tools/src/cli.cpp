#include "eop/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eop/generators.hpp"
#include "eop/prng.hpp"
#include "eop/recognition.hpp"

namespace eop::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitRecognition = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitMismatch = 4;

Graph read_graph(const RunConfig& config, std::istream& in) {
  if (config.input == "-") return io::parse_graph(in, config.format);
  std::ifstream file(config.input);
  if (!file) throw std::invalid_argument("cannot open '" + config.input + "'");
  return io::parse_graph(file, config.format);
}

// Witness edges as endpoint pairs sorted by (u, v).
std::vector<std::pair<int, int>> witness_pairs(const Graph& g, const EdgeSet& d) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(d.ids.size());
  for (EdgeId e : d.ids) pairs.emplace_back(g.edge(e).u, g.edge(e).v);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

ordered_json witness_json(const Graph& g, const EdgeSet& d) {
  ordered_json arr = ordered_json::array();
  for (const auto& [u, v] : witness_pairs(g, d)) arr.push_back(ordered_json::array({u, v}));
  return arr;
}

bool witness_ok(const Graph& g, const EOPSolution& sol) {
  return sol.witness.size() == sol.value && is_eop_set(g, sol.witness);
}

int cmd_solve(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph(config, in);
  const auto outcome = solve_dispatch(g, config.cls, config.budget);
  if (!outcome) {
    err << "recognition failed: no applicable solver for this input\n";
    return kExitRecognition;
  }
  const bool check = config.verify || config.json;
  const bool verified = check && witness_ok(g, outcome->solution);
  if (check && !verified) {
    err << "internal check failed: witness does not verify\n";
    return kExitInternal;
  }
  if (config.json) {
    ordered_json j;
    j["class"] = outcome->solver;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["value"] = outcome->solution.value;
    j["witness"] = witness_json(g, outcome->solution.witness);
    j["verified"] = verified;
    out << j.dump() << '\n';
  } else {
    out << "class: " << outcome->solver << '\n';
    out << "value: " << outcome->solution.value << '\n';
    if (config.witness) {
      out << "witness:";
      for (const auto& [u, v] : witness_pairs(g, outcome->solution.witness))
        out << ' ' << u << '-' << v;
      out << '\n';
    }
    if (config.verify) out << "verified: true\n";
  }
  return kExitOk;
}

int cmd_classify(const RunConfig& config, std::istream& in, std::ostream& out) {
  const Graph g = read_graph(config, in);
  const ClassTags tags = classify(g);
  std::vector<std::string> names;
  if (tags.proper_interval) names.push_back("proper_interval");
  if (tags.block) names.push_back("block");
  if (tags.split) names.push_back("split");
  if (tags.chordal) names.push_back("chordal");
  if (names.empty()) names.push_back("none");
  if (config.json) {
    ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["classes"] = names;
    out << j.dump() << '\n';
  } else {
    for (size_t i = 0; i < names.size(); ++i) out << (i ? " " : "") << names[i];
    out << '\n';
  }
  return kExitOk;
}

int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Graph g;
  if (config.gen_class == "pig") {
    g = gen_proper_interval(config.n, config.density, config.seed);
  } else if (config.gen_class == "block") {
    g = gen_block(config.blocks, config.max_block_size, config.seed);
  } else if (config.gen_class == "split") {
    g = gen_split(config.k, config.s, config.p, config.seed);
  } else {
    err << "unknown generator class '" << config.gen_class << "'\n";
    return kExitInput;
  }
  if (config.out == "-") {
    io::serialize_graph(g, out, config.format);
  } else {
    std::ofstream file(config.out);
    if (!file) {
      err << "cannot open '" << config.out << "' for writing\n";
      return kExitInput;
    }
    io::serialize_graph(g, file, config.format);
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const Graph g = read_graph(config, in);
  if (config.set_path.empty()) {
    err << "verify requires --set\n";
    return kExitInput;
  }
  std::ifstream file(config.set_path);
  if (!file) {
    err << "cannot open '" << config.set_path << "'\n";
    return kExitInput;
  }
  const EdgeSet d = io::parse_edge_set(file, g);
  const auto violation = find_eop_violation(g, d);
  if (config.json) {
    ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["size"] = d.size();
    j["valid"] = !violation.has_value();
    if (violation) {
      auto pair_of = [&](EdgeId e) {
        return ordered_json::array({g.edge(e).u, g.edge(e).v});
      };
      j["violation"] = ordered_json{{"e1", pair_of(violation->e1)},
                                    {"e2", pair_of(violation->e2)},
                                    {"common", pair_of(violation->common)}};
    }
    out << j.dump() << '\n';
  } else if (violation) {
    auto show = [&](EdgeId e) {
      out << g.edge(e).u << '-' << g.edge(e).v;
    };
    out << "invalid: edges ";
    show(violation->e1);
    out << " and ";
    show(violation->e2);
    out << " share common edge ";
    show(violation->common);
    out << '\n';
  } else {
    out << "valid\n";
  }
  return kExitOk;
}

struct CrosscheckInstance {
  Graph graph;
  uint64_t seed;
};

// Deterministic instance stream; oversized draws are discarded and redrawn
// from the same stream so any (seed, index) prefix is reproducible.
CrosscheckInstance next_instance(const std::string& cls, SplitMix64& rng, int max_n,
                                 int max_edges) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Graph g;
    uint64_t gseed = 0;
    if (cls == "pig") {
      const int n = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(max_n)));
      const double density = rng.next_double();
      gseed = rng.next();
      g = gen_proper_interval(n, density, gseed);
    } else if (cls == "block") {
      const int nb = 1 + static_cast<int>(rng.next_below(6));
      const int bs = 2 + static_cast<int>(rng.next_below(3));
      gseed = rng.next();
      g = gen_block(nb, bs, gseed);
    } else if (cls == "split") {
      const int ks = static_cast<int>(rng.next_below(7));
      const int ss = static_cast<int>(rng.next_below(9));
      const double p = rng.next_double();
      gseed = rng.next();
      g = gen_split(ks, ss, p, gseed);
    } else if (cls == "tree") {
      const int cap = std::min(max_n - 1, max_edges);
      const int nb = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(std::max(1, cap))));
      gseed = rng.next();
      g = gen_block(nb, 2, gseed);
    } else {
      throw std::invalid_argument("unknown crosscheck class '" + cls + "'");
    }
    if (g.vertex_count() <= max_n && g.edge_count() <= max_edges)
      return CrosscheckInstance{std::move(g), gseed};
  }
  throw std::invalid_argument("could not sample an instance within the oracle budget");
}

int cmd_crosscheck(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const SolverClass cls = config.check_class == "pig"     ? SolverClass::Pig
                          : config.check_class == "split" ? SolverClass::Split
                                                          : SolverClass::Block;  // block and tree
  SplitMix64 rng(config.seed);
  int agree = 0;
  for (int i = 0; i < config.count; ++i) {
    const CrosscheckInstance inst =
        next_instance(config.check_class, rng, config.max_n, config.budget.max_edges);
    const Graph& g = inst.graph;
    const auto outcome = solve_dispatch(g, cls, config.budget);
    const EOPSolution oracle = brute_force_eop(g, config.budget);
    const bool ok = outcome && outcome->solution.value == oracle.value &&
                    witness_ok(g, outcome->solution);
    if (config.json) {
      ordered_json j;
      j["i"] = i;
      j["seed"] = inst.seed;
      j["n"] = g.vertex_count();
      j["m"] = g.edge_count();
      j["value"] = outcome ? outcome->solution.value : -1;
      j["oracle"] = oracle.value;
      j["witness"] = outcome ? witness_json(g, outcome->solution.witness) : ordered_json::array();
      j["ok"] = ok;
      out << j.dump() << '\n';
    }
    if (ok) {
      ++agree;
    } else {
      err << "mismatch at instance " << i << " (seed " << inst.seed << "): solver "
          << (outcome ? std::to_string(outcome->solution.value) : std::string("failed"))
          << " vs oracle " << oracle.value << '\n';
    }
  }
  if (config.json) {
    ordered_json j;
    j["agree"] = agree;
    j["total"] = config.count;
    out << j.dump() << '\n';
  } else {
    out << agree << '/' << config.count << " agree\n";
  }
  return agree == config.count ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case RunConfig::Command::Solve:
        return cmd_solve(config, in, out, err);
      case RunConfig::Command::Classify:
        return cmd_classify(config, in, out);
      case RunConfig::Command::Generate:
        return cmd_generate(config, out, err);
      case RunConfig::Command::Verify:
        return cmd_verify(config, in, out, err);
      case RunConfig::Command::Crosscheck:
        return cmd_crosscheck(config, out, err);
      case RunConfig::Command::None:
        break;
    }
    err << "no subcommand given (try --help)\n";
    return kExitInput;
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    err << "search budget exceeded (best value found: " << e.partial().value << ")\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int run_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
  RunConfig config;
  CLI::App app{"Edge open packing solver for proper interval, block, and split graphs"};
  app.require_subcommand(0, 1);

  std::string format = "edgelist";
  std::string cls = "auto";

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Graph format: edgelist or dimacs")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
  };

  CLI::App* solve = app.add_subcommand("solve", "Compute the edge open packing number");
  solve->add_option("--input,-i", config.input, "Graph file, '-' for stdin");
  add_format(solve);
  solve->add_option("--class", cls, "Solver class: auto, pig, block, split or brute")
      ->check(CLI::IsMember({"auto", "pig", "block", "split", "brute"}));
  solve->add_flag("--witness", config.witness, "Print a maximum edge open packing set");
  solve->add_flag("--verify", config.verify, "Re-check the witness before printing");
  solve->add_flag("--json", config.json, "JSON output");
  solve->add_option("--max-edges", config.budget.max_edges, "Edge cap for the exhaustive solver");

  CLI::App* classify_cmd = app.add_subcommand("classify", "Report recognized graph classes");
  classify_cmd->add_option("--input,-i", config.input, "Graph file, '-' for stdin");
  add_format(classify_cmd);
  classify_cmd->add_flag("--json", config.json, "JSON output");

  CLI::App* generate = app.add_subcommand("generate", "Write a seeded random instance");
  generate->add_option("--class", config.gen_class, "Instance class: pig, block or split")
      ->check(CLI::IsMember({"pig", "block", "split"}));
  generate->add_option("--n", config.n, "Vertex count (pig)");
  generate->add_option("--density", config.density, "Density in [0, 1] (pig)");
  generate->add_option("--blocks", config.blocks, "Block count (block)");
  generate->add_option("--max-block-size", config.max_block_size, "Largest clique size (block)");
  generate->add_option("--k", config.k, "Clique size (split)");
  generate->add_option("--s", config.s, "Independent set size (split)");
  generate->add_option("--p", config.p, "Clique/independent edge probability (split)");
  generate->add_option("--seed", config.seed, "Generator seed");
  generate->add_option("--out,-o", config.out, "Output file, '-' for stdout");
  add_format(generate);

  CLI::App* verify = app.add_subcommand("verify", "Check an edge set against a graph");
  verify->add_option("--input,-i", config.input, "Graph file, '-' for stdin");
  add_format(verify);
  verify->add_option("--set", config.set_path, "Edge set file (lines 'u v')")->required();
  verify->add_flag("--json", config.json, "JSON output");

  CLI::App* crosscheck = app.add_subcommand("crosscheck", "Compare a solver with the oracle");
  crosscheck->add_option("--class", config.check_class, "Instance class: pig, block, split or tree")
      ->check(CLI::IsMember({"pig", "block", "split", "tree"}));
  crosscheck->add_option("--count", config.count, "Number of instances");
  crosscheck->add_option("--max-n", config.max_n, "Vertex cap per instance");
  crosscheck->add_option("--seed", config.seed, "Stream seed");
  crosscheck->add_flag("--json", config.json, "Per-instance JSON records");
  crosscheck->add_option("--max-edges", config.budget.max_edges, "Edge cap for the oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream buffer;
    const int code = app.exit(e, buffer, buffer);
    (code == 0 ? out : err) << buffer.str();
    return code == 0 ? kExitOk : kExitInput;
  }

  config.format = format == "dimacs" ? io::GraphFormat::Dimacs : io::GraphFormat::EdgeList;
  config.cls = cls == "pig"     ? SolverClass::Pig
               : cls == "block" ? SolverClass::Block
               : cls == "split" ? SolverClass::Split
               : cls == "brute" ? SolverClass::Brute
                                : SolverClass::Auto;
  if (solve->parsed())
    config.command = RunConfig::Command::Solve;
  else if (classify_cmd->parsed())
    config.command = RunConfig::Command::Classify;
  else if (generate->parsed())
    config.command = RunConfig::Command::Generate;
  else if (verify->parsed())
    config.command = RunConfig::Command::Verify;
  else if (crosscheck->parsed())
    config.command = RunConfig::Command::Crosscheck;

  return run(config, in, out, err);
}

}  // namespace eop::cli

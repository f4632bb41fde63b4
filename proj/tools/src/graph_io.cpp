#include "eop/graph_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace eop::io {
namespace {

bool blank_or_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

long parse_int(const std::string& token, int line) {
  size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) throw ParseError(line, "trailing characters in '" + token + "'");
  return value;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  long n = -1, m = -1;
  std::vector<std::pair<int, int>> pairs;

  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    const auto toks = tokens_of(line);
    if (n < 0) {
      if (toks.size() != 2) throw ParseError(lineno, "expected header 'n m'");
      n = parse_int(toks[0], lineno);
      m = parse_int(toks[1], lineno);
      if (n < 0 || m < 0) throw ParseError(lineno, "header counts must be non-negative");
      continue;
    }
    if (toks.size() != 2) throw ParseError(lineno, "expected an edge 'u v'");
    const long u = parse_int(toks[0], lineno);
    const long v = parse_int(toks[1], lineno);
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "endpoint out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    if (static_cast<long>(pairs.size()) == m) throw ParseError(lineno, "more edges than announced");
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError(lineno + 1, "missing header 'n m'");
  if (static_cast<long>(pairs.size()) != m)
    throw ParseError(lineno + 1, "fewer edges than announced");
  return Graph::build(static_cast<int>(n), pairs);
}

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int lineno = 0;
  long n = -1, m = -1;
  std::vector<std::pair<int, int>> pairs;

  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    const auto toks = tokens_of(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n >= 0) throw ParseError(lineno, "duplicate problem line");
      if (toks.size() != 4 || toks[1] != "edge") throw ParseError(lineno, "expected 'p edge n m'");
      n = parse_int(toks[2], lineno);
      m = parse_int(toks[3], lineno);
      if (n < 0 || m < 0) throw ParseError(lineno, "problem counts must be non-negative");
      continue;
    }
    if (toks[0] == "e") {
      if (n < 0) throw ParseError(lineno, "edge before the problem line");
      if (toks.size() != 3) throw ParseError(lineno, "expected 'e u v'");
      const long u = parse_int(toks[1], lineno);
      const long v = parse_int(toks[2], lineno);
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "endpoint out of range");
      if (u == v) throw ParseError(lineno, "self-loop");
      if (static_cast<long>(pairs.size()) == m) throw ParseError(lineno, "more edges than announced");
      pairs.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      continue;
    }
    throw ParseError(lineno, "unrecognized line '" + toks[0] + "'");
  }
  if (n < 0) throw ParseError(lineno + 1, "missing problem line");
  if (static_cast<long>(pairs.size()) != m)
    throw ParseError(lineno + 1, "fewer edges than announced");
  return Graph::build(static_cast<int>(n), pairs);
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::EdgeList ? parse_edge_list(in) : parse_dimacs(in);
}

void serialize_graph(const Graph& g, std::ostream& out, GraphFormat format) {
  std::vector<Edge> edges = g.edges();
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  if (format == GraphFormat::EdgeList) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
  } else {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : edges) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  }
}

EdgeSet parse_edge_set(std::istream& in, const Graph& g) {
  std::string line;
  int lineno = 0;
  std::vector<EdgeId> ids;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    const auto toks = tokens_of(line);
    if (toks.size() != 2) throw ParseError(lineno, "expected an edge 'u v'");
    const long u = parse_int(toks[0], lineno);
    const long v = parse_int(toks[1], lineno);
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
      throw ParseError(lineno, "endpoint out of range");
    const auto id = g.edge_id(static_cast<VertexId>(u), static_cast<VertexId>(v));
    if (!id) throw ParseError(lineno, "not an edge of the graph");
    ids.push_back(*id);
  }
  return EdgeSet::of(std::move(ids));
}

}  // namespace eop::io

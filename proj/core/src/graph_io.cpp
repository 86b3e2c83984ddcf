#include "domset/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace domset {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

bool ignorable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Reads the next meaningful line; returns false at EOF.
bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!ignorable(line)) return true;
  }
  return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;

  if (!next_line(in, line, lineno)) fail(lineno + 1, "missing header line \"n m\"");

  long long n = -1, m = -1;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n >> m) || (ss >> extra)) fail(lineno, "expected header \"n m\"");
  }
  if (n < 0 || m < 0) fail(lineno, "n and m must be non-negative");
  if (m > n * (n - 1) / 2) fail(lineno, "m exceeds the number of vertex pairs");

  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line, lineno))
      fail(lineno + 1, "expected " + std::to_string(m - i) + " more edge line(s)");
    long long u = -1, v = -1;
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra)) fail(lineno, "expected edge line \"u v\"");
    if (u < 0 || v >= n) fail(lineno, "vertex index out of range");
    if (u >= v) fail(lineno, "edges must satisfy u < v");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) fail(lineno, "duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line(in, line, lineno)) fail(lineno, "unexpected content after the last edge");
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_graph(out, g);
  out.flush();
  if (!out) throw std::runtime_error("failed writing graph file: " + path);
}

}  // namespace domset

#ifndef DOMSET_GRAPH_IO_HPP
#define DOMSET_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "domset/graph.hpp"

namespace domset {

// Text format: first line "n m", then m lines "u v" with 0 <= u < v < n.
// Blank lines and lines whose first non-space character is '#' are ignored.
// Parse errors throw std::runtime_error naming the 1-based line number.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

// Writes edges sorted lexicographically.
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace domset

#endif

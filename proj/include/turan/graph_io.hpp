#pragma once

#include "turan/hypergraph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace turan {

// Text graph format:
//   # comment
//   n <count>
//   a b c          one edge per line, 0-based vertex ids
// Several graphs may share a stream, each block preceded by `graph <index>`.

Hypergraph3 read_graph(std::istream& in);
Hypergraph3 read_graph_file(const std::string& path);
std::vector<Hypergraph3> read_graphs(std::istream& in);

void write_graph(std::ostream& out, const Hypergraph3& graph);
void write_graphs(std::ostream& out, const std::vector<Hypergraph3>& graphs);

}  // namespace turan

#include "turan/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace turan {

namespace {

struct Block {
  int n = -1;
  std::vector<Triple> edges;
};

std::vector<Block> parse_blocks(std::istream& in) {
  std::vector<Block> blocks;
  bool explicit_blocks = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    auto fail = [&](const std::string& what) {
      throw std::runtime_error("graph text line " + std::to_string(line_no) + ": " + what);
    };
    if (head == "graph") {
      explicit_blocks = true;
      blocks.emplace_back();
      continue;
    }
    if (head == "n") {
      if (blocks.empty() || (!explicit_blocks && blocks.back().n >= 0)) blocks.emplace_back();
      if (blocks.back().n >= 0) fail("repeated vertex count");
      int n = 0;
      if (!(fields >> n) || n < 0) fail("bad vertex count");
      blocks.back().n = n;
      continue;
    }
    if (blocks.empty() || blocks.back().n < 0) fail("edge before `n <count>`");
    Triple t{};
    std::istringstream edge(line);
    std::string extra;
    if (!(edge >> t[0] >> t[1] >> t[2]) || (edge >> extra)) fail("expected three vertex ids");
    blocks.back().edges.push_back(t);
  }
  for (const auto& b : blocks)
    if (b.n < 0) throw std::runtime_error("graph block without `n <count>`");
  return blocks;
}

}  // namespace

std::vector<Hypergraph3> read_graphs(std::istream& in) {
  std::vector<Hypergraph3> graphs;
  for (const auto& b : parse_blocks(in)) graphs.push_back(Hypergraph3::from_edges(b.n, b.edges));
  return graphs;
}

Hypergraph3 read_graph(std::istream& in) {
  auto graphs = read_graphs(in);
  if (graphs.size() != 1) throw std::runtime_error("expected exactly one graph, found " + std::to_string(graphs.size()));
  return graphs.front();
}

Hypergraph3 read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Hypergraph3& graph) {
  out << "n " << graph.order() << '\n';
  for (const auto& e : graph.edges()) out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
}

void write_graphs(std::ostream& out, const std::vector<Hypergraph3>& graphs) {
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    out << "graph " << i << '\n';
    write_graph(out, graphs[i]);
  }
}

}  // namespace turan

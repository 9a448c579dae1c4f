#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace turan {

using Vertex = int;

/// Sorted vertex triple a < b < c.
using Triple = std::array<Vertex, 3>;

Triple make_triple(Vertex a, Vertex b, Vertex c);

/// Colex rank of a sorted triple: C(c,3) + C(b,2) + a.
std::uint64_t triple_rank(const Triple& t);

/// C(n,3) as a 64-bit count.
std::uint64_t triple_count(std::uint64_t n);

namespace detail {
struct KeyCache;
}

/// A 3-uniform hypergraph on vertices 0..n-1. Immutable after construction.
class Hypergraph3 {
 public:
  Hypergraph3();
  explicit Hypergraph3(int n);

  /// Rejects out-of-range vertices and triples with a repeated vertex;
  /// duplicate triples collapse. Throws std::invalid_argument.
  static Hypergraph3 from_edges(int n, std::span<const Triple> triples);
  static Hypergraph3 from_edges(int n, std::initializer_list<Triple> triples);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Triple>& edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b, Vertex c) const;
  bool has_edge(const Triple& t) const { return has_edge(t[0], t[1], t[2]); }

  std::vector<int> degrees() const;

  /// Graph induced on the listed vertices; vertex vertices[i] becomes i.
  Hypergraph3 induced(std::span<const Vertex> vertices) const;

  /// Image under a vertex permutation: v becomes perm[v].
  Hypergraph3 relabel(std::span<const Vertex> perm) const;

  /// Byte string identical for isomorphic graphs and distinct otherwise.
  /// Computed on first use; safe to call concurrently.
  const std::string& canon_key() const;

  friend bool operator==(const Hypergraph3& a, const Hypergraph3& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Triple> edges_;
  // Dense membership bitset indexed by triple_rank; empty for large n.
  std::vector<std::uint64_t> bits_;
  std::shared_ptr<detail::KeyCache> key_;

  void finalize();
};

/// Result of canonical labeling. labeling[v] is the canonical label of v.
struct CanonicalForm {
  Hypergraph3 graph;
  std::vector<Vertex> labeling;
  std::string key;
};

/// Canonical relabeling; isomorphic inputs give identical graphs and keys.
CanonicalForm canonical_form(const Hypergraph3& graph);

/// Canonical form of a rooted graph: roots[i] is sent to label i and only
/// the remaining vertices are permuted. Keys of rooted graphs never collide
/// with keys of graphs with a different root count.
CanonicalForm canonical_form_rooted(const Hypergraph3& graph, std::span<const Vertex> roots);

/// Rebuilds the canonical graph encoded in a canonical key (any root count).
Hypergraph3 graph_from_key(std::string_view key);

std::string to_hex(std::string_view bytes);
std::string from_hex(std::string_view hex);

Hypergraph3 complement(const Hypergraph3& graph);

/// Vertex v becomes a class of sizes[v] vertices; a triple is an edge iff it
/// meets three distinct classes whose originals span an edge.
Hypergraph3 blow_up(const Hypergraph3& graph, std::span<const int> sizes);

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  int gap = 0;
};

DegreeStats degree_stats(const Hypergraph3& graph);

/// Non-induced containment: some injection V(pattern) -> V(host) maps every
/// edge of pattern onto an edge of host.
bool contains_sub(const Hypergraph3& host, const Hypergraph3& pattern);

/// Induced containment: some |V(pattern)|-subset of host spans a copy.
bool contains_induced(const Hypergraph3& host, const Hypergraph3& pattern);

enum class NamedGraph { C4_3, K4_3, F5, F5_BAR, F32, F32_BAR, C5_3, C5_3_MINUS };

Hypergraph3 named_graph(NamedGraph which);
std::string_view name_of(NamedGraph which);
/// Throws std::invalid_argument for unknown identifiers.
NamedGraph parse_named_graph(std::string_view name);
const std::vector<NamedGraph>& all_named_graphs();

/// Single edge on three vertices.
Hypergraph3 single_edge();

}  // namespace turan

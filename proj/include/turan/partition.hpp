#pragma once

#include "turan/hypergraph.hpp"
#include "turan/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace turan {

/// Bad and missing sets of a bipartition (V1, V2). A triple is a cross
/// triple when exactly two of its vertices lie in V1.
///   bad:     edges meeting V1 in one or three vertices
///   missing: cross triples that are not edges
struct PartitionStats {
  std::vector<Vertex> v1, v2;
  std::vector<Triple> bad;
  std::vector<Triple> missing;
  std::int64_t cross_present = 0;  // edges meeting V1 in exactly two vertices
  std::int64_t inner2 = 0;         // edges inside V2
};

/// Throws std::invalid_argument unless v1 and v2 are disjoint, in range and
/// cover every vertex.
PartitionStats bad_missing(const Hypergraph3& graph, std::span<const Vertex> v1, std::span<const Vertex> v2);

/// Membership vector: in_v1[v] is true iff v lies in V1.
std::vector<bool> side_vector(int n, std::span<const Vertex> v1, std::span<const Vertex> v2);

/// Number of edges meeting V1 in exactly two vertices.
std::int64_t cross_count(const Hypergraph3& graph, const std::vector<bool>& in_v1);

struct MaxCut {
  std::vector<Vertex> v1, v2;
  std::int64_t cross = 0;
  Rational mu;  // 6 cross / n^3
};

/// Best locally maximal partition found by steepest single-vertex moves from
/// `restarts` random starts; restart r is seeded with seed + r. mu is a
/// certified lower bound on the max-cut ratio. Requires n >= 3.
MaxCut maxcut_local_search(const Hypergraph3& graph, int restarts = 32, std::uint64_t seed = 0);

/// Exact maximum over all 2^n bipartitions; n <= 24.
MaxCut exhaustive_maxcut(const Hypergraph3& graph);

/// True iff no single-vertex move increases the cross count.
bool is_locally_maximal(const Hypergraph3& graph, std::span<const Vertex> v1, std::span<const Vertex> v2);

struct LemmaGap {
  Integer lhs;   // |H|
  Rational rhs;  // C(|V1|,2)|V2| + |H[V2]| + xi n^3 - max(|B|/3999, |M|/4000)
  bool holds = false;
};

LemmaGap lemma22_gap(const Hypergraph3& graph, std::span<const Vertex> v1, std::span<const Vertex> v2,
                     const Rational& xi);

/// |B| - (3999/4000)|M|.
Rational prop33_expr(const Hypergraph3& graph, std::span<const Vertex> v1, std::span<const Vertex> v2);

/// Vertices of degree at most (pi/2 - 4 sqrt(delta)) n^2. The threshold is
/// evaluated with 60-digit arithmetic and rounded down to an integer.
/// Throws std::invalid_argument when delta <= 0.
std::vector<Vertex> low_degree_set(const Hypergraph3& graph, const Rational& delta, const HighPrecision& pi_value);

struct DegreeGap {
  int gap = 0;
  int bound = 0;  // n - 2
  bool within = false;
};

DegreeGap degree_gap_check(const Hypergraph3& graph);

}  // namespace turan

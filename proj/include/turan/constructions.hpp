#pragma once

#include "turan/hypergraph.hpp"
#include "turan/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace turan {

/// Recursive semi-bipartite construction: at each level the first splits[i]
/// of the remaining vertices form V1, all triples with exactly two vertices
/// in V1 are added, and the recursion continues on V2. After the last split
/// at most two vertices may remain.
struct BRecSpec {
  int n = 0;
  std::vector<int> splits;
};

struct Partite3Spec {
  std::array<int, 3> sizes{};
};

struct K4BlowupSpec {
  std::array<int, 4> sizes{};
};

/// Complete semi-bipartite graph B[V1, V2], |V1| = n1, |V2| = n2.
struct SemiBipartiteSpec {
  int n1 = 0;
  int n2 = 0;
};

using ConstructionSpec = std::variant<BRecSpec, Partite3Spec, K4BlowupSpec, SemiBipartiteSpec>;

int vertex_count(const ConstructionSpec& spec);

/// Throws std::invalid_argument for an invalid split or non-positive part.
Hypergraph3 build(const ConstructionSpec& spec);

/// Closed-form edge count, equal to build(spec).size() without building.
Integer edge_count(const ConstructionSpec& spec);

struct BRecOptimum {
  std::int64_t value = 0;
  std::vector<int> splits;  // optimal first-part sizes, level by level
};

/// Maximum edge count over n-vertex B_rec constructions via the recursion
/// b(n) = max { C(n1,2) n2 + b(n2) : n1 + n2 = n, n1 >= 1 }, b(0..2) = 0.
/// Ties go to the larger n1.
BRecOptimum b_rec(int n);

/// b_rec values for 0..n.
std::vector<std::int64_t> b_rec_table(int n);

struct DensityReport {
  Integer edges;
  Rational density;                   // edges / C(n,3)
  std::optional<Rational> limit;      // exact limit when rational
  std::string limit_decimal;          // 50 significant digits, "NA" if undefined
};

/// Limit: 6|E|/n^3 for the blow-up kinds (a homogeneous cubic in the part
/// sizes), 2*sqrt(3)-3 for a B_rec with optimal splits, undefined otherwise.
DensityReport density_report(const ConstructionSpec& spec);

/// Center of the squared term in the second simplex inequality.
enum class QuadraticCenter {
  AsPrinted,  // (3 - sqrt 3) / 12
  Optimizer,  // (3 - sqrt 3) / 2, the optimal first-part ratio
};

/// Evaluation of the two simplex inequalities
///   (1)  x1^2 x2 / (2 (1 - x2^3))                    <= (2 sqrt3 - 3)/6
///   (2)  x1^2 x2 / 2 + ((2 sqrt3 - 3)/6) x2^3        <= (2 sqrt3 - 3)/6 - (x1 - center)^2 / 4
/// with 60-digit arithmetic. Part (2) applies only for x1 in [1/2, 1].
struct SimplexCheck {
  HighPrecision lhs1, bound1;
  HighPrecision lhs2, bound2;
  bool holds1 = false;
  bool part2_applies = false;
  bool holds2 = false;
  bool ok() const { return holds1 && (!part2_applies || holds2); }
};

/// Throws std::invalid_argument unless x1, x2 >= 0, x1 + x2 = 1 and x2 < 1.
SimplexCheck fact21_check(const HighPrecision& x1, const HighPrecision& x2,
                          QuadraticCenter center = QuadraticCenter::AsPrinted);

/// Margin below which an inequality counts as violated.
HighPrecision simplex_margin();

struct SimplexGrid {
  HighPrecision max_lhs1;
  HighPrecision argmax_x1;
  std::size_t points = 0;
  std::size_t violations1 = 0;
  std::size_t violations2 = 0;
  std::size_t part2_points = 0;
};

/// Scans x1 = 0, step, 2 step, ..., 1 (x2 = 1 - x1, skipping x2 = 1).
SimplexGrid fact21_grid(const Rational& step, QuadraticCenter center = QuadraticCenter::AsPrinted);

}  // namespace turan

#pragma once

#include "turan/density.hpp"
#include "turan/enumerate.hpp"
#include "turan/family.hpp"
#include "turan/rational.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace turan {

struct Certificate;

/// One sum-of-squares block: a type and the size of its flags.
struct TypeSpec {
  FlagType type;
  int flag_size = 0;
};

/// Types used when none are given: every admissible graph sigma on s < m
/// vertices with s = m (mod 2), with flags of size (m + s) / 2.
std::vector<TypeSpec> default_types(int m, const Family& family);

/// Flag-algebra SDP bounding the edge density of family-free graphs.
///
/// For each admissible graph G on m vertices (constraint index = position in
/// `graphs`):
///     u - sum_sigma <Q_sigma, P_sigma(G)> - c_G = obj(G),
/// with every Q_sigma PSD, every c_G >= 0, minimizing u.
struct SdpModel {
  int m = 0;
  std::string family_key;
  std::vector<Hypergraph3> graphs;
  std::vector<Rational> objective;       // obj(G) = p(single edge, G)
  std::vector<PairDensityTable> blocks;  // one per type

  std::size_t constraint_count() const { return graphs.size(); }

  friend bool operator==(const SdpModel&, const SdpModel&) = default;
};

/// Throws DomainError when the family excludes every graph on m vertices and
/// std::invalid_argument when a type's flags do not fit twice into m vertices.
SdpModel assemble(int m, const Family& family, std::span<const TypeSpec> types);

/// Optimum of the model with every block removed: max_G obj(G).
Rational lp_bound(const SdpModel& model);

enum class NumberStyle {
  Exact,    // p/q, re-parses bit-exactly
  Decimal,  // 20 significant digits, for solvers that cannot read fractions
};

// Sparse SDP text format (SDPA dual form, Y = diag(Q_1..Q_k, diag(c), u)):
//   * <metadata lines>            family, m, graph/type/flag keys
//   <constraints>                 number of linear constraints
//   <blocks>                      number of blocks
//   <d_1> ... <d_blocks>          negative = diagonal block
//   <b_1> ... <b_constraints>     right-hand sides obj(G)
//   <con> <blk> <i> <j> <value>   con 0: objective matrix; upper triangle only
// Constraint k reads <A_k, Y> = b_k with A_k = diag(-P(G_k), -e_k, 1); the
// objective matrix is -1 on the u block (maximize -u).
void emit(const SdpModel& model, std::ostream& out, NumberStyle style = NumberStyle::Exact);
void emit_file(const SdpModel& model, const std::string& path, NumberStyle style = NumberStyle::Exact);
SdpModel parse_model(std::istream& in);
SdpModel parse_model_file(const std::string& path);

/// Best rational approximation with denominator <= max_denominator
/// (continued fractions with semiconvergents).
Rational round_value(double value, const Integer& max_denominator);

/// Reads whitespace-separated floats. Layout, in declared block order: for a
/// PSD block of dimension d its upper triangle row by row (d(d+1)/2 values);
/// for a diagonal block its d diagonal values.
std::vector<double> read_solution(std::istream& in);

/// Rounds a floating solution of the model to a certificate candidate:
/// entries become best rationals, Q blocks are built symmetric from the upper
/// triangle, negative c_G are clamped to 0 and capped at the exact slack, and
/// u is raised to the exact minimum the rounded blocks allow if needed.
Certificate round_solution(const SdpModel& model, std::span<const double> solution, const Integer& max_denominator);

}  // namespace turan

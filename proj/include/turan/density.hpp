#pragma once

#include "turan/enumerate.hpp"
#include "turan/family.hpp"
#include "turan/hypergraph.hpp"
#include "turan/rational.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace turan {

/// p(F, H): the fraction of |V(F)|-subsets of V(H) inducing a copy of F.
Rational induced_density(const Hypergraph3& pattern, const Hypergraph3& host);

/// Number of k-subsets of V(host) inducing each isomorphism class, keyed by
/// canonical key.
std::map<std::string, Integer> induced_counts(const Hypergraph3& host, int k);

/// |H| / C(n,3). Throws std::invalid_argument for n < 3.
Rational edge_density(const Hypergraph3& graph);

/// Flag pair densities of one type against a list of target graphs.
///
/// Entry (i, j) of matrices[t] is the probability that a uniformly random
/// injective map of the type's roots into targets[t], together with two
/// disjoint uniformly random (flag_size - type size)-sets of the remaining
/// vertices, induces flags[i] on roots + first set and flags[j] on roots +
/// second set (a root map that does not induce the type contributes zero).
/// With this normalization the chain rule over intermediate graphs holds
/// exactly at every finite size, so sum_t matrices[t] * p(targets[t], H) is
/// the same probability computed directly in H.
struct PairDensityTable {
  FlagType type;
  int flag_size = 0;
  int target_size = 0;
  std::string family_key;
  std::vector<Flag> flags;
  std::vector<Hypergraph3> targets;
  std::vector<RationalMatrix> matrices;

  friend bool operator==(const PairDensityTable&, const PairDensityTable&) = default;
};

/// Pair density matrix of one type/flag list in an arbitrary graph with at
/// least 2*flag_size - type size vertices. Flags absent from the list are
/// ignored.
RationalMatrix pair_density_matrix(const FlagType& type, int flag_size, const std::vector<Flag>& flags,
                                   const Hypergraph3& target);

/// Table over all family-free targets on target_size vertices. Results are
/// cached in memory, and on disk when a cache directory is configured.
/// Throws std::invalid_argument when 2*flag_size - type size > target_size.
PairDensityTable pair_density_table(const FlagType& type, int flag_size, int target_size, const Family& family);

/// Directory for on-disk table caching; empty disables it.
void set_table_cache_dir(std::string dir);

// Text form: header lines (`type`, `flag_size`, `target_size`, `family`,
// `flag <i> <hex key>`, `target <i> <hex key>`) then sparse upper-triangle
// entries `<F_index> <i> <j> <p/q>`.
void write_table(std::ostream& out, const PairDensityTable& table);
PairDensityTable read_table(std::istream& in);

}  // namespace turan

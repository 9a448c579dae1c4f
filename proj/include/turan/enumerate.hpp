#pragma once

#include "turan/family.hpp"
#include "turan/hypergraph.hpp"

#include <string>
#include <vector>

namespace turan {

/// A fully labeled graph; its vertices are the roots 0..size-1 in order.
struct FlagType {
  Hypergraph3 sigma;

  int size() const { return sigma.order(); }
  /// Labeled identity of the type (root order matters).
  std::string key() const;

  friend bool operator==(const FlagType& a, const FlagType& b) { return a.sigma == b.sigma; }
};

/// A graph with roots 0..type.size()-1 whose induced labeled subgraph is the
/// type. Stored in rooted canonical form.
struct Flag {
  Hypergraph3 graph;
  FlagType type;
  std::string key;  // rooted canonical key

  friend bool operator==(const Flag& a, const Flag& b) { return a.key == b.key && a.type == b.type; }
};

struct EnumerateOptions {
  // Orders above 7 are refused unless explicitly allowed.
  bool allow_large = false;
};

/// All family-free graphs on m vertices up to isomorphism, in canonical
/// form, sorted by canonical key.
std::vector<Hypergraph3> enumerate_free(int m, const Family& family, EnumerateOptions options = {});

/// All flags of the given type on m_prime vertices whose underlying graph is
/// family-free, up to root-preserving isomorphism, sorted by key. Throws
/// DomainError when the type itself is not family-free.
std::vector<Flag> enumerate_flags(const FlagType& type, int m_prime, const Family& family);

/// Rooted canonical key of graph with the given roots, i.e. the key of the
/// flag it represents.
std::string flag_key(const Hypergraph3& graph, std::span<const Vertex> roots);

}  // namespace turan

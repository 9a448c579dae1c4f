#pragma once

#include "turan/hypergraph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace turan {

struct FamilyMember {
  Hypergraph3 graph;
  bool induced = false;
};

/// A forbidden family; members may be forbidden as (non-induced) subgraphs or
/// as induced subgraphs.
class Family {
 public:
  Family() = default;
  explicit Family(std::vector<FamilyMember> members);

  /// Comma-separated members: built-in names, `#<hex canon key>`, or paths to
  /// graph files; an `induced:` prefix marks induced members. The empty
  /// string and `none` denote the empty family.
  static Family parse(std::string_view spec);

  const std::vector<FamilyMember>& members() const { return members_; }
  bool empty() const { return members_.empty(); }

  /// Order-independent identifier, parseable by Family::parse. Members
  /// isomorphic to a built-in graph are written by name.
  std::string key() const;

  /// Largest member order, 0 for the empty family.
  int max_order() const;

 private:
  std::vector<FamilyMember> members_;
};

/// True iff no member is contained in host under its own induced flag.
bool is_family_free(const Hypergraph3& host, const Family& family);
bool is_family_free(const Hypergraph3& host, std::span<const Hypergraph3> family,
                    std::span<const bool> induced_flags);

/// True iff host contains none of the non-induced members with order <= max_order.
bool is_free_of_subgraphs(const Hypergraph3& host, const Family& family, int max_order);

/// Matches the edge pattern of one k-set against a single member, k being the
/// member order. Patterns are bitmasks over the colex ranks of the triples of
/// the set in sorted vertex order. Members on more than 7 vertices are not
/// supported (std::invalid_argument).
class PatternMatcher {
 public:
  explicit PatternMatcher(const FamilyMember& member);

  int order() const { return k_; }
  bool induced() const { return induced_; }
  /// Induced members need an exact copy, others a copy inside the pattern.
  bool matches(std::uint64_t mask) const;

 private:
  int k_ = 0;
  bool induced_ = false;
  std::vector<std::uint64_t> copies_;  // every labeled copy, sorted
  std::vector<bool> hit_;              // per-mask answer when 2^T is small
};

struct ScanReport {
  bool free = true;
  std::uint64_t subsets_scanned = 0;
  // First offending member and vertex subset when !free.
  int member = -1;
  std::vector<Vertex> witness;
};

/// Exhaustive scan over every |V(F)|-subset of the host, comparing the
/// induced edge pattern against all labeled copies of each member F.
/// Members on more than 7 vertices are not supported (std::invalid_argument).
ScanReport subset_scan(const Hypergraph3& host, const Family& family);

}  // namespace turan

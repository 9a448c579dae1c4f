#include "oracles.hpp"

#include "turan/enumerate.hpp"
#include "turan/error.hpp"
#include "turan/family.hpp"

#include <doctest.h>

#include <set>

using namespace turan;

namespace {

std::vector<oracle::Member> members_of(const Family& family) {
  std::vector<oracle::Member> out;
  for (const auto& m : family.members()) out.push_back({oracle::from_library(m.graph), m.induced});
  return out;
}

// Every oracle class is hit by exactly one enumerated graph and vice versa.
void check_against_oracle(int m, const std::string& spec) {
  CAPTURE(m);
  CAPTURE(spec);
  const auto family = Family::parse(spec);
  const auto listed = enumerate_free(m, family);
  const auto classes = oracle::classify(m, members_of(family));
  REQUIRE(listed.size() == classes.size());
  std::vector<int> hits(classes.size(), 0);
  for (const auto& g : listed) {
    const auto og = oracle::from_library(g);
    REQUIRE(oracle::family_free(og, members_of(family)));
    int matched = 0;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (oracle::isomorphic(og, classes[c])) {
        ++hits[c];
        ++matched;
      }
    REQUIRE(matched == 1);
  }
  for (int h : hits) REQUIRE(h == 1);
}

}  // namespace

TEST_CASE("enumerate_free matches the labeled classification oracle") {
  for (int m = 0; m <= 5; ++m)
    for (const char* spec : {"none", "C4_3", "C4_3,F5_BAR", "F32,C5_3_MINUS"}) check_against_oracle(m, spec);
  check_against_oracle(5, "F32,induced:F32_BAR");
  check_against_oracle(5, "induced:C5_3_MINUS");
  // A member with an isolated vertex can appear without touching new edges.
  const auto padded = Hypergraph3::from_edges(5, {{0, 1, 2}, {1, 2, 3}});
  check_against_oracle(5, "#" + to_hex(padded.canon_key()));
  check_against_oracle(5, "C4_3,#" + to_hex(padded.canon_key()));
}

TEST_CASE("enumerate_free known class counts") {
  CHECK(enumerate_free(4, Family{}).size() == 5);
  CHECK(enumerate_free(5, Family{}).size() == 34);
  CHECK(enumerate_free(6, Family{}).size() == 2136);
  CHECK(enumerate_free(4, Family::parse("C4_3")).size() == 4);
}

TEST_CASE("enumerate_free output is sorted, unique and canonical") {
  const auto list = enumerate_free(6, Family::parse("C4_3,F5_BAR"));
  std::set<std::string> keys;
  for (std::size_t i = 0; i < list.size(); ++i) {
    keys.insert(list[i].canon_key());
    CHECK(canonical_form(list[i]).graph == list[i]);
    if (i) CHECK(list[i - 1].canon_key() < list[i].canon_key());
    CHECK(is_family_free(list[i], Family::parse("C4_3,F5_BAR")));
  }
  CHECK(keys.size() == list.size());
}

TEST_CASE("enumerate_free is monotone in the family") {
  for (int m = 4; m <= 6; ++m) {
    const auto a = enumerate_free(m, Family::parse("C4_3"));
    const auto b = enumerate_free(m, Family::parse("C4_3,F5_BAR"));
    CHECK(b.size() <= a.size());
    std::set<std::string> ka;
    for (const auto& g : a) ka.insert(g.canon_key());
    for (const auto& g : b) CHECK(ka.count(g.canon_key()) == 1);
  }
}

TEST_CASE("enumerate_free m = 6 spot family against an oracle scan") {
  // Oracle for m = 6: each listed graph is free, pairwise non-isomorphic, and
  // every free graph obtained by adding a vertex to a free 5-vertex graph is
  // isomorphic to a listed graph.
  const auto family = Family::parse("C4_3,F5_BAR");
  const auto six = enumerate_free(6, family);
  std::set<std::string> keys;
  for (const auto& g : six) keys.insert(g.canon_key());
  for (const auto& g5 : enumerate_free(5, family)) {
    const auto base = oracle::from_library(g5);
    std::vector<std::array<int, 3>> new_triples;
    for (const auto& t : oracle::all_triples(6))
      if (t[2] == 5) new_triples.push_back(t);
    for (std::uint32_t mask = 0; mask < (1u << new_triples.size()); ++mask) {
      auto g = base;
      g.n = 6;
      for (std::size_t i = 0; i < new_triples.size(); ++i)
        if ((mask >> i) & 1u) g.edges.insert(new_triples[i]);
      const auto lib = oracle::to_library(g);
      if (is_family_free(lib, family)) REQUIRE(keys.count(lib.canon_key()) == 1);
    }
  }
}

TEST_CASE("enumerate_free refuses large orders unless allowed") {
  CHECK_THROWS_AS(enumerate_free(8, Family{}), std::invalid_argument);
  // Forbidding a single edge leaves only the empty graph.
  const auto no_edges = Family::parse("#" + to_hex(single_edge().canon_key()));
  const auto eight = enumerate_free(8, no_edges, {.allow_large = true});
  REQUIRE(eight.size() == 1);
  CHECK(eight[0] == Hypergraph3(8));
}

TEST_CASE("enumerate_flags matches the rooted oracle") {
  struct Case {
    Hypergraph3 type;
    int m_prime;
    std::string family;
  };
  const std::vector<Case> cases{
      {Hypergraph3(1), 2, "none"},
      {Hypergraph3(1), 3, "none"},
      {Hypergraph3(1), 3, "C4_3,F5_BAR"},
      {single_edge(), 4, "none"},
      {Hypergraph3(3), 4, "C4_3"},
      {Hypergraph3(2), 4, "none"},
      {Hypergraph3(2), 3, "C4_3"},
      {Hypergraph3::from_edges(4, {{0, 1, 2}, {0, 1, 3}}), 5, "C4_3,F5_BAR"},
      {Hypergraph3(0), 3, "none"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.m_prime);
    CAPTURE(c.family);
    const auto family = Family::parse(c.family);
    const FlagType type{c.type};
    const auto flags = enumerate_flags(type, c.m_prime, family);
    const auto classes = oracle::classify_flags(oracle::from_library(c.type), c.m_prime, members_of(family));
    REQUIRE(flags.size() == classes.size());
    for (const auto& f : flags) {
      CHECK(f.type == type);
      std::vector<int> roots(static_cast<std::size_t>(type.size()));
      for (int i = 0; i < type.size(); ++i) roots[i] = i;
      CHECK(f.graph.induced(roots) == type.sigma);
      int matched = 0;
      for (const auto& cls : classes) matched += oracle::rooted_isomorphic(oracle::from_library(f.graph), cls, type.size());
      REQUIRE(matched == 1);
    }
  }
  CHECK(enumerate_flags(FlagType{Hypergraph3(1)}, 2, Family{}).size() == 1);
}

TEST_CASE("enumerate_flags rejects a forbidden type") {
  CHECK_THROWS_AS(enumerate_flags(FlagType{named_graph(NamedGraph::C4_3)}, 5, Family::parse("C4_3")), DomainError);
}

TEST_CASE("flag keys depend on root order") {
  const auto g = Hypergraph3::from_edges(4, {{0, 1, 2}});
  std::vector<int> a{0, 3}, b{3, 0};
  CHECK(flag_key(g, a) != flag_key(g, b));
  std::vector<int> c{1, 3};
  CHECK(flag_key(g, a) == flag_key(g, c));
}

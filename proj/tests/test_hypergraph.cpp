#include "oracles.hpp"

#include "turan/family.hpp"
#include "turan/graph_io.hpp"
#include "turan/hypergraph.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

using namespace turan;

namespace {

// Built-ins written out from their definitions, 0-based.
oracle::Graph literal(int n, std::initializer_list<std::array<int, 3>> edges) {
  oracle::Graph g;
  g.n = n;
  for (auto e : edges) g.edges.insert(e);
  return g;
}

oracle::Graph literal_complement(const oracle::Graph& g) {
  oracle::Graph h;
  h.n = g.n;
  for (const auto& t : oracle::all_triples(g.n))
    if (!g.edges.count(t)) h.edges.insert(t);
  return h;
}

}  // namespace

TEST_CASE("from_edges validates and deduplicates") {
  auto c4 = Hypergraph3::from_edges(4, {{0, 1, 2}, {1, 2, 3}, {2, 3, 0}, {3, 0, 1}});
  CHECK(c4.size() == 4);
  CHECK(c4 == named_graph(NamedGraph::C4_3));

  auto empty = Hypergraph3::from_edges(3, {});
  CHECK(empty.order() == 3);
  CHECK(empty.size() == 0);

  CHECK(Hypergraph3::from_edges(5, {{0, 1, 2}, {0, 1, 2}}).size() == 1);
  CHECK(Hypergraph3::from_edges(5, {{2, 1, 0}, {0, 1, 2}}).size() == 1);

  CHECK_THROWS_AS(Hypergraph3::from_edges(3, {{0, 1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph3::from_edges(4, {{0, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph3::from_edges(4, {{-1, 1, 2}}), std::invalid_argument);

  CHECK(Hypergraph3(0).order() == 0);
  CHECK(Hypergraph3(2).size() == 0);
}

TEST_CASE("named graphs match their definitions") {
  const auto f5 = literal(5, {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}});
  const auto f32 = literal(5, {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}, {2, 3, 4}});
  const auto c5 = literal(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}});
  const auto k4 = literal(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});

  CHECK(oracle::from_library(named_graph(NamedGraph::F5)) == f5);
  CHECK(oracle::from_library(named_graph(NamedGraph::F32)) == f32);
  CHECK(oracle::from_library(named_graph(NamedGraph::C5_3)) == c5);
  CHECK(oracle::from_library(named_graph(NamedGraph::C4_3)) == k4);
  CHECK(oracle::from_library(named_graph(NamedGraph::K4_3)) == k4);
  CHECK(oracle::from_library(named_graph(NamedGraph::F5_BAR)) == literal_complement(f5));
  CHECK(oracle::from_library(named_graph(NamedGraph::F32_BAR)) == literal_complement(f32));

  const auto minus = oracle::from_library(named_graph(NamedGraph::C5_3_MINUS));
  CHECK(minus.edges.size() == 4);
  CHECK(std::includes(c5.edges.begin(), c5.edges.end(), minus.edges.begin(), minus.edges.end()));

  for (auto g : all_named_graphs()) CHECK(parse_named_graph(name_of(g)) == g);
  CHECK_THROWS_AS(parse_named_graph("K5_3"), std::invalid_argument);
}

TEST_CASE("canonical keys agree with the isomorphism oracle on all graphs up to 5 vertices") {
  for (int n = 0; n <= 4; ++n) {
    const int t = static_cast<int>(oracle::all_triples(n).size());
    std::vector<oracle::Graph> graphs;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) graphs.push_back(oracle::from_mask(n, mask));
    for (const auto& a : graphs)
      for (const auto& b : graphs) {
        const bool same_key = oracle::to_library(a).canon_key() == oracle::to_library(b).canon_key();
        REQUIRE(same_key == oracle::isomorphic(a, b));
      }
  }
  // n = 5: every labeled graph against a fixed sample of 60 graphs.
  std::vector<oracle::Graph> all5;
  for (std::uint64_t mask = 0; mask < 1024; ++mask) all5.push_back(oracle::from_mask(5, mask));
  std::vector<std::string> keys;
  for (const auto& g : all5) keys.push_back(oracle::to_library(g).canon_key());
  for (std::size_t i = 0; i < all5.size(); i += 17)
    for (std::size_t j = 0; j < all5.size(); ++j) REQUIRE((keys[i] == keys[j]) == oracle::isomorphic(all5[i], all5[j]));
}

TEST_CASE("canonical keys separate classes on 6 vertices") {
  std::mt19937_64 rng(11);
  std::vector<oracle::Graph> graphs;
  for (int i = 0; i < 40; ++i) graphs.push_back(oracle::random_graph(6, 0.5, rng));
  // Add relabeled copies so that equal keys actually occur.
  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = 0; i < 40; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    graphs.push_back(oracle::permute(graphs[static_cast<std::size_t>(i)], perm));
  }
  for (const auto& a : graphs)
    for (const auto& b : graphs)
      if (a.edges.size() == b.edges.size())
        REQUIRE((oracle::to_library(a).canon_key() == oracle::to_library(b).canon_key()) == oracle::isomorphic(a, b));
}

TEST_CASE("canonical form examples") {
  const auto c4 = named_graph(NamedGraph::C4_3);
  std::vector<int> perm{2, 0, 3, 1};
  CHECK(c4.relabel(perm).canon_key() == c4.canon_key());
  CHECK(named_graph(NamedGraph::F5).canon_key() != named_graph(NamedGraph::F32).canon_key());
  CHECK(Hypergraph3(5).canon_key() == Hypergraph3(5).canon_key());
  CHECK(Hypergraph3(5).canon_key() != Hypergraph3(4).canon_key());

  const auto f32 = named_graph(NamedGraph::F32);
  const auto form = canonical_form(f32);
  CHECK(form.graph.relabel(std::vector<int>{0, 1, 2, 3, 4}) == form.graph);
  CHECK(f32.relabel(form.labeling) == form.graph);
  CHECK(graph_from_key(form.key) == form.graph);
  CHECK(from_hex(to_hex(form.key)) == form.key);
}

TEST_CASE("rooted canonical forms fix the roots") {
  // Two single-edge graphs on 4 vertices: rooted at an edge vertex or not.
  const auto g = Hypergraph3::from_edges(4, {{0, 1, 2}});
  std::vector<int> in_edge{0}, outside{3};
  CHECK(canonical_form_rooted(g, in_edge).key != canonical_form_rooted(g, outside).key);
  std::vector<int> a{1}, b{2};
  CHECK(canonical_form_rooted(g, a).key == canonical_form_rooted(g, b).key);
  // Root order matters.
  const auto path = Hypergraph3::from_edges(4, {{0, 1, 2}});
  std::vector<int> r01{0, 3}, r10{3, 0};
  CHECK(canonical_form_rooted(path, r01).key != canonical_form_rooted(path, r10).key);
  CHECK(canonical_form_rooted(path, r01).key != canonical_form(path).key);
}

TEST_CASE("containment examples") {
  const auto c5 = named_graph(NamedGraph::C5_3);
  const auto c5m = named_graph(NamedGraph::C5_3_MINUS);
  CHECK(contains_sub(c5, c5m));
  CHECK(contains_sub(named_graph(NamedGraph::F5_BAR), c5));
  CHECK_FALSE(contains_sub(blow_up(single_edge(), std::vector<int>{3, 3, 3}), named_graph(NamedGraph::F32)));

  const auto k4_blow = blow_up(named_graph(NamedGraph::K4_3), std::vector<int>{2, 2, 2, 2});
  CHECK_FALSE(contains_induced(k4_blow, named_graph(NamedGraph::F32_BAR)));
  for (auto g : all_named_graphs()) CHECK(contains_induced(named_graph(g), named_graph(g)));
  CHECK_FALSE(contains_induced(c5, c5m));
  CHECK_FALSE(contains_sub(Hypergraph3(3), Hypergraph3(4)));
}

TEST_CASE("containment agrees with the brute-force oracle") {
  std::mt19937_64 rng(5);
  std::vector<Hypergraph3> patterns;
  for (auto g : all_named_graphs()) patterns.push_back(named_graph(g));
  patterns.push_back(single_edge());
  patterns.push_back(Hypergraph3::from_edges(4, {{0, 1, 2}, {0, 1, 3}}));
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 3;
    const auto host = oracle::random_graph(n, 0.3 + 0.1 * (trial % 5), rng);
    const auto lib_host = oracle::to_library(host);
    for (const auto& p : patterns) {
      const auto op = oracle::from_library(p);
      REQUIRE(contains_sub(lib_host, p) == oracle::contains_sub(host, op));
      REQUIRE(contains_induced(lib_host, p) == oracle::contains_induced(host, op));
    }
  }
}

TEST_CASE("containment is monotone under adding edges") {
  std::mt19937_64 rng(8);
  const auto f32 = named_graph(NamedGraph::F32);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_graph(6, 0.3, rng);
    bool before = contains_sub(oracle::to_library(g), f32);
    for (const auto& t : oracle::all_triples(6)) {
      g.edges.insert(t);
      const bool after = contains_sub(oracle::to_library(g), f32);
      REQUIRE((!before || after));
      before = after;
    }
  }
}

TEST_CASE("complement") {
  const auto f5bar = complement(named_graph(NamedGraph::F5));
  CHECK(f5bar.size() == 7);
  CHECK(f5bar == named_graph(NamedGraph::F5_BAR));
  CHECK(complement(Hypergraph3(4)) == named_graph(NamedGraph::C4_3));
  CHECK(complement(named_graph(NamedGraph::K4_3)) == Hypergraph3(4));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto g = oracle::to_library(oracle::random_graph(6, 0.4, rng));
    CHECK(complement(complement(g)) == g);
    CHECK(g.size() + complement(g).size() == triple_count(6));
  }
}

TEST_CASE("blow-up") {
  const auto b = blow_up(named_graph(NamedGraph::K4_3), std::vector<int>{2, 2, 2, 2});
  CHECK(b.order() == 8);
  CHECK(b.size() == 32);
  const auto f32 = named_graph(NamedGraph::F32);
  CHECK(blow_up(f32, std::vector<int>{1, 1, 1, 1, 1}) == f32);
  for (int k = 1; k <= 4; ++k) CHECK(blow_up(single_edge(), std::vector<int>{k, k, k}).size() == std::size_t(k * k * k));
  CHECK_THROWS_AS(blow_up(single_edge(), std::vector<int>{1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(blow_up(single_edge(), std::vector<int>{1, 1}), std::invalid_argument);

  // Balanced K4 blow-ups up to 3 per class are F32-free (oracle scan).
  for (int k = 1; k <= 2; ++k) {
    const auto h = blow_up(named_graph(NamedGraph::K4_3), std::vector<int>{k, k, k, k});
    CHECK_FALSE(oracle::contains_sub(oracle::from_library(h), oracle::from_library(f32)));
  }
  CHECK_FALSE(contains_sub(blow_up(named_graph(NamedGraph::K4_3), std::vector<int>{3, 3, 3, 3}), f32));
}

TEST_CASE("degree statistics") {
  auto k4 = degree_stats(named_graph(NamedGraph::K4_3));
  CHECK(k4.min_degree == 3);
  CHECK(k4.max_degree == 3);
  CHECK(k4.gap == 0);
  auto f5 = degree_stats(named_graph(NamedGraph::F5));
  CHECK(f5.min_degree == 1);
  CHECK(f5.max_degree == 2);
  CHECK(f5.gap == 1);
  auto empty = degree_stats(Hypergraph3(4));
  CHECK(empty.min_degree == 0);
  CHECK(empty.max_degree == 0);
  CHECK(empty.gap == 0);
  CHECK(degree_stats(Hypergraph3(0)).gap == 0);
}

TEST_CASE("family parsing and freeness") {
  auto fam = Family::parse("C4_3,F5_BAR");
  CHECK(fam.members().size() == 2);
  CHECK(Family::parse("F5_BAR,C4_3").key() == fam.key());
  CHECK(Family::parse("K4_3").key() == Family::parse("C4_3").key());
  CHECK(Family::parse("").empty());
  CHECK(Family::parse("none").empty());
  CHECK(Family::parse(Family::parse("F32,induced:F32_BAR").key()).key() == Family::parse("F32,induced:F32_BAR").key());
  CHECK(Family::parse("induced:F32_BAR").members()[0].induced);
  CHECK(fam.max_order() == 5);
  CHECK_THROWS_AS(Family::parse("C4_3,NOPE"), std::invalid_argument);

  // Members written as `#<hex key>`.
  const std::string hex = "#" + to_hex(named_graph(NamedGraph::F5).canon_key());
  CHECK(Family::parse(hex).key() == Family::parse("F5").key());

  CHECK_FALSE(is_family_free(named_graph(NamedGraph::K4_3), Family::parse("C4_3")));
  CHECK(is_family_free(blow_up(single_edge(), std::vector<int>{2, 2, 2}), Family::parse("F32,C5_3_MINUS")));
  CHECK(is_family_free(Hypergraph3(3), Family::parse("none")));
}

TEST_CASE("subset scan agrees with family freeness") {
  std::mt19937_64 rng(21);
  const auto fam = Family::parse("C4_3,F5_BAR,induced:F32_BAR");
  for (int i = 0; i < 40; ++i) {
    const auto g = oracle::random_graph(7, 0.15 + 0.05 * (i % 6), rng);
    const auto report = subset_scan(oracle::to_library(g), fam);
    std::vector<oracle::Member> members;
    for (const auto& m : fam.members()) members.push_back({oracle::from_library(m.graph), m.induced});
    REQUIRE(report.free == oracle::family_free(g, members));
    if (!report.free) CHECK(report.witness.size() == fam.members()[static_cast<std::size_t>(report.member)].graph.order());
  }
  const auto clean = subset_scan(Hypergraph3(7), Family::parse("C4_3,F5_BAR"));
  CHECK(clean.free);
  CHECK(clean.subsets_scanned == 35 + 21);
}

TEST_CASE("graph text format round-trips") {
  const auto g = named_graph(NamedGraph::F32_BAR);
  std::stringstream s;
  write_graph(s, g);
  CHECK(read_graph(s) == g);

  std::stringstream many;
  std::vector<Hypergraph3> list{single_edge(), Hypergraph3(2), named_graph(NamedGraph::C5_3)};
  write_graphs(many, list);
  CHECK(many.str().find("graph 0") != std::string::npos);
  CHECK(read_graphs(many) == list);

  std::istringstream commented("# comment\nn 4\n0 1 2  # trailing\n\n1 2 3\n");
  CHECK(read_graph(commented).size() == 2);
  std::istringstream bad("n 3\n0 1 5\n");
  CHECK_THROWS(read_graph(bad));
  std::istringstream missing("0 1 2\n");
  CHECK_THROWS(read_graph(missing));
}

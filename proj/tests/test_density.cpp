#include "oracles.hpp"

#include "turan/density.hpp"
#include "turan/enumerate.hpp"
#include "turan/family.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

using namespace turan;

namespace {

RationalMatrix to_matrix(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<oracle::Graph> flag_graphs(const std::vector<Flag>& flags) {
  std::vector<oracle::Graph> out;
  for (const auto& f : flags) out.push_back(oracle::from_library(f.graph));
  return out;
}

}  // namespace

TEST_CASE("induced density examples") {
  for (auto g : all_named_graphs()) CHECK(induced_density(named_graph(g), named_graph(g)) == 1);
  CHECK(induced_density(single_edge(), named_graph(NamedGraph::K4_3)) == 1);
  CHECK(induced_density(Hypergraph3(3), named_graph(NamedGraph::K4_3)) == 0);
  const auto blow = blow_up(named_graph(NamedGraph::K4_3), std::vector<int>{2, 2, 2, 2});
  CHECK(induced_density(named_graph(NamedGraph::K4_3), blow) == Rational(8, 35));
  CHECK_THROWS_AS(induced_density(Hypergraph3(5), Hypergraph3(4)), std::invalid_argument);
}

TEST_CASE("induced density agrees with the subset oracle") {
  std::mt19937_64 rng(17);
  const auto patterns = enumerate_free(4, Family{});
  for (int i = 0; i < 10; ++i) {
    const auto host = oracle::random_graph(7, 0.4, rng);
    for (const auto& p : patterns)
      REQUIRE(induced_density(p, oracle::to_library(host)) == oracle::density(oracle::from_library(p), host));
  }
}

TEST_CASE("edge density") {
  CHECK(edge_density(blow_up(single_edge(), std::vector<int>{10, 10, 10})) == Rational(50, 203));
  CHECK(edge_density(named_graph(NamedGraph::K4_3)) == 1);
  CHECK(edge_density(Hypergraph3(6)) == 0);
  CHECK_THROWS_AS(edge_density(Hypergraph3(2)), std::invalid_argument);
}

TEST_CASE("densities of all m-vertex classes sum to one and obey the chain rule") {
  std::mt19937_64 rng(29);
  const auto five = enumerate_free(5, Family{});
  const auto four = enumerate_free(4, Family{});
  for (int i = 0; i < 8; ++i) {
    const auto host = oracle::to_library(oracle::random_graph(7, 0.5, rng));
    Rational total = 0;
    std::vector<Rational> p5;
    for (const auto& g : five) {
      p5.push_back(induced_density(g, host));
      total += p5.back();
    }
    CHECK(total == 1);
    for (const auto& f : four) {
      Rational chain = 0;
      for (std::size_t k = 0; k < five.size(); ++k) chain += induced_density(f, five[k]) * p5[k];
      CHECK(chain == induced_density(f, host));
    }
  }
}

TEST_CASE("pair density matrices agree with the embedding oracle") {
  struct Case {
    Hypergraph3 type;
    int flag_size;
    int target_size;
    std::string family;
  };
  const std::vector<Case> cases{
      {Hypergraph3(1), 3, 5, "C4_3,F5_BAR"},
      {Hypergraph3(0), 2, 4, "none"},
      {Hypergraph3(2), 3, 4, "C4_3"},
      {single_edge(), 4, 5, "none"},
      {Hypergraph3(3), 4, 5, "C4_3,F5_BAR"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.family);
    const auto family = Family::parse(c.family);
    const FlagType type{c.type};
    const auto table = pair_density_table(type, c.flag_size, c.target_size, family);
    REQUIRE(table.targets.size() == enumerate_free(c.target_size, family).size());
    REQUIRE(table.flags.size() == enumerate_flags(type, c.flag_size, family).size());
    const auto flags = flag_graphs(table.flags);
    for (std::size_t t = 0; t < table.targets.size(); ++t) {
      const auto& m = table.matrices[t];
      CHECK(m.is_symmetric());
      for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) CHECK((sgn(m(i, j)) >= 0 && m(i, j) <= 1));
      const auto expected =
          oracle::pair_density(oracle::from_library(c.type), c.flag_size, flags, oracle::from_library(table.targets[t]));
      REQUIRE(m == to_matrix(expected));
    }
  }
}

TEST_CASE("empty-type pair densities sum to one over all flag pairs") {
  std::mt19937_64 rng(3);
  const auto flags = enumerate_flags(FlagType{Hypergraph3(0)}, 3, Family{});
  for (int i = 0; i < 5; ++i) {
    const auto host = oracle::to_library(oracle::random_graph(6, 0.5, rng));
    const auto m = pair_density_matrix(FlagType{Hypergraph3(0)}, 3, flags, host);
    Rational total = 0;
    for (std::size_t a = 0; a < m.dim(); ++a)
      for (std::size_t b = 0; b < m.dim(); ++b) total += m(a, b);
    CHECK(total == 1);
  }
}

TEST_CASE("pair densities obey the chain rule through intermediate graphs") {
  // P(H) = sum_G P(G) p(G, H) over all 5-vertex G, for 7-vertex H.
  std::mt19937_64 rng(31);
  const FlagType type{Hypergraph3(1)};
  const auto table = pair_density_table(type, 3, 5, Family{});
  for (int i = 0; i < 6; ++i) {
    const auto host = oracle::to_library(oracle::random_graph(7, 0.5, rng));
    const auto direct = pair_density_matrix(type, 3, table.flags, host);
    RationalMatrix sum(direct.dim());
    for (std::size_t t = 0; t < table.targets.size(); ++t) {
      const auto p = induced_density(table.targets[t], host);
      for (std::size_t a = 0; a < sum.dim(); ++a)
        for (std::size_t b = 0; b < sum.dim(); ++b) sum(a, b) += p * table.matrices[t](a, b);
    }
    CHECK(sum == direct);
  }
}

TEST_CASE("pair density tables reject flags that do not fit") {
  CHECK_THROWS_AS(pair_density_table(FlagType{Hypergraph3(1)}, 4, 5, Family{}), std::invalid_argument);
}

TEST_CASE("table text format round-trips and the disk cache is used") {
  const auto table = pair_density_table(FlagType{Hypergraph3(1)}, 3, 5, Family::parse("C4_3,F5_BAR"));
  std::stringstream s;
  write_table(s, table);
  CHECK(read_table(s) == table);

  const auto dir = std::filesystem::temp_directory_path() / "turan_table_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  set_table_cache_dir(dir.string());
  const auto fresh = pair_density_table(FlagType{single_edge()}, 4, 5, Family::parse("F32"));
  CHECK_FALSE(std::filesystem::is_empty(dir));
  set_table_cache_dir("");
  CHECK(pair_density_table(FlagType{single_edge()}, 4, 5, Family::parse("F32")) == fresh);
  std::filesystem::remove_all(dir);
}

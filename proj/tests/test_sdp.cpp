#include "oracles.hpp"

#include "turan/certificate.hpp"
#include "turan/error.hpp"
#include "turan/sdp.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace turan;

namespace {

std::string emitted(const SdpModel& model, NumberStyle style = NumberStyle::Exact) {
  std::ostringstream s;
  emit(model, s, style);
  return s.str();
}

}  // namespace

TEST_CASE("default types follow the parity rule") {
  const auto family = Family::parse("C4_3,F5_BAR");
  const auto five = default_types(5, family);
  REQUIRE(five.size() == 3);
  CHECK(five[0].type.size() == 1);
  CHECK(five[0].flag_size == 3);
  CHECK(five[1].type.size() == 3);
  CHECK(five[2].type.size() == 3);
  CHECK(five[1].flag_size == 4);
  const auto four = default_types(4, Family{});
  REQUIRE(four.size() == 2);
  CHECK(four[0].type.size() == 0);
  CHECK(four[0].flag_size == 2);
  CHECK(four[1].type.size() == 2);
  CHECK(four[1].flag_size == 3);
}

TEST_CASE("LP bounds") {
  const auto c4 = assemble(4, Family::parse("C4_3"), {});
  CHECK(c4.constraint_count() == 4);
  CHECK(lp_bound(c4) == Rational(3, 4));

  const auto partite = assemble(5, Family::parse("F32,C5_3_MINUS"), {});
  Rational best = 0;
  for (const auto& g : partite.graphs) best = std::max(best, edge_density(g));
  CHECK(lp_bound(partite) == best);
  CHECK(lp_bound(partite) >= Rational(2, 9));
}

TEST_CASE("objective coefficients expand the edge density") {
  std::mt19937_64 rng(41);
  const auto model = assemble(5, Family{}, {});
  for (int i = 0; i < 6; ++i) {
    const auto host = oracle::to_library(oracle::random_graph(7, 0.45, rng));
    Rational sum = 0;
    for (std::size_t g = 0; g < model.graphs.size(); ++g) sum += model.objective[g] * induced_density(model.graphs[g], host);
    CHECK(sum == edge_density(host));
  }
}

TEST_CASE("assemble errors") {
  // A forbidden single edge plus an induced-forbidden empty triple leaves no
  // graph on 4 vertices.
  const auto none = Family::parse("#" + to_hex(single_edge().canon_key()) + ",induced:#" +
                                  to_hex(Hypergraph3(3).canon_key()));
  CHECK_THROWS_AS(assemble(4, none, {}), DomainError);
  std::vector<TypeSpec> too_big{{FlagType{Hypergraph3(1)}, 4}};
  CHECK_THROWS_AS(assemble(5, Family{}, too_big), std::invalid_argument);
}

TEST_CASE("emit and parse round-trip") {
  const auto family = Family::parse("C4_3,F5_BAR");
  const auto model = assemble(5, family, default_types(5, family));
  std::vector<std::size_t> dims;
  for (const auto& b : model.blocks) dims.push_back(b.flags.size());
  CHECK(dims == std::vector<std::size_t>{2, 8, 7});

  const std::string text = emitted(model);
  std::istringstream in(text);
  const auto parsed = parse_model(in);
  CHECK(parsed == model);
  CHECK(emitted(parsed) == text);

  const auto lp = assemble(4, Family::parse("C4_3"), {});
  const std::string lp_text = emitted(lp);
  CHECK(lp_text.find("\n4\n2\n-4 -1\n") != std::string::npos);
  std::istringstream lp_in(lp_text);
  CHECK(parse_model(lp_in) == lp);

  std::vector<TypeSpec> one{{FlagType{Hypergraph3(2)}, 3}};
  const auto single = assemble(4, Family::parse("C4_3"), one);
  CHECK(single.blocks.size() == 1);
  CHECK(single.blocks[0].flags.size() == 2);
  CHECK(emitted(single).find("\n2 -4 -1\n") != std::string::npos);

  CHECK(emitted(model, NumberStyle::Decimal).find('/') == std::string::npos);
}

TEST_CASE("parse rejects inconsistent files") {
  const auto model = assemble(4, Family::parse("C4_3"), {});
  std::string text = emitted(model);
  std::string broken = text;
  broken.replace(broken.find("\n4\n2\n"), 5, "\n5\n2\n");
  std::istringstream a(broken);
  CHECK_THROWS(parse_model(a));
  std::istringstream b("4\n2\n");
  CHECK_THROWS(parse_model(b));
}

TEST_CASE("round_value examples") {
  CHECK(round_value(0.465560913, 65536) == Rational(30511, 65536));
  CHECK(round_value(0.465560913085938, 65536) == Rational(30511, 65536));
  CHECK(round_value(0.0, 65536) == 0);
  CHECK(round_value(0.333333343, 100) == Rational(1, 3));
  CHECK(round_value(-0.25, 10) == Rational(-1, 4));
  CHECK(round_value(3.0, 7) == 3);
  CHECK_THROWS_AS(round_value(0.5, 0), std::invalid_argument);
}

TEST_CASE("round_value agrees with the brute-force best approximation") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 300; ++i) {
    const double x = u(rng);
    const std::int64_t bound = 1 + static_cast<std::int64_t>(rng() % 400);
    const auto got = round_value(x, bound);
    const auto want = oracle::best_approximation(Rational(x), bound);
    CHECK(got.get_den() <= bound);
    // Equal error; the values coincide except on exact ties.
    CHECK(abs(got - Rational(x)) == abs(want - Rational(x)));
  }
}

TEST_CASE("read_solution") {
  std::istringstream in("0.5 1e-3\n-2\n");
  CHECK(read_solution(in) == std::vector<double>{0.5, 1e-3, -2});
  std::istringstream bad("0.5 x");
  CHECK_THROWS(read_solution(bad));
}

TEST_CASE("round_solution produces a verifiable certificate from floats") {
  const auto model = assemble(4, Family::parse("C4_3"), {});
  // LP layout: slacks then u.
  std::vector<double> sol;
  for (const auto& obj : model.objective) sol.push_back(0.75 - obj.get_d() - 1e-9);
  sol.push_back(0.7499999);
  const auto cert = round_solution(model, sol, 1u << 16);
  CHECK(cert.bound == Rational(3, 4));
  CHECK(verify(cert).verified());

  // A u below the requirement is raised to it.
  sol.back() = 0.6;
  CHECK(round_solution(model, sol, 1u << 16).bound == Rational(3, 4));
  // Negative slacks are clamped.
  sol[0] = -0.01;
  CHECK(sgn(round_solution(model, sol, 1u << 16).slacks.at(0)) == 0);
  sol.pop_back();
  CHECK_THROWS_AS(round_solution(model, sol, 1u << 16), std::invalid_argument);
}

TEST_CASE("round_solution with a PSD block") {
  std::vector<TypeSpec> one{{FlagType{Hypergraph3(2)}, 3}};
  const auto model = assemble(4, Family::parse("C4_3"), one);
  std::vector<double> sol{0.1, -0.1, 0.1};
  for (std::size_t g = 0; g < model.graphs.size(); ++g) sol.push_back(0.0);
  sol.push_back(0.5);
  const auto cert = round_solution(model, sol, 1000);
  REQUIRE(cert.blocks.size() == 1);
  CHECK(cert.blocks[0].q(0, 1) == Rational(-1, 10));
  CHECK(cert.blocks[0].q(1, 0) == Rational(-1, 10));
  CHECK(verify(cert).verified());
}

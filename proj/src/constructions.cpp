#include "turan/constructions.hpp"

#include <limits>
#include <stdexcept>

namespace turan {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive(std::span<const int> sizes) {
  for (int s : sizes)
    if (s <= 0) throw std::invalid_argument("part sizes must be positive");
}

// Validates a B_rec split sequence; returns the (offset, n1, n2) per level.
std::vector<std::array<int, 3>> brec_levels(const BRecSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("B_rec: negative vertex count");
  std::vector<std::array<int, 3>> levels;
  int offset = 0;
  int remaining = spec.n;
  for (int n1 : spec.splits) {
    if (remaining < 3) throw std::invalid_argument("invalid split: fewer than 3 vertices remain");
    if (n1 < 1 || n1 > remaining - 1)
      throw std::invalid_argument("invalid split: first part must leave both parts non-empty");
    levels.push_back({offset, n1, remaining - n1});
    offset += n1;
    remaining -= n1;
  }
  if (remaining > 2) throw std::invalid_argument("invalid split: " + std::to_string(remaining) + " vertices left unsplit");
  return levels;
}

}  // namespace

int vertex_count(const ConstructionSpec& spec) {
  return std::visit(Overloaded{
                        [](const BRecSpec& s) { return s.n; },
                        [](const Partite3Spec& s) { return s.sizes[0] + s.sizes[1] + s.sizes[2]; },
                        [](const K4BlowupSpec& s) { return s.sizes[0] + s.sizes[1] + s.sizes[2] + s.sizes[3]; },
                        [](const SemiBipartiteSpec& s) { return s.n1 + s.n2; },
                    },
                    spec);
}

Hypergraph3 build(const ConstructionSpec& spec) {
  return std::visit(
      Overloaded{
          [](const BRecSpec& s) {
            std::vector<Triple> edges;
            for (auto [offset, n1, n2] : brec_levels(s)) {
              for (int a = offset; a < offset + n1; ++a)
                for (int b = a + 1; b < offset + n1; ++b)
                  for (int c = offset + n1; c < offset + n1 + n2; ++c) edges.push_back({a, b, c});
            }
            return Hypergraph3::from_edges(s.n, edges);
          },
          [](const Partite3Spec& s) {
            require_positive(s.sizes);
            return blow_up(single_edge(), s.sizes);
          },
          [](const K4BlowupSpec& s) {
            require_positive(s.sizes);
            return blow_up(named_graph(NamedGraph::K4_3), s.sizes);
          },
          [](const SemiBipartiteSpec& s) {
            if (s.n1 < 0 || s.n2 < 0) throw std::invalid_argument("part sizes must be non-negative");
            std::vector<Triple> edges;
            for (int a = 0; a < s.n1; ++a)
              for (int b = a + 1; b < s.n1; ++b)
                for (int c = s.n1; c < s.n1 + s.n2; ++c) edges.push_back({a, b, c});
            return Hypergraph3::from_edges(s.n1 + s.n2, edges);
          },
      },
      spec);
}

Integer edge_count(const ConstructionSpec& spec) {
  return std::visit(Overloaded{
                        [](const BRecSpec& s) -> Integer {
                          Integer total = 0;
                          for (auto [offset, n1, n2] : brec_levels(s)) total += binomial(n1, 2) * n2;
                          return total;
                        },
                        [](const Partite3Spec& s) -> Integer {
                          require_positive(s.sizes);
                          return Integer(s.sizes[0]) * s.sizes[1] * s.sizes[2];
                        },
                        [](const K4BlowupSpec& s) -> Integer {
                          require_positive(s.sizes);
                          Integer total = 0;
                          for (int skip = 0; skip < 4; ++skip) {
                            Integer product = 1;
                            for (int i = 0; i < 4; ++i)
                              if (i != skip) product *= s.sizes[static_cast<std::size_t>(i)];
                            total += product;
                          }
                          return total;
                        },
                        [](const SemiBipartiteSpec& s) -> Integer { return binomial(s.n1, 2) * s.n2; },
                    },
                    spec);
}

std::vector<std::int64_t> b_rec_table(int n) {
  if (n < 0) throw std::invalid_argument("b_rec: negative n");
  if (n > 2'000'000) throw std::invalid_argument("b_rec: n too large for 64-bit values");
  std::vector<std::int64_t> best(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t m = 3; m <= n; ++m) {
    std::int64_t top = 0;
    for (std::int64_t n1 = 1; n1 <= m; ++n1) {
      std::int64_t v = n1 * (n1 - 1) / 2 * (m - n1) + best[static_cast<std::size_t>(m - n1)];
      top = std::max(top, v);
    }
    best[static_cast<std::size_t>(m)] = top;
  }
  return best;
}

BRecOptimum b_rec(int n) {
  auto best = b_rec_table(n);
  BRecOptimum result;
  result.value = best[static_cast<std::size_t>(n)];
  std::int64_t remaining = n;
  while (remaining >= 3) {
    std::int64_t chosen = 0;
    for (std::int64_t n1 = remaining; n1 >= 1; --n1) {
      std::int64_t v = n1 * (n1 - 1) / 2 * (remaining - n1) + best[static_cast<std::size_t>(remaining - n1)];
      if (v == best[static_cast<std::size_t>(remaining)]) {
        chosen = n1;
        break;
      }
    }
    result.splits.push_back(static_cast<int>(chosen));
    remaining -= chosen;
  }
  return result;
}

DensityReport density_report(const ConstructionSpec& spec) {
  DensityReport report;
  const int n = vertex_count(spec);
  report.edges = edge_count(spec);
  if (n >= 3) report.density = ratio(report.edges, binomial(n, 3));

  if (const auto* brec = std::get_if<BRecSpec>(&spec)) {
    if (brec->splits == b_rec(brec->n).splits)
      report.limit_decimal = to_decimal(two_sqrt3_minus_3(), 50);
    else
      report.limit_decimal = "NA";
    return report;
  }
  if (n > 0) {
    const Rational limit = ratio(report.edges * 6, Integer(n) * n * n);
    report.limit = limit;
    report.limit_decimal = to_decimal(limit, 50);
  } else {
    report.limit_decimal = "NA";
  }
  return report;
}

HighPrecision simplex_margin() { return HighPrecision("-1e-30"); }

SimplexCheck fact21_check(const HighPrecision& x1, const HighPrecision& x2, QuadraticCenter center) {
  if (x1 < 0 || x2 < 0 || x2 >= 1 || abs(x1 + x2 - 1) > HighPrecision("1e-45"))
    throw std::invalid_argument("fact21_check: need x1, x2 >= 0, x1 + x2 = 1 and x2 < 1");

  const HighPrecision beta = two_sqrt3_minus_3();
  const HighPrecision sqrt3 = boost::multiprecision::sqrt(HighPrecision(3));
  const HighPrecision c = center == QuadraticCenter::AsPrinted ? (3 - sqrt3) / 12 : (3 - sqrt3) / 2;

  SimplexCheck r;
  r.bound1 = beta / 6;
  r.lhs1 = x1 * x1 * x2 / (2 * (1 - x2 * x2 * x2));
  r.holds1 = r.bound1 - r.lhs1 > simplex_margin();

  r.part2_applies = x1 >= HighPrecision("0.5") && x1 <= 1;
  r.lhs2 = x1 * x1 * x2 / 2 + beta / 6 * x2 * x2 * x2;
  r.bound2 = beta / 6 - (x1 - c) * (x1 - c) / 4;
  r.holds2 = r.bound2 - r.lhs2 > simplex_margin();
  return r;
}

SimplexGrid fact21_grid(const Rational& step, QuadraticCenter center) {
  if (sgn(step) <= 0 || step > 1) throw std::invalid_argument("fact21_grid: step must lie in (0, 1]");
  SimplexGrid grid;
  grid.max_lhs1 = -1;
  for (Rational x1 = 0; x1 <= 1; x1 += step) {
    Rational x2 = 1 - x1;
    if (x2 == 1) continue;
    auto check = fact21_check(to_high_precision(x1), to_high_precision(x2), center);
    ++grid.points;
    if (check.lhs1 > grid.max_lhs1) {
      grid.max_lhs1 = check.lhs1;
      grid.argmax_x1 = to_high_precision(x1);
    }
    if (!check.holds1) ++grid.violations1;
    if (check.part2_applies) {
      ++grid.part2_points;
      if (!check.holds2) ++grid.violations2;
    }
  }
  return grid;
}

}  // namespace turan

#include "turan/partition.hpp"

#include "turan/parallel.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace turan {

namespace {

int v1_count(const Triple& t, const std::vector<bool>& in_v1) {
  return static_cast<int>(in_v1[t[0]]) + static_cast<int>(in_v1[t[1]]) + static_cast<int>(in_v1[t[2]]);
}

// Change in the cross count when each vertex switches sides.
std::vector<std::int64_t> move_gains(const Hypergraph3& graph, const std::vector<bool>& in_v1) {
  std::vector<std::int64_t> gain(static_cast<std::size_t>(graph.order()), 0);
  for (const auto& e : graph.edges()) {
    const int k = v1_count(e, in_v1);
    for (Vertex v : e) {
      if (in_v1[v]) {
        // k -> k-1
        if (k == 2) --gain[v];
        if (k == 3) ++gain[v];
      } else {
        // k -> k+1
        if (k == 2) --gain[v];
        if (k == 1) ++gain[v];
      }
    }
  }
  return gain;
}

MaxCut to_maxcut(const Hypergraph3& graph, const std::vector<bool>& in_v1, std::int64_t cross) {
  MaxCut result;
  for (Vertex v = 0; v < graph.order(); ++v) (in_v1[v] ? result.v1 : result.v2).push_back(v);
  result.cross = cross;
  const Integer n = graph.order();
  if (n > 0) result.mu = ratio(Integer(6 * cross), n * n * n);
  return result;
}

}  // namespace

std::vector<bool> side_vector(int n, std::span<const Vertex> v1, std::span<const Vertex> v2) {
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  std::vector<bool> in_v1(static_cast<std::size_t>(n), false);
  auto mark = [&](std::span<const Vertex> part, bool first) {
    for (Vertex v : part) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition: vertex " + std::to_string(v) + " out of range");
      if (seen[v]++) throw std::invalid_argument("partition: vertex " + std::to_string(v) + " listed twice");
      in_v1[v] = first;
    }
  };
  mark(v1, true);
  mark(v2, false);
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) throw std::invalid_argument("partition: vertex " + std::to_string(v) + " in neither part");
  return in_v1;
}

std::int64_t cross_count(const Hypergraph3& graph, const std::vector<bool>& in_v1) {
  std::int64_t cross = 0;
  for (const auto& e : graph.edges()) cross += v1_count(e, in_v1) == 2;
  return cross;
}

PartitionStats bad_missing(const Hypergraph3& graph, std::span<const Vertex> v1, std::span<const Vertex> v2) {
  const auto in_v1 = side_vector(graph.order(), v1, v2);
  PartitionStats stats;
  for (Vertex v = 0; v < graph.order(); ++v) (in_v1[v] ? stats.v1 : stats.v2).push_back(v);
  for (const auto& e : graph.edges()) {
    const int k = v1_count(e, in_v1);
    if (k == 1 || k == 3) stats.bad.push_back(e);
    if (k == 2) ++stats.cross_present;
    if (k == 0) ++stats.inner2;
  }
  for (std::size_t i = 0; i < stats.v1.size(); ++i)
    for (std::size_t j = i + 1; j < stats.v1.size(); ++j)
      for (Vertex c : stats.v2) {
        auto t = make_triple(stats.v1[i], stats.v1[j], c);
        if (!graph.has_edge(t)) stats.missing.push_back(t);
      }
  std::sort(stats.missing.begin(), stats.missing.end());
  return stats;
}

bool is_locally_maximal(const Hypergraph3& graph, std::span<const Vertex> v1, std::span<const Vertex> v2) {
  const auto gains = move_gains(graph, side_vector(graph.order(), v1, v2));
  return std::all_of(gains.begin(), gains.end(), [](std::int64_t g) { return g <= 0; });
}

MaxCut maxcut_local_search(const Hypergraph3& graph, int restarts, std::uint64_t seed) {
  const int n = graph.order();
  if (n < 3) throw std::invalid_argument("maxcut_local_search: need at least 3 vertices");
  if (restarts < 1) throw std::invalid_argument("maxcut_local_search: need at least one restart");

  std::vector<std::vector<bool>> sides(static_cast<std::size_t>(restarts));
  std::vector<std::int64_t> cross(static_cast<std::size_t>(restarts));
  parallel_for(static_cast<std::size_t>(restarts), [&](std::size_t r) {
    std::mt19937_64 rng(seed + r);
    std::bernoulli_distribution coin(0.5);
    std::vector<bool> in_v1(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) in_v1[v] = coin(rng);
    for (;;) {
      const auto gains = move_gains(graph, in_v1);
      const auto best = std::max_element(gains.begin(), gains.end());
      if (*best <= 0) break;
      const auto v = static_cast<std::size_t>(best - gains.begin());
      in_v1[v] = !in_v1[v];
    }
    cross[r] = cross_count(graph, in_v1);
    sides[r] = std::move(in_v1);
  });
  const auto best = static_cast<std::size_t>(std::max_element(cross.begin(), cross.end()) - cross.begin());
  return to_maxcut(graph, sides[best], cross[best]);
}

MaxCut exhaustive_maxcut(const Hypergraph3& graph) {
  const int n = graph.order();
  if (n > 24) throw std::invalid_argument("exhaustive_maxcut: at most 24 vertices");
  std::vector<std::uint32_t> masks;
  for (const auto& e : graph.edges()) masks.push_back((1u << e[0]) | (1u << e[1]) | (1u << e[2]));

  // Chunks by the top prefix bits; each chunk keeps its own best.
  const int prefix_bits = std::min(n, 6);
  const std::size_t chunks = std::size_t{1} << prefix_bits;
  const int low_bits = n - prefix_bits;
  std::vector<std::int64_t> best_cross(chunks, -1);
  std::vector<std::uint32_t> best_mask(chunks, 0);
  parallel_for(chunks, [&](std::size_t chunk) {
    for (std::uint32_t low = 0; low < (1u << low_bits); ++low) {
      const std::uint32_t mask = (static_cast<std::uint32_t>(chunk) << low_bits) | low;
      std::int64_t c = 0;
      for (auto m : masks) c += std::popcount(mask & m) == 2;
      if (c > best_cross[chunk]) {
        best_cross[chunk] = c;
        best_mask[chunk] = mask;
      }
    }
  });
  const auto best = static_cast<std::size_t>(std::max_element(best_cross.begin(), best_cross.end()) - best_cross.begin());
  std::vector<bool> in_v1(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) in_v1[v] = (best_mask[best] >> v) & 1u;
  return to_maxcut(graph, in_v1, best_cross[best]);
}

LemmaGap lemma22_gap(const Hypergraph3& graph, std::span<const Vertex> v1, std::span<const Vertex> v2,
                     const Rational& xi) {
  const auto stats = bad_missing(graph, v1, v2);
  const Integer n = graph.order();
  LemmaGap gap;
  gap.lhs = static_cast<unsigned long>(graph.size());
  const Rational bad_term = ratio(Integer(static_cast<unsigned long>(stats.bad.size())), 3999);
  const Rational missing_term = ratio(Integer(static_cast<unsigned long>(stats.missing.size())), 4000);
  gap.rhs = Rational(binomial(static_cast<std::int64_t>(stats.v1.size()), 2) * static_cast<long>(stats.v2.size())) +
            Rational(Integer(static_cast<long>(stats.inner2))) + xi * Rational(n * n * n) -
            std::max(bad_term, missing_term);
  gap.rhs.canonicalize();
  gap.holds = Rational(gap.lhs) <= gap.rhs;
  return gap;
}

Rational prop33_expr(const Hypergraph3& graph, std::span<const Vertex> v1, std::span<const Vertex> v2) {
  const auto stats = bad_missing(graph, v1, v2);
  Rational value = Rational(Integer(static_cast<unsigned long>(stats.bad.size()))) -
                   ratio(3999, 4000) * Rational(Integer(static_cast<unsigned long>(stats.missing.size())));
  value.canonicalize();
  return value;
}

std::vector<Vertex> low_degree_set(const Hypergraph3& graph, const Rational& delta, const HighPrecision& pi_value) {
  if (sgn(delta) <= 0) throw std::invalid_argument("low_degree_set: delta must be positive");
  const HighPrecision n = graph.order();
  const HighPrecision threshold =
      (pi_value / 2 - 4 * boost::multiprecision::sqrt(to_high_precision(delta))) * n * n;
  const HighPrecision floor_threshold = boost::multiprecision::floor(threshold);
  std::vector<Vertex> result;
  const auto degrees = graph.degrees();
  for (Vertex v = 0; v < graph.order(); ++v)
    if (HighPrecision(degrees[v]) <= floor_threshold) result.push_back(v);
  return result;
}

DegreeGap degree_gap_check(const Hypergraph3& graph) {
  const auto stats = degree_stats(graph);
  DegreeGap result;
  result.gap = stats.gap;
  result.bound = graph.order() - 2;
  result.within = result.gap <= result.bound;
  return result;
}

}  // namespace turan

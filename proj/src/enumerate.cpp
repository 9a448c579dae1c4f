#include "turan/enumerate.hpp"

#include "turan/combinatorics.hpp"
#include "turan/error.hpp"
#include "turan/family.hpp"
#include "turan/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace turan {

namespace {

std::vector<Vertex> iota_vertices(int count) {
  std::vector<Vertex> v(static_cast<std::size_t>(count));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

bool free_of_induced(const Hypergraph3& g, const Family& family) {
  for (const auto& m : family.members())
    if (m.induced && m.graph.order() <= g.order() && contains_induced(g, m.graph)) return false;
  return true;
}

// Non-induced members split into those matched by subset patterns and the
// rare larger ones left to the general containment search.
struct Guards {
  std::vector<PatternMatcher> small;
  std::vector<Hypergraph3> large;

  explicit Guards(const Family& family) {
    for (const auto& m : family.members()) {
      if (m.induced) continue;
      if (m.graph.order() <= 7) {
        small.emplace_back(m);
      } else {
        large.push_back(m.graph);
      }
    }
  }
};

// Links of the new vertex k over the parent, decided pair by pair. A pair
// that completes a copy of a non-induced member is cut together with every
// extension, as adding edges never removes a copy.
class LinkSearch {
 public:
  LinkSearch(const Hypergraph3& parent, const Guards& guards)
      : parent_(parent), guards_(guards), k_(parent.order()), n_(k_ + 1),
        cube_(static_cast<std::size_t>(n_ * n_ * n_), 0) {
    for (Vertex b = 1; b < k_; ++b)
      for (Vertex a = 0; a < b; ++a) pairs_.emplace_back(a, b);
    for (const auto& e : parent.edges()) set(e[0], e[1], e[2], true);
  }

  std::map<std::string, Hypergraph3> run() {
    descend(0);
    return std::move(accepted_);
  }

 private:
  void set(Vertex a, Vertex b, Vertex c, bool on) { cube_[static_cast<std::size_t>((a * n_ + b) * n_ + c)] = on; }
  bool has(Vertex a, Vertex b, Vertex c) const { return cube_[static_cast<std::size_t>((a * n_ + b) * n_ + c)]; }

  std::uint64_t pattern(std::span<const Vertex> subset) const {
    const int size = static_cast<int>(subset.size());
    std::uint64_t mask = 0;
    for (int c = 2; c < size; ++c)
      for (int b = 1; b < c; ++b)
        for (int a = 0; a < b; ++a)
          if (has(subset[static_cast<std::size_t>(a)], subset[static_cast<std::size_t>(b)],
                  subset[static_cast<std::size_t>(c)]))
            mask |= std::uint64_t{1} << triple_rank({a, b, c});
    return mask;
  }

  // Some small member sits on a set containing `fixed` (sorted, ending in k).
  bool hit_through(std::span<const Vertex> fixed) const {
    std::vector<Vertex> others;
    for (Vertex v = 0; v < k_; ++v)
      if (std::find(fixed.begin(), fixed.end(), v) == fixed.end()) others.push_back(v);
    const int free_count = static_cast<int>(others.size());
    std::vector<Vertex> subset;
    for (const auto& g : guards_.small) {
      const int extra = g.order() - static_cast<int>(fixed.size());
      if (extra < 0 || extra > free_count) continue;
      const bool clean = for_each_subset(free_count, extra, [&](std::span<const int> pick) {
        subset.assign(fixed.begin(), fixed.end());
        for (int i : pick) subset.push_back(others[static_cast<std::size_t>(i)]);
        std::sort(subset.begin(), subset.end());
        return !g.matches(pattern(subset));
      });
      if (!clean) return true;
    }
    return false;
  }

  void descend(std::size_t i) {
    if (i == pairs_.size()) {
      leaf();
      return;
    }
    descend(i + 1);
    const auto [a, b] = pairs_[i];
    set(a, b, k_, true);
    const Vertex fixed[] = {a, b, k_};
    if (!hit_through(fixed)) descend(i + 1);
    set(a, b, k_, false);
  }

  void leaf() {
    // Members with isolated vertices can appear without any new edge.
    const Vertex fresh[] = {k_};
    if (hit_through(fresh)) return;
    std::vector<Triple> edges = parent_.edges();
    for (const auto& [a, b] : pairs_)
      if (has(a, b, k_)) edges.push_back({a, b, k_});
    auto child = Hypergraph3::from_edges(n_, edges);
    for (const auto& g : guards_.large)
      if (g.order() <= n_ && contains_sub(child, g)) return;

    auto canon = canonical_form(child);
    // Canonical deletion: the vertex carrying the largest canonical label.
    Vertex chosen =
        static_cast<Vertex>(std::find(canon.labeling.begin(), canon.labeling.end(), k_) - canon.labeling.begin());
    if (chosen != k_) {
      const Vertex pick[] = {chosen};
      if (canonical_form_rooted(child, fresh).key != canonical_form_rooted(child, pick).key) return;
    }
    accepted_.try_emplace(canon.key, canon.graph);
  }

  const Hypergraph3& parent_;
  const Guards& guards_;
  int k_;
  int n_;
  std::vector<char> cube_;  // cube_[(a n + b) n + c] for a < b < c
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::map<std::string, Hypergraph3> accepted_;
};

}  // namespace

std::string FlagType::key() const {
  auto roots = iota_vertices(sigma.order());
  return canonical_form_rooted(sigma, roots).key;
}

std::string flag_key(const Hypergraph3& graph, std::span<const Vertex> roots) {
  return canonical_form_rooted(graph, roots).key;
}

std::vector<Hypergraph3> enumerate_free(int m, const Family& family, EnumerateOptions options) {
  if (m < 0) throw std::invalid_argument("enumerate_free: negative order");
  if (m > 7 && !options.allow_large) throw std::invalid_argument("enumerate_free: m > 7 refused without allow_large");

  const Guards guards(family);
  std::vector<Hypergraph3> level{Hypergraph3(0)};
  for (int k = 0; k < m; ++k) {
    std::vector<std::map<std::string, Hypergraph3>> children(level.size());
    parallel_for(level.size(), [&](std::size_t i) { children[i] = LinkSearch(level[i], guards).run(); });
    std::vector<std::pair<std::string, Hypergraph3>> next;
    for (auto& batch : children)
      for (auto& [key, graph] : batch) next.emplace_back(key, std::move(graph));
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [key, graph] : next) level.push_back(std::move(graph));
  }

  std::vector<Hypergraph3> result;
  for (auto& g : level)
    if (free_of_induced(g, family)) result.push_back(std::move(g));
  return result;
}

std::vector<Flag> enumerate_flags(const FlagType& type, int m_prime, const Family& family) {
  const int s = type.size();
  if (m_prime < s) throw std::invalid_argument("enumerate_flags: flag size below type size");
  if (!is_family_free(type.sigma, family)) throw DomainError("type graph is not family-free; no flags exist");

  std::vector<Flag> flags;
  if (s == 0) {
    for (auto& g : enumerate_free(m_prime, family, {.allow_large = true}))
      flags.push_back({g, type, canonical_form_rooted(g, {}).key});
    std::sort(flags.begin(), flags.end(), [](const Flag& a, const Flag& b) { return a.key < b.key; });
    return flags;
  }

  std::vector<Triple> open;
  for (Vertex c = 2; c < m_prime; ++c)
    for (Vertex b = 1; b < c; ++b)
      for (Vertex a = 0; a < b; ++a)
        if (c >= s) open.push_back({a, b, c});
  if (open.size() > 24) throw std::invalid_argument("enumerate_flags: too many free triples for labeled generation");

  const auto roots = iota_vertices(s);
  std::map<std::string, Hypergraph3> found;
  std::vector<Triple> edges;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << open.size()); ++mask) {
    edges = type.sigma.edges();
    for (std::size_t i = 0; i < open.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(open[i]);
    auto g = Hypergraph3::from_edges(m_prime, edges);
    if (!is_family_free(g, family)) continue;
    auto canon = canonical_form_rooted(g, roots);
    found.try_emplace(canon.key, canon.graph);
  }
  for (auto& [key, g] : found) flags.push_back({g, type, key});
  return flags;
}

}  // namespace turan

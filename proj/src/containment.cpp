#include "turan/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace turan {

namespace {

// Backtracking embedding search. Pattern vertices are placed in a fixed
// order; when a vertex is placed, every pattern triple whose vertices are all
// placed and whose last-placed vertex is this one gets checked.
class Embedder {
 public:
  Embedder(const Hypergraph3& host, const Hypergraph3& pattern, bool induced)
      : host_(host), pattern_(pattern), induced_(induced) {
    const int k = pattern.order();
    auto deg = pattern.degrees();
    host_deg_ = host.degrees();
    order_.resize(static_cast<std::size_t>(k));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)]; });
    pattern_deg_ = std::move(deg);

    std::vector<int> position(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) position[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
    checks_.resize(static_cast<std::size_t>(k));
    for (Vertex c = 2; c < k; ++c)
      for (Vertex b = 1; b < c; ++b)
        for (Vertex a = 0; a < b; ++a) {
          bool edge = pattern.has_edge(a, b, c);
          if (!edge && !induced) continue;
          int last = std::max({position[static_cast<std::size_t>(a)], position[static_cast<std::size_t>(b)],
                               position[static_cast<std::size_t>(c)]});
          checks_[static_cast<std::size_t>(last)].push_back({{a, b, c}, edge});
        }
  }

  bool run() {
    if (pattern_.order() > host_.order()) return false;
    if (!induced_ && pattern_.size() > host_.size()) return false;
    image_.assign(static_cast<std::size_t>(pattern_.order()), -1);
    used_.assign(static_cast<std::size_t>(host_.order()), false);
    return extend(0);
  }

 private:
  struct Check {
    Triple triple;
    bool edge;
  };

  const Hypergraph3& host_;
  const Hypergraph3& pattern_;
  bool induced_;
  std::vector<int> host_deg_;
  std::vector<int> pattern_deg_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Check>> checks_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex x = 0; x < host_.order(); ++x) {
      if (used_[static_cast<std::size_t>(x)]) continue;
      if (!induced_ && host_deg_[static_cast<std::size_t>(x)] < pattern_deg_[static_cast<std::size_t>(v)]) continue;
      image_[static_cast<std::size_t>(v)] = x;
      bool ok = true;
      for (const auto& check : checks_[depth]) {
        const auto& t = check.triple;
        bool present = host_.has_edge(image_[static_cast<std::size_t>(t[0])], image_[static_cast<std::size_t>(t[1])],
                                      image_[static_cast<std::size_t>(t[2])]);
        if (check.edge ? !present : present) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used_[static_cast<std::size_t>(x)] = true;
      if (extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(x)] = false;
    }
    image_[static_cast<std::size_t>(v)] = -1;
    return false;
  }
};

}  // namespace

bool contains_sub(const Hypergraph3& host, const Hypergraph3& pattern) {
  return Embedder(host, pattern, false).run();
}

bool contains_induced(const Hypergraph3& host, const Hypergraph3& pattern) {
  return Embedder(host, pattern, true).run();
}

}  // namespace turan

// Canonical labeling by individualization-refinement.
//
// A coloring of the vertices is refined until equitable with respect to the
// edge relation; if cells remain, each vertex of the first non-singleton cell
// is individualized in turn and the search recurses. Every discrete coloring
// reached is a candidate labeling; the one whose relabeled edge list is
// lexicographically smallest wins. Leaves with equal edge lists expose
// automorphisms, which prune sibling branches lying in a common orbit.

#include "turan/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace turan {

namespace {

using Coloring = std::vector<int>;
using Code = std::vector<Triple>;

class Canonizer {
 public:
  explicit Canonizer(const Hypergraph3& g) : g_(g), n_(g.order()), incident_(static_cast<std::size_t>(n_)) {
    for (const auto& e : g.edges()) {
      incident_[static_cast<std::size_t>(e[0])].push_back({e[1], e[2]});
      incident_[static_cast<std::size_t>(e[1])].push_back({e[0], e[2]});
      incident_[static_cast<std::size_t>(e[2])].push_back({e[0], e[1]});
    }
  }

  std::pair<Coloring, Code> run(Coloring initial) {
    std::vector<Vertex> prefix;
    search(std::move(initial), prefix);
    return {best_labeling_, best_code_};
  }

 private:
  const Hypergraph3& g_;
  int n_;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> incident_;

  bool have_leaf_ = false;
  Coloring first_labeling_;
  Code first_code_;
  Coloring best_labeling_;
  Code best_code_;
  std::vector<std::vector<Vertex>> generators_;

  // Renumbers colors 0..k-1 by sorted signature; returns the class count.
  template <typename Sig>
  int rank_by(Coloring& color, const std::vector<Sig>& sig) const {
    std::vector<Vertex> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
    int classes = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0 && sig[static_cast<std::size_t>(order[i - 1])] != sig[static_cast<std::size_t>(order[i])]) ++classes;
      color[static_cast<std::size_t>(order[i])] = classes;
    }
    return n_ == 0 ? 0 : classes + 1;
  }

  int count_classes(const Coloring& color) const {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  }

  void refine(Coloring& color) const {
    int classes = count_classes(color);
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
    while (classes < n_) {
      for (Vertex v = 0; v < n_; ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        s.clear();
        s.push_back(color[static_cast<std::size_t>(v)]);
        const auto mark = s.size();
        for (auto [a, b] : incident_[static_cast<std::size_t>(v)]) {
          int ca = color[static_cast<std::size_t>(a)];
          int cb = color[static_cast<std::size_t>(b)];
          if (ca > cb) std::swap(ca, cb);
          s.push_back(ca * n_ + cb);
        }
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
      }
      int next = rank_by(color, sig);
      if (next == classes) break;
      classes = next;
    }
  }

  Code code_of(const Coloring& labeling) const {
    Code code;
    code.reserve(g_.size());
    for (const auto& e : g_.edges())
      code.push_back(make_triple(labeling[static_cast<std::size_t>(e[0])], labeling[static_cast<std::size_t>(e[1])],
                                 labeling[static_cast<std::size_t>(e[2])]));
    std::sort(code.begin(), code.end());
    return code;
  }

  void record_automorphism(const Coloring& reference, const Coloring& labeling) {
    std::vector<Vertex> inverse(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) inverse[static_cast<std::size_t>(reference[static_cast<std::size_t>(v)])] = v;
    std::vector<Vertex> gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (Vertex v = 0; v < n_; ++v) {
      gamma[static_cast<std::size_t>(v)] = inverse[static_cast<std::size_t>(labeling[static_cast<std::size_t>(v)])];
      identity = identity && gamma[static_cast<std::size_t>(v)] == v;
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  void leaf(const Coloring& labeling) {
    Code code = code_of(labeling);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_labeling_ = best_labeling_ = labeling;
      first_code_ = best_code_ = code;
      return;
    }
    if (code == first_code_) {
      record_automorphism(first_labeling_, labeling);
    } else if (code == best_code_) {
      record_automorphism(best_labeling_, labeling);
    } else if (code < best_code_) {
      best_code_ = std::move(code);
      best_labeling_ = labeling;
    }
  }

  // Orbit representative of w under the generators fixing every prefix vertex.
  Vertex orbit_root(std::vector<Vertex>& parent, Vertex v) const {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  }

  bool same_orbit(const std::vector<Vertex>& prefix, Vertex a, Vertex b) const {
    std::vector<Vertex> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : generators_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](Vertex p) { return gamma[static_cast<std::size_t>(p)] == p; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        Vertex x = orbit_root(parent, v);
        Vertex y = orbit_root(parent, gamma[static_cast<std::size_t>(v)]);
        if (x != y) parent[static_cast<std::size_t>(x)] = y;
      }
    }
    return orbit_root(parent, a) == orbit_root(parent, b);
  }

  void search(Coloring color, std::vector<Vertex>& prefix) {
    refine(color);
    const int classes = count_classes(color);
    if (classes == n_) {
      leaf(color);
      return;
    }
    std::vector<int> cell_size(static_cast<std::size_t>(classes), 0);
    for (int c : color) ++cell_size[static_cast<std::size_t>(c)];
    int target = 0;
    while (cell_size[static_cast<std::size_t>(target)] < 2) ++target;

    std::vector<Vertex> explored;
    for (Vertex w = 0; w < n_; ++w) {
      if (color[static_cast<std::size_t>(w)] != target) continue;
      bool redundant = std::any_of(explored.begin(), explored.end(),
                                   [&](Vertex u) { return same_orbit(prefix, u, w); });
      if (redundant) continue;
      std::vector<int> sig(static_cast<std::size_t>(n_));
      for (Vertex v = 0; v < n_; ++v) {
        int c = color[static_cast<std::size_t>(v)];
        sig[static_cast<std::size_t>(v)] = 2 * c + ((c == target && v != w) ? 1 : 0);
      }
      Coloring child(static_cast<std::size_t>(n_));
      rank_by(child, sig);
      prefix.push_back(w);
      search(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(w);
    }
  }
};

CanonicalForm canonize(const Hypergraph3& graph, std::span<const Vertex> roots) {
  const int n = graph.order();
  if (n > 255) throw std::invalid_argument("canonical form supports at most 255 vertices");
  const int s = static_cast<int>(roots.size());
  Coloring initial(static_cast<std::size_t>(n), s);
  for (int i = 0; i < s; ++i) {
    Vertex r = roots[static_cast<std::size_t>(i)];
    if (r < 0 || r >= n || initial[static_cast<std::size_t>(r)] != s)
      throw std::invalid_argument("roots must be distinct vertices of the graph");
    initial[static_cast<std::size_t>(r)] = i;
  }
  Canonizer canonizer(graph);
  auto [labeling, code] = canonizer.run(std::move(initial));

  CanonicalForm result;
  result.graph = Hypergraph3::from_edges(n, code);
  result.labeling = std::move(labeling);
  result.key.reserve(2 + 3 * code.size());
  result.key.push_back(static_cast<char>(n));
  result.key.push_back(static_cast<char>(s));
  for (const auto& t : code)
    for (Vertex v : t) result.key.push_back(static_cast<char>(v));
  return result;
}

}  // namespace

CanonicalForm canonical_form(const Hypergraph3& graph) { return canonize(graph, {}); }

CanonicalForm canonical_form_rooted(const Hypergraph3& graph, std::span<const Vertex> roots) {
  return canonize(graph, roots);
}

Hypergraph3 graph_from_key(std::string_view key) {
  if (key.size() < 2 || (key.size() - 2) % 3 != 0) throw std::invalid_argument("malformed canonical key");
  const int n = static_cast<unsigned char>(key[0]);
  std::vector<Triple> edges;
  for (std::size_t i = 2; i < key.size(); i += 3)
    edges.push_back({static_cast<unsigned char>(key[i]), static_cast<unsigned char>(key[i + 1]),
                     static_cast<unsigned char>(key[i + 2])});
  return Hypergraph3::from_edges(n, edges);
}

}  // namespace turan

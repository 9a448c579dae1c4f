#include "turan/hypergraph.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace turan {

namespace detail {
struct KeyCache {
  std::once_flag once;
  std::string key;
};
}  // namespace detail

namespace {

// Above this order the membership bitset would get large; fall back to
// binary search over the sorted edge list.
constexpr int kBitsetLimit = 256;

}  // namespace

Triple make_triple(Vertex a, Vertex b, Vertex c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::uint64_t triple_count(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

std::uint64_t triple_rank(const Triple& t) {
  const auto a = static_cast<std::uint64_t>(t[0]);
  const auto b = static_cast<std::uint64_t>(t[1]);
  const auto c = static_cast<std::uint64_t>(t[2]);
  return triple_count(c) + (b * (b - 1)) / 2 + a;
}

Hypergraph3::Hypergraph3() : Hypergraph3(0) {}

Hypergraph3::Hypergraph3(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  finalize();
}

Hypergraph3 Hypergraph3::from_edges(int n, std::initializer_list<Triple> triples) {
  return from_edges(n, std::span<const Triple>(triples.begin(), triples.size()));
}

Hypergraph3 Hypergraph3::from_edges(int n, std::span<const Triple> triples) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Hypergraph3 g;
  g.n_ = n;
  g.edges_.reserve(triples.size());
  for (const auto& raw : triples) {
    for (Vertex v : raw)
      if (v < 0 || v >= n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    Triple t = make_triple(raw[0], raw[1], raw[2]);
    if (t[0] == t[1] || t[1] == t[2])
      throw std::invalid_argument("triple repeats vertex " + std::to_string(t[1]));
    g.edges_.push_back(t);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.finalize();
  return g;
}

void Hypergraph3::finalize() {
  key_ = std::make_shared<detail::KeyCache>();
  bits_.clear();
  if (n_ <= kBitsetLimit) {
    bits_.assign((triple_count(static_cast<std::uint64_t>(n_)) + 63) / 64, 0);
    for (const auto& e : edges_) {
      auto r = triple_rank(e);
      bits_[r / 64] |= std::uint64_t{1} << (r % 64);
    }
  }
}

bool Hypergraph3::has_edge(Vertex a, Vertex b, Vertex c) const {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  if (a == b || b == c || a < 0 || c >= n_) return false;
  if (n_ <= kBitsetLimit) {
    auto r = triple_rank({a, b, c});
    return (bits_[r / 64] >> (r % 64)) & 1U;
  }
  return std::binary_search(edges_.begin(), edges_.end(), Triple{a, b, c});
}

std::vector<int> Hypergraph3::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_)
    for (Vertex v : e) ++deg[static_cast<std::size_t>(v)];
  return deg;
}

Hypergraph3 Hypergraph3::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> position(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    if (v < 0 || v >= n_) throw std::invalid_argument("induced: vertex out of range");
    if (position[static_cast<std::size_t>(v)] != -1) throw std::invalid_argument("induced: repeated vertex");
    position[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
  }
  std::vector<Triple> kept;
  const auto k = vertices.size();
  if (k >= 3 && k * k * k < edges_.size() * 6) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        for (std::size_t l = j + 1; l < k; ++l)
          if (has_edge(vertices[i], vertices[j], vertices[l]))
            kept.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), static_cast<Vertex>(l)});
  } else {
    for (const auto& e : edges_) {
      auto a = position[static_cast<std::size_t>(e[0])];
      auto b = position[static_cast<std::size_t>(e[1])];
      auto c = position[static_cast<std::size_t>(e[2])];
      if (a >= 0 && b >= 0 && c >= 0) kept.push_back({a, b, c});
    }
  }
  return from_edges(static_cast<int>(k), kept);
}

Hypergraph3 Hypergraph3::relabel(std::span<const Vertex> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (Vertex v : perm) {
    if (v < 0 || v >= n_ || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("relabel: not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Triple> mapped;
  mapped.reserve(edges_.size());
  for (const auto& e : edges_)
    mapped.push_back({perm[static_cast<std::size_t>(e[0])], perm[static_cast<std::size_t>(e[1])],
                      perm[static_cast<std::size_t>(e[2])]});
  return from_edges(n_, mapped);
}

const std::string& Hypergraph3::canon_key() const {
  std::call_once(key_->once, [this] { key_->key = canonical_form(*this).key; });
  return key_->key;
}

Hypergraph3 complement(const Hypergraph3& graph) {
  const int n = graph.order();
  std::vector<Triple> missing;
  for (Vertex c = 2; c < n; ++c)
    for (Vertex b = 1; b < c; ++b)
      for (Vertex a = 0; a < b; ++a)
        if (!graph.has_edge(a, b, c)) missing.push_back({a, b, c});
  return Hypergraph3::from_edges(n, missing);
}

Hypergraph3 blow_up(const Hypergraph3& graph, std::span<const int> sizes) {
  if (sizes.size() != static_cast<std::size_t>(graph.order()))
    throw std::invalid_argument("blow_up: need one class size per vertex");
  std::vector<int> start(sizes.size() + 1, 0);
  for (std::size_t v = 0; v < sizes.size(); ++v) {
    if (sizes[v] <= 0) throw std::invalid_argument("blow_up: class sizes must be positive");
    start[v + 1] = start[v] + sizes[v];
  }
  std::vector<Triple> edges;
  for (const auto& e : graph.edges()) {
    auto [a, b, c] = e;
    for (int x = start[a]; x < start[a + 1]; ++x)
      for (int y = start[b]; y < start[b + 1]; ++y)
        for (int z = start[c]; z < start[c + 1]; ++z) edges.push_back({x, y, z});
  }
  return Hypergraph3::from_edges(start.back(), edges);
}

DegreeStats degree_stats(const Hypergraph3& graph) {
  auto deg = graph.degrees();
  if (deg.empty()) return {};
  auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
  return {*lo, *hi, *hi - *lo};
}

Hypergraph3 single_edge() { return Hypergraph3::from_edges(3, {{0, 1, 2}}); }

Hypergraph3 named_graph(NamedGraph which) {
  switch (which) {
    case NamedGraph::C4_3:
    case NamedGraph::K4_3:
      return Hypergraph3::from_edges(4, {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}, {0, 1, 3}});
    case NamedGraph::F5:
      return Hypergraph3::from_edges(5, {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}});
    case NamedGraph::F5_BAR:
      return complement(named_graph(NamedGraph::F5));
    case NamedGraph::F32:
      return Hypergraph3::from_edges(5, {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}, {2, 3, 4}});
    case NamedGraph::F32_BAR:
      return complement(named_graph(NamedGraph::F32));
    case NamedGraph::C5_3:
      return Hypergraph3::from_edges(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}});
    case NamedGraph::C5_3_MINUS:
      return Hypergraph3::from_edges(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}});
  }
  throw std::invalid_argument("unknown named graph");
}

const std::vector<NamedGraph>& all_named_graphs() {
  static const std::vector<NamedGraph> all{NamedGraph::C4_3, NamedGraph::K4_3,    NamedGraph::F5,
                                           NamedGraph::F5_BAR, NamedGraph::F32,   NamedGraph::F32_BAR,
                                           NamedGraph::C5_3, NamedGraph::C5_3_MINUS};
  return all;
}

std::string_view name_of(NamedGraph which) {
  switch (which) {
    case NamedGraph::C4_3: return "C4_3";
    case NamedGraph::K4_3: return "K4_3";
    case NamedGraph::F5: return "F5";
    case NamedGraph::F5_BAR: return "F5_BAR";
    case NamedGraph::F32: return "F32";
    case NamedGraph::F32_BAR: return "F32_BAR";
    case NamedGraph::C5_3: return "C5_3";
    case NamedGraph::C5_3_MINUS: return "C5_3_MINUS";
  }
  return "?";
}

NamedGraph parse_named_graph(std::string_view name) {
  for (auto g : all_named_graphs())
    if (name_of(g) == name) return g;
  throw std::invalid_argument("unknown graph name '" + std::string(name) + "'");
}

std::string to_hex(std::string_view bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::string from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex string");
  std::string out;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  return out;
}

}  // namespace turan

#include "turan/family.hpp"

#include "turan/combinatorics.hpp"
#include "turan/graph_io.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace turan {

namespace {

std::string member_token(const FamilyMember& m) {
  std::string prefix = m.induced ? "induced:" : "";
  for (auto g : all_named_graphs())
    if (named_graph(g).canon_key() == m.graph.canon_key()) return prefix + std::string(name_of(g));
  return prefix + "#" + to_hex(m.graph.canon_key());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Family::Family(std::vector<FamilyMember> members) : members_(std::move(members)) {}

Family Family::parse(std::string_view spec) {
  spec = trim(spec);
  std::vector<FamilyMember> members;
  if (spec.empty() || spec == "none") return Family{};
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto comma = spec.find(',', start);
    auto token = trim(spec.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    start = comma == std::string_view::npos ? spec.size() + 1 : comma + 1;
    if (token.empty()) throw std::invalid_argument("empty family member in '" + std::string(spec) + "'");
    FamilyMember member;
    constexpr std::string_view induced_prefix = "induced:";
    if (token.starts_with(induced_prefix)) {
      member.induced = true;
      token.remove_prefix(induced_prefix.size());
    }
    if (token.starts_with('#')) {
      member.graph = graph_from_key(from_hex(token.substr(1)));
    } else if (token.find('/') != std::string_view::npos || token.find('.') != std::string_view::npos) {
      member.graph = read_graph_file(std::string(token));
    } else {
      member.graph = named_graph(parse_named_graph(token));
    }
    members.push_back(std::move(member));
  }
  return Family(std::move(members));
}

std::string Family::key() const {
  std::vector<std::string> tokens;
  for (const auto& m : members_) tokens.push_back(member_token(m));
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  if (tokens.empty()) return "none";
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ',';
    out += t;
  }
  return out;
}

int Family::max_order() const {
  int k = 0;
  for (const auto& m : members_) k = std::max(k, m.graph.order());
  return k;
}

bool is_family_free(const Hypergraph3& host, const Family& family) {
  for (const auto& m : family.members()) {
    if (m.graph.order() > host.order()) continue;
    if (m.induced ? contains_induced(host, m.graph) : contains_sub(host, m.graph)) return false;
  }
  return true;
}

bool is_family_free(const Hypergraph3& host, std::span<const Hypergraph3> family, std::span<const bool> induced_flags) {
  if (family.size() != induced_flags.size()) throw std::invalid_argument("one induced flag per family member");
  std::vector<FamilyMember> members;
  for (std::size_t i = 0; i < family.size(); ++i) members.push_back({family[i], induced_flags[i]});
  return is_family_free(host, Family(std::move(members)));
}

bool is_free_of_subgraphs(const Hypergraph3& host, const Family& family, int max_order) {
  for (const auto& m : family.members()) {
    if (m.induced || m.graph.order() > max_order || m.graph.order() > host.order()) continue;
    if (contains_sub(host, m.graph)) return false;
  }
  return true;
}

PatternMatcher::PatternMatcher(const FamilyMember& m) : k_(m.graph.order()), induced_(m.induced) {
  if (k_ > 7) throw std::invalid_argument("subset scan supports members on at most 7 vertices");
  std::vector<Vertex> perm(static_cast<std::size_t>(k_));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::uint64_t mask = 0;
    for (const auto& e : m.graph.edges())
      mask |= std::uint64_t{1} << triple_rank(make_triple(perm[static_cast<std::size_t>(e[0])],
                                                          perm[static_cast<std::size_t>(e[1])],
                                                          perm[static_cast<std::size_t>(e[2])]));
    copies_.push_back(mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(copies_.begin(), copies_.end());
  copies_.erase(std::unique(copies_.begin(), copies_.end()), copies_.end());

  const auto triples = triple_count(static_cast<std::uint64_t>(k_));
  if (triples <= 20) {
    hit_.assign(std::size_t{1} << triples, false);
    for (std::uint64_t mask = 0; mask < hit_.size(); ++mask) {
      if (induced_) {
        hit_[mask] = std::binary_search(copies_.begin(), copies_.end(), mask);
      } else {
        hit_[mask] = std::any_of(copies_.begin(), copies_.end(), [&](std::uint64_t c) { return (mask & c) == c; });
      }
    }
  }
}

bool PatternMatcher::matches(std::uint64_t mask) const {
  if (!hit_.empty()) return hit_[mask];
  if (induced_) return std::binary_search(copies_.begin(), copies_.end(), mask);
  return std::any_of(copies_.begin(), copies_.end(), [&](std::uint64_t c) { return (mask & c) == c; });
}

ScanReport subset_scan(const Hypergraph3& host, const Family& family) {
  ScanReport report;
  std::vector<PatternMatcher> patterns;
  for (const auto& m : family.members()) patterns.emplace_back(m);

  std::vector<int> sizes;
  for (const auto& p : patterns) sizes.push_back(p.order());
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  for (int k : sizes) {
    if (k > host.order()) continue;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < patterns.size(); ++i)
      if (patterns[i].order() == k) active.push_back(i);
    for_each_subset(host.order(), k, [&](std::span<const int> subset) {
      ++report.subsets_scanned;
      std::uint64_t mask = 0;
      for (int c = 2; c < k; ++c)
        for (int b = 1; b < c; ++b)
          for (int a = 0; a < b; ++a)
            if (host.has_edge(subset[static_cast<std::size_t>(a)], subset[static_cast<std::size_t>(b)],
                              subset[static_cast<std::size_t>(c)]))
              mask |= std::uint64_t{1} << triple_rank({a, b, c});
      for (auto i : active) {
        if (patterns[i].matches(mask)) {
          report.free = false;
          report.member = static_cast<int>(i);
          report.witness.assign(subset.begin(), subset.end());
          return false;
        }
      }
      return true;
    });
    if (!report.free) break;
  }
  return report;
}

}  // namespace turan

#include "turan/density.hpp"

#include "turan/combinatorics.hpp"
#include "turan/parallel.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace turan {

Rational induced_density(const Hypergraph3& pattern, const Hypergraph3& host) {
  const int k = pattern.order();
  if (k > host.order()) throw std::invalid_argument("induced_density: pattern larger than host");
  const auto& key = pattern.canon_key();
  Integer hits = 0;
  for_each_subset(host.order(), k, [&](std::span<const int> subset) {
    if (host.induced(subset).canon_key() == key) ++hits;
    return true;
  });
  return ratio(hits, binomial(host.order(), k));
}

std::map<std::string, Integer> induced_counts(const Hypergraph3& host, int k) {
  std::map<std::string, Integer> counts;
  for_each_subset(host.order(), k, [&](std::span<const int> subset) {
    ++counts[host.induced(subset).canon_key()];
    return true;
  });
  return counts;
}

Rational edge_density(const Hypergraph3& graph) {
  if (graph.order() < 3) throw std::invalid_argument("edge_density: needs at least 3 vertices");
  return ratio(Integer(static_cast<unsigned long>(graph.size())), binomial(graph.order(), 3));
}

RationalMatrix pair_density_matrix(const FlagType& type, int flag_size, const std::vector<Flag>& flags,
                                   const Hypergraph3& target) {
  const int s = type.size();
  const int extra = flag_size - s;
  const int n = target.order();
  if (extra < 0 || 2 * flag_size - s > n) throw std::invalid_argument("pair_density_matrix: flags do not fit");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < flags.size(); ++i) index.emplace(flags[i].key, i);

  const std::size_t dim = flags.size();
  std::vector<Integer> counts(dim * dim);
  Integer root_maps = 0;

  std::vector<Vertex> roots(static_cast<std::size_t>(s));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<Vertex> rest;
  std::vector<Vertex> members;

  auto visit_root_map = [&] {
    ++root_maps;
    for (const auto& e : type.sigma.edges())
      if (!target.has_edge(roots[static_cast<std::size_t>(e[0])], roots[static_cast<std::size_t>(e[1])],
                           roots[static_cast<std::size_t>(e[2])]))
        return;
    if (target.induced(roots).size() != type.sigma.size()) return;

    rest.clear();
    for (Vertex v = 0; v < n; ++v)
      if (!used[static_cast<std::size_t>(v)]) rest.push_back(v);
    // Flag index of roots + each extra-subset of the remaining vertices.
    std::vector<std::vector<int>> subsets;
    std::vector<long> flag_of;
    const std::vector<Vertex> root_order(roots.begin(), roots.end());
    for_each_subset(static_cast<int>(rest.size()), extra, [&](std::span<const int> pick) {
      members = root_order;
      for (int p : pick) members.push_back(rest[static_cast<std::size_t>(p)]);
      auto sub = target.induced(members);
      std::vector<Vertex> local_roots(static_cast<std::size_t>(s));
      std::iota(local_roots.begin(), local_roots.end(), 0);
      auto it = index.find(flag_key(sub, local_roots));
      subsets.emplace_back(pick.begin(), pick.end());
      flag_of.push_back(it == index.end() ? -1 : static_cast<long>(it->second));
      return true;
    });
    for (std::size_t a = 0; a < subsets.size(); ++a) {
      if (flag_of[a] < 0) continue;
      for (std::size_t b = 0; b < subsets.size(); ++b) {
        if (flag_of[b] < 0) continue;
        bool disjoint = true;
        for (int x : subsets[a])
          if (std::find(subsets[b].begin(), subsets[b].end(), x) != subsets[b].end()) {
            disjoint = false;
            break;
          }
        if (disjoint) ++counts[static_cast<std::size_t>(flag_of[a]) * dim + static_cast<std::size_t>(flag_of[b])];
      }
    }
  };

  // Enumerate injective root maps depth-first.
  auto place = [&](auto&& self, int depth) -> void {
    if (depth == s) {
      visit_root_map();
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      roots[static_cast<std::size_t>(depth)] = v;
      self(self, depth + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  place(place, 0);

  const Integer denominator = root_maps * binomial(n - s, extra) * binomial(n - s - extra, extra);
  RationalMatrix matrix(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      matrix(i, j) = Rational(counts[i * dim + j], denominator);
      matrix(i, j).canonicalize();
    }
  return matrix;
}

namespace {

std::mutex g_cache_mutex;
std::map<std::string, PairDensityTable> g_cache;
std::string g_cache_dir;

std::string cache_id(const FlagType& type, int flag_size, int target_size, const Family& family) {
  return to_hex(type.key()) + "_" + std::to_string(flag_size) + "_" + std::to_string(target_size) + "_" + family.key();
}

std::string cache_file_name(const std::string& id) {
  // Family keys may contain characters unfriendly to file systems.
  std::string name;
  for (char c : id) name.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ? c : '-');
  return name + ".table";
}

}  // namespace

void set_table_cache_dir(std::string dir) {
  std::lock_guard lock(g_cache_mutex);
  g_cache_dir = std::move(dir);
}

PairDensityTable pair_density_table(const FlagType& type, int flag_size, int target_size, const Family& family) {
  if (2 * flag_size - type.size() > target_size || flag_size < type.size())
    throw std::invalid_argument("pair_density_table: need type size <= flag size and 2*flag size - type size <= target size");

  const auto id = cache_id(type, flag_size, target_size, family);
  std::string dir;
  {
    std::lock_guard lock(g_cache_mutex);
    if (auto it = g_cache.find(id); it != g_cache.end()) return it->second;
    dir = g_cache_dir;
  }
  const auto family_key = family.key();
  if (!dir.empty()) {
    std::ifstream in(std::filesystem::path(dir) / cache_file_name(id));
    if (in) {
      try {
        auto table = read_table(in);
        if (table.type == type && table.flag_size == flag_size && table.target_size == target_size &&
            table.family_key == family_key) {
          std::lock_guard lock(g_cache_mutex);
          return g_cache.try_emplace(id, std::move(table)).first->second;
        }
      } catch (const std::exception&) {
        // Unreadable cache entries are recomputed and overwritten.
      }
    }
  }

  PairDensityTable table;
  table.type = type;
  table.flag_size = flag_size;
  table.target_size = target_size;
  table.family_key = family_key;
  table.flags = enumerate_flags(type, flag_size, family);
  table.targets = enumerate_free(target_size, family, {.allow_large = true});
  table.matrices.resize(table.targets.size());
  parallel_for(table.targets.size(), [&](std::size_t t) {
    table.matrices[t] = pair_density_matrix(type, flag_size, table.flags, table.targets[t]);
  });

  if (!dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(std::filesystem::path(dir) / cache_file_name(id));
    if (out) write_table(out, table);
  }
  std::lock_guard lock(g_cache_mutex);
  return g_cache.try_emplace(id, std::move(table)).first->second;
}

void write_table(std::ostream& out, const PairDensityTable& table) {
  out << "type " << to_hex(table.type.key()) << '\n';
  out << "flag_size " << table.flag_size << '\n';
  out << "target_size " << table.target_size << '\n';
  out << "family " << table.family_key << '\n';
  for (std::size_t i = 0; i < table.flags.size(); ++i) out << "flag " << i << ' ' << to_hex(table.flags[i].key) << '\n';
  for (std::size_t i = 0; i < table.targets.size(); ++i)
    out << "target " << i << ' ' << to_hex(table.targets[i].canon_key()) << '\n';
  for (std::size_t t = 0; t < table.matrices.size(); ++t) {
    const auto& m = table.matrices[t];
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = i; j < m.dim(); ++j)
        if (sgn(m(i, j)) != 0) out << t << ' ' << i << ' ' << j << ' ' << to_string(m(i, j)) << '\n';
  }
}

PairDensityTable read_table(std::istream& in) {
  PairDensityTable table;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("density table line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head) || head.starts_with('#')) continue;
    if (head == "type") {
      std::string hex;
      fields >> hex;
      table.type = FlagType{graph_from_key(from_hex(hex))};
    } else if (head == "flag_size") {
      fields >> table.flag_size;
    } else if (head == "target_size") {
      fields >> table.target_size;
    } else if (head == "family") {
      fields >> table.family_key;
    } else if (head == "flag") {
      std::size_t idx = 0;
      std::string hex;
      if (!(fields >> idx >> hex) || idx != table.flags.size()) fail("flags must be listed in order");
      auto key = from_hex(hex);
      table.flags.push_back({graph_from_key(key), table.type, key});
    } else if (head == "target") {
      std::size_t idx = 0;
      std::string hex;
      if (!(fields >> idx >> hex) || idx != table.targets.size()) fail("targets must be listed in order");
      table.targets.push_back(graph_from_key(from_hex(hex)));
    } else {
      if (table.matrices.empty()) table.matrices.assign(table.targets.size(), RationalMatrix(table.flags.size()));
      std::size_t t = 0, i = 0, j = 0;
      std::string value;
      try {
        t = std::stoul(head);
      } catch (const std::exception&) {
        fail("unknown record '" + head + "'");
      }
      if (!(fields >> i >> j >> value) || t >= table.matrices.size() || i > j || j >= table.flags.size())
        fail("bad entry");
      auto v = parse_rational(value);
      table.matrices[t](i, j) = v;
      table.matrices[t](j, i) = v;
    }
  }
  if (table.matrices.empty()) table.matrices.assign(table.targets.size(), RationalMatrix(table.flags.size()));
  return table;
}

}  // namespace turan

#include "turan/certificate.hpp"

#include "turan/density.hpp"
#include "turan/family.hpp"
#include "turan/sdp.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace turan {

bool psd_check(const RationalMatrix& q) {
  if (!q.is_symmetric()) throw std::invalid_argument("psd_check: matrix is not symmetric");
  RationalMatrix a = q;
  const std::size_t n = a.dim();
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // Largest remaining diagonal entry as pivot.
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && (pivot == n || a(i, i) > a(pivot, pivot))) pivot = i;
    const Rational d = a(pivot, pivot);
    if (sgn(d) < 0) return false;
    if (sgn(d) == 0) {
      // Remaining diagonal is zero: PSD only if the remaining block vanishes.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && sgn(a(i, j)) != 0) return false;
      return true;
    }
    done[pivot] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(a(i, pivot)) == 0) continue;
      const Rational l = a(i, pivot) / d;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) a(i, j) -= l * a(pivot, j);
    }
  }
  return true;
}

Verdict verify(const Certificate& cert) {
  const Family family = Family::parse(cert.family_key);
  const auto graphs = enumerate_free(cert.m, family, {.allow_large = true});

  std::vector<PairDensityTable> tables;
  for (const auto& block : cert.blocks) {
    auto table = pair_density_table(block.type, block.flag_size, cert.m, family);
    if (table.flags.size() != block.q.dim())
      throw std::invalid_argument("block dimension " + std::to_string(block.q.dim()) + " does not match " +
                                  std::to_string(table.flags.size()) + " flags");
    tables.push_back(std::move(table));
  }
  for (const auto& [index, value] : cert.slacks)
    if (index >= graphs.size())
      throw std::invalid_argument("slack index " + std::to_string(index) + " exceeds " + std::to_string(graphs.size()) +
                                  " admissible graphs");

  Verdict verdict;
  for (std::size_t b = 0; b < cert.blocks.size(); ++b) {
    if (!cert.blocks[b].q.is_symmetric() || !psd_check(cert.blocks[b].q)) {
      verdict.kind = Verdict::Kind::NotPsd;
      verdict.block = static_cast<int>(b);
      verdict.reason = "psd: block " + std::to_string(b) + " is not positive semidefinite";
      return verdict;
    }
  }

  const auto edge = single_edge();
  verdict.residuals.resize(graphs.size());
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    Rational residual = cert.bound - induced_density(edge, graphs[g]);
    for (std::size_t b = 0; b < tables.size(); ++b) residual -= inner(cert.blocks[b].q, tables[b].matrices[g]);
    verdict.residuals[g] = residual;
  }
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    const auto& residual = verdict.residuals[g];
    if (sgn(residual) < 0) {
      verdict.kind = Verdict::Kind::NegativeSlack;
      verdict.graph = static_cast<int>(g);
      verdict.reason = "slack: graph " + std::to_string(g) + " (" + std::to_string(graphs[g].size()) +
                       " edges) needs " + to_string(residual) + " < 0";
      return verdict;
    }
    if (auto it = cert.slacks.find(g); it != cert.slacks.end()) {
      if (sgn(it->second) < 0 || it->second > residual) {
        verdict.kind = Verdict::Kind::BadCoefficient;
        verdict.graph = static_cast<int>(g);
        verdict.reason = "coefficient: c_" + std::to_string(g) + " = " + to_string(it->second) +
                         " outside [0, " + to_string(residual) + "]";
        return verdict;
      }
    }
  }
  verdict.reason = "verified";
  return verdict;
}

Certificate lp_certificate(const SdpModel& model) {
  Certificate cert;
  cert.bound = lp_bound(model);
  cert.family_key = model.family_key;
  cert.m = model.m;
  for (std::size_t g = 0; g < model.objective.size(); ++g) cert.slacks[g] = cert.bound - model.objective[g];
  return cert;
}

void write_certificate(std::ostream& out, const Certificate& cert) {
  out << "bound " << to_string(cert.bound) << '\n';
  out << "family " << cert.family_key << '\n';
  out << "m " << cert.m << '\n';
  for (const auto& block : cert.blocks) {
    out << "type " << to_hex(block.type.key()) << " dim " << block.q.dim() << " flags " << block.flag_size << '\n';
    for (std::size_t i = 0; i < block.q.dim(); ++i) {
      for (std::size_t j = i; j < block.q.dim(); ++j) out << (j > i ? " " : "") << to_string(block.q(i, j));
      out << '\n';
    }
  }
  for (const auto& [index, value] : cert.slacks) out << "slack " << index << ' ' << to_string(value) << '\n';
}

Certificate read_certificate(std::istream& in) {
  Certificate cert;
  bool have_bound = false, have_family = false, have_m = false;
  std::vector<std::string> tokens;
  {
    std::string line;
    while (std::getline(in, line)) {
      // Whole-line comments only: family keys may contain `#<hex>` members.
      if (auto first = line.find_first_not_of(" \t"); first != std::string::npos && line[first] == '#') continue;
      std::istringstream fields(line);
      std::string t;
      while (fields >> t) tokens.push_back(t);
    }
  }
  auto need = [&](std::size_t& pos) -> const std::string& {
    if (pos >= tokens.size()) throw std::runtime_error("certificate: unexpected end of input");
    return tokens[pos++];
  };
  auto need_int = [&](std::size_t& pos) {
    const auto& t = need(pos);
    try {
      std::size_t used = 0;
      long v = std::stol(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      throw std::runtime_error("certificate: expected an integer, got '" + t + "'");
    }
  };

  std::size_t pos = 0;
  while (pos < tokens.size()) {
    const std::string head = need(pos);
    if (head == "bound") {
      cert.bound = parse_rational(need(pos));
      have_bound = true;
    } else if (head == "family") {
      cert.family_key = need(pos);
      have_family = true;
    } else if (head == "m") {
      cert.m = static_cast<int>(need_int(pos));
      have_m = true;
    } else if (head == "type") {
      if (!have_m) throw std::runtime_error("certificate: `m` must precede blocks");
      CertificateBlock block;
      block.type = FlagType{graph_from_key(from_hex(need(pos)))};
      if (need(pos) != "dim") throw std::runtime_error("certificate: expected `dim` after type key");
      long dim = need_int(pos);
      if (dim < 0) throw std::runtime_error("certificate: negative block dimension");
      block.flag_size = (cert.m + block.type.size()) / 2;
      if (pos < tokens.size() && tokens[pos] == "flags") {
        ++pos;
        block.flag_size = static_cast<int>(need_int(pos));
      }
      block.q = RationalMatrix(static_cast<std::size_t>(dim));
      for (std::size_t i = 0; i < block.q.dim(); ++i)
        for (std::size_t j = i; j < block.q.dim(); ++j) {
          auto v = parse_rational(need(pos));
          block.q(i, j) = v;
          block.q(j, i) = v;
        }
      cert.blocks.push_back(std::move(block));
    } else if (head == "slack") {
      long index = need_int(pos);
      if (index < 0) throw std::runtime_error("certificate: negative slack index");
      cert.slacks[static_cast<std::size_t>(index)] = parse_rational(need(pos));
    } else {
      throw std::runtime_error("certificate: unknown record '" + head + "'");
    }
  }
  if (!have_bound || !have_family || !have_m) throw std::runtime_error("certificate: missing bound, family or m");
  return cert;
}

Certificate read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open certificate '" + path + "'");
  return read_certificate(in);
}

}  // namespace turan

#include "turan/sdp.hpp"

#include "turan/certificate.hpp"
#include "turan/error.hpp"
#include "turan/parallel.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace turan {

std::vector<TypeSpec> default_types(int m, const Family& family) {
  std::vector<TypeSpec> types;
  for (int s = m % 2; s <= m - 2; s += 2) {
    for (auto& sigma : enumerate_free(s, family, {.allow_large = true}))
      types.push_back({FlagType{sigma}, (m + s) / 2});
  }
  return types;
}

SdpModel assemble(int m, const Family& family, std::span<const TypeSpec> types) {
  if (m < 3) throw std::invalid_argument("assemble: target size must be at least 3");
  for (const auto& t : types)
    if (t.flag_size < t.type.size() || 2 * t.flag_size - t.type.size() > m)
      throw std::invalid_argument("assemble: flags of size " + std::to_string(t.flag_size) + " over a type of size " +
                                  std::to_string(t.type.size()) + " do not fit twice into " + std::to_string(m) +
                                  " vertices");

  SdpModel model;
  model.m = m;
  model.family_key = family.key();
  model.graphs = enumerate_free(m, family, {.allow_large = true});
  if (model.graphs.empty()) throw DomainError("the family excludes every graph on " + std::to_string(m) + " vertices");

  const auto edge = single_edge();
  model.objective.resize(model.graphs.size());
  parallel_for(model.graphs.size(), [&](std::size_t i) { model.objective[i] = induced_density(edge, model.graphs[i]); });

  for (const auto& t : types) model.blocks.push_back(pair_density_table(t.type, t.flag_size, m, family));
  return model;
}

Rational lp_bound(const SdpModel& model) {
  if (model.objective.empty()) throw DomainError("model has no constraints");
  return *std::max_element(model.objective.begin(), model.objective.end());
}

namespace {

std::string format_value(const Rational& v, NumberStyle style) {
  if (style == NumberStyle::Exact) return to_string(v);
  return to_decimal(v, 20);
}

}  // namespace

void emit(const SdpModel& model, std::ostream& out, NumberStyle style) {
  const std::size_t constraints = model.graphs.size();
  const std::size_t psd_blocks = model.blocks.size();
  const std::size_t slack_block = psd_blocks + 1;  // 1-based block numbers
  const std::size_t bound_block = psd_blocks + 2;

  out << "* turan-sdp 1\n";
  out << "* family " << model.family_key << '\n';
  out << "* m " << model.m << '\n';
  for (std::size_t i = 0; i < constraints; ++i) out << "* graph " << i << ' ' << to_hex(model.graphs[i].canon_key()) << '\n';
  for (std::size_t b = 0; b < psd_blocks; ++b) {
    const auto& block = model.blocks[b];
    out << "* type " << b << ' ' << to_hex(block.type.key()) << " flags " << block.flag_size << '\n';
    for (std::size_t f = 0; f < block.flags.size(); ++f)
      out << "* flag " << b << ' ' << f << ' ' << to_hex(block.flags[f].key) << '\n';
  }

  out << constraints << '\n' << psd_blocks + 2 << '\n';
  for (const auto& block : model.blocks) out << block.flags.size() << ' ';
  out << '-' << constraints << " -1\n";
  for (std::size_t i = 0; i < constraints; ++i) out << (i ? " " : "") << format_value(model.objective[i], style);
  out << '\n';

  out << "0 " << bound_block << " 1 1 -1\n";
  for (std::size_t k = 0; k < constraints; ++k) {
    for (std::size_t b = 0; b < psd_blocks; ++b) {
      const auto& p = model.blocks[b].matrices[k];
      for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = i; j < p.dim(); ++j)
          if (sgn(p(i, j)) != 0)
            out << k + 1 << ' ' << b + 1 << ' ' << i + 1 << ' ' << j + 1 << ' ' << format_value(-p(i, j), style) << '\n';
    }
    out << k + 1 << ' ' << slack_block << ' ' << k + 1 << ' ' << k + 1 << " -1\n";
    out << k + 1 << ' ' << bound_block << " 1 1 1\n";
  }
}

void emit_file(const SdpModel& model, const std::string& path, NumberStyle style) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  emit(model, out, style);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

SdpModel parse_model(std::istream& in) {
  SdpModel model;
  struct PendingType {
    std::string key;
    int flag_size = 0;
    std::vector<std::string> flags;
  };
  std::vector<PendingType> types;
  std::vector<std::string> numeric;

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '*' || line[0] == '"') {
      std::istringstream fields(line.substr(1));
      std::string tag;
      fields >> tag;
      if (tag == "family") {
        fields >> model.family_key;
      } else if (tag == "m") {
        fields >> model.m;
      } else if (tag == "graph") {
        std::size_t idx = 0;
        std::string hex;
        fields >> idx >> hex;
        if (idx != model.graphs.size()) throw std::runtime_error("sdp file: graphs out of order");
        model.graphs.push_back(graph_from_key(from_hex(hex)));
      } else if (tag == "type") {
        std::size_t idx = 0;
        std::string hex, word;
        PendingType t;
        fields >> idx >> hex >> word >> t.flag_size;
        if (idx != types.size() || word != "flags") throw std::runtime_error("sdp file: malformed type line");
        t.key = from_hex(hex);
        types.push_back(std::move(t));
      } else if (tag == "flag") {
        std::size_t b = 0, idx = 0;
        std::string hex;
        fields >> b >> idx >> hex;
        if (b >= types.size() || idx != types[b].flags.size()) throw std::runtime_error("sdp file: flags out of order");
        types[b].flags.push_back(from_hex(hex));
      }
      continue;
    }
    numeric.push_back(line);
  }
  if (numeric.size() < 4) throw std::runtime_error("sdp file: missing header");
  if (model.family_key.empty()) throw std::runtime_error("sdp file: missing family metadata");

  std::size_t constraints = std::stoul(numeric[0]);
  std::size_t nblocks = std::stoul(numeric[1]);
  if (constraints != model.graphs.size() || nblocks != types.size() + 2)
    throw std::runtime_error("sdp file: header disagrees with metadata");
  {
    std::istringstream dims(numeric[2]);
    for (std::size_t b = 0; b < nblocks; ++b) {
      long d = 0;
      if (!(dims >> d)) throw std::runtime_error("sdp file: short block structure");
      long expected = b < types.size() ? static_cast<long>(types[b].flags.size())
                                       : (b == types.size() ? -static_cast<long>(constraints) : -1);
      if (d != expected) throw std::runtime_error("sdp file: block structure disagrees with metadata");
    }
  }
  {
    std::istringstream rhs(numeric[3]);
    std::string token;
    while (rhs >> token) model.objective.push_back(parse_rational(token));
    if (model.objective.size() != constraints) throw std::runtime_error("sdp file: wrong number of right-hand sides");
  }

  for (const auto& t : types) {
    PairDensityTable table;
    table.type = FlagType{graph_from_key(t.key)};
    table.flag_size = t.flag_size;
    table.target_size = model.m;
    table.family_key = model.family_key;
    for (const auto& key : t.flags) table.flags.push_back({graph_from_key(key), table.type, key});
    table.targets = model.graphs;
    table.matrices.assign(constraints, RationalMatrix(t.flags.size()));
    model.blocks.push_back(std::move(table));
  }

  for (std::size_t l = 4; l < numeric.size(); ++l) {
    std::istringstream fields(numeric[l]);
    std::size_t con = 0, blk = 0, i = 0, j = 0;
    std::string value;
    if (!(fields >> con >> blk >> i >> j >> value)) throw std::runtime_error("sdp file: malformed entry '" + numeric[l] + "'");
    if (con > constraints || blk == 0 || blk > nblocks || i == 0 || j < i)
      throw std::runtime_error("sdp file: entry out of range '" + numeric[l] + "'");
    if (blk <= types.size()) {
      if (con == 0) throw std::runtime_error("sdp file: objective entry in a PSD block");
      auto& p = model.blocks[blk - 1].matrices[con - 1];
      if (j > p.dim()) throw std::runtime_error("sdp file: entry index exceeds block dimension");
      const Rational v = -parse_rational(value);
      p(i - 1, j - 1) = v;
      p(j - 1, i - 1) = v;
    }
  }
  return model;
}

SdpModel parse_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_model(in);
}

Rational round_value(double value, const Integer& max_denominator) {
  if (max_denominator < 1) throw std::invalid_argument("round_value: denominator bound must be positive");
  Rational x(value);  // exact binary value of the double
  Integer h_prev2 = 0, h_prev = 1, k_prev2 = 1, k_prev = 0;
  while (true) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Integer h = a * h_prev + h_prev2;
    Integer k = a * k_prev + k_prev2;
    if (k > max_denominator) {
      // Largest admissible semiconvergent versus the last convergent.
      Integer t = (max_denominator - k_prev2) / k_prev;
      Rational semi(t * h_prev + h_prev2, t * k_prev + k_prev2);
      Rational conv(h_prev, k_prev);
      semi.canonicalize();
      conv.canonicalize();
      Rational original(value);
      return abs(semi - original) < abs(conv - original) ? semi : conv;
    }
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    Rational frac = x - Rational(a);
    if (sgn(frac) == 0) {
      Rational result(h, k);
      result.canonicalize();
      return result;
    }
    x = 1 / frac;
  }
}

std::vector<double> read_solution(std::istream& in) {
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::runtime_error("solution file: not a number '" + token + "'");
    }
  }
  return values;
}

Certificate round_solution(const SdpModel& model, std::span<const double> solution, const Integer& max_denominator) {
  std::size_t expected = model.graphs.size() + 1;
  for (const auto& b : model.blocks) expected += b.flags.size() * (b.flags.size() + 1) / 2;
  if (solution.size() != expected)
    throw std::invalid_argument("round_solution: expected " + std::to_string(expected) + " values, got " +
                                std::to_string(solution.size()));

  Certificate cert;
  cert.family_key = model.family_key;
  cert.m = model.m;
  std::size_t pos = 0;
  for (const auto& b : model.blocks) {
    CertificateBlock block{b.type, b.flag_size, RationalMatrix(b.flags.size())};
    for (std::size_t i = 0; i < block.q.dim(); ++i)
      for (std::size_t j = i; j < block.q.dim(); ++j) {
        auto v = round_value(solution[pos++], max_denominator);
        block.q(i, j) = v;
        block.q(j, i) = v;
      }
    cert.blocks.push_back(std::move(block));
  }
  std::vector<Rational> slack(model.graphs.size());
  for (auto& c : slack) {
    c = round_value(solution[pos++], max_denominator);
    if (sgn(c) < 0) c = 0;
  }
  cert.bound = round_value(solution[pos++], max_denominator);

  std::vector<Rational> required(model.graphs.size());
  for (std::size_t g = 0; g < model.graphs.size(); ++g) {
    required[g] = model.objective[g];
    for (std::size_t b = 0; b < model.blocks.size(); ++b) required[g] += inner(cert.blocks[b].q, model.blocks[b].matrices[g]);
    if (required[g] > cert.bound) cert.bound = required[g];
  }
  for (std::size_t g = 0; g < model.graphs.size(); ++g) {
    Rational room = cert.bound - required[g];
    cert.slacks[g] = slack[g] > room ? room : slack[g];
  }
  return cert;
}

}  // namespace turan

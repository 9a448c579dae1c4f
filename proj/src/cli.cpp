#include "turan/cli.hpp"

#include "turan/certificate.hpp"
#include "turan/constructions.hpp"
#include "turan/density.hpp"
#include "turan/enumerate.hpp"
#include "turan/error.hpp"
#include "turan/family.hpp"
#include "turan/graph_io.hpp"
#include "turan/parallel.hpp"
#include "turan/partition.hpp"
#include "turan/sdp.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace turan::cli {

namespace {

// Key/value report printed as TSV, or as aligned columns with --human.
class Report {
 public:
  explicit Report(bool human) : human_(human) {}

  template <typename T>
  void add(std::string key, const T& value) {
    std::ostringstream s;
    s << value;
    rows_.emplace_back(std::move(key), s.str());
  }
  void add(std::string key, const Rational& value) { rows_.emplace_back(std::move(key), to_string(value)); }
  void add(std::string key, bool value) { rows_.emplace_back(std::move(key), value ? "true" : "false"); }

  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) {
      if (human_)
        out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
      else
        out << k << '\t' << v << '\n';
    }
  }

 private:
  bool human_;
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string join(std::span<const int> values, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

// Built-in name, `#<hex canonical key>`, or a graph file.
Hypergraph3 load_graph(const std::string& token) {
  if (!token.empty() && token[0] == '#') return graph_from_key(from_hex(token.substr(1)));
  try {
    return named_graph(parse_named_graph(token));
  } catch (const std::invalid_argument&) {
  }
  std::ifstream probe(token);
  if (!probe) throw std::invalid_argument("'" + token + "' is neither a known graph name nor a readable file");
  return read_graph_file(token);
}

Integer parse_integer(const std::string& text) {
  Rational q = parse_rational(text);
  if (q.get_den() != 1) throw std::invalid_argument("expected an integer, got '" + text + "'");
  return q.get_num();
}

// Output stream for a path, stdout for "" or "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& get() { return *out_; }
  bool is_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

// Merges `key=value` lines of a --config file into the argument list as
// `--key value`; arguments already on the command line take precedence.
void merge_config(std::vector<std::string>& args, const CLI::App& app) {
  auto it = std::find(args.begin(), args.end(), "--config");
  if (it == args.end() || std::next(it) == args.end()) return;
  const std::string path = *std::next(it);

  const CLI::App* sub = nullptr;
  for (const auto& a : args)
    if (!a.empty() && a[0] != '-')
      if ((sub = const_cast<CLI::App&>(app).get_subcommand_no_throw(a)) != nullptr) break;

  CLI::ConfigINI reader;
  for (const auto& item : reader.from_file(path)) {
    const std::string flag = "--" + item.name;
    const bool present = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (present) continue;
    const CLI::Option* opt = sub ? sub->get_option_no_throw(flag) : nullptr;
    if (!opt) opt = app.get_option_no_throw(flag);
    if (!opt) throw CLI::ConfigError("unknown configuration key '" + item.name + "'");
    std::string value;
    for (std::size_t i = 0; i < item.inputs.size(); ++i) value += (i ? "," : "") + item.inputs[i];
    if (opt->get_expected_max() == 0) {
      if (value == "true" || value == "1" || value.empty()) args.push_back(flag);
    } else {
      args.push_back(flag);
      args.push_back(value);
    }
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Turan density toolkit for 3-uniform hypergraphs", "turan"};
  app.require_subcommand(1);
  app.fallthrough();

  int jobs = 0;
  bool human = false;
  std::string config_path;
  app.add_option("--jobs", jobs, "Worker threads (default: available parallelism)")->check(CLI::NonNegativeNumber);
  app.add_flag("--human", human, "Aligned columns instead of TSV");
  app.add_option("--config", config_path, "key=value file; command-line flags override it");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Family-free 3-graphs on m vertices up to isomorphism");
  int enum_m = 0;
  std::string enum_forbid = "none", enum_out;
  bool enum_large = false;
  enumerate->add_option("--m", enum_m, "Number of vertices")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--forbid", enum_forbid, "Forbidden family, e.g. C4_3,F5_BAR");
  enumerate->add_option("--out", enum_out, "Write graphs to this file instead of stdout");
  enumerate->add_flag("--allow-large", enum_large, "Permit m > 7");

  // construct
  auto* construct = app.add_subcommand("construct", "Extremal lower-bound constructions");
  std::string con_kind, con_emit;
  int con_n = 0;
  std::vector<int> con_sizes, con_splits;
  bool con_report = false;
  construct->add_option("--kind", con_kind, "brec | partite3 | k4blowup | semibipartite")
      ->required()
      ->check(CLI::IsMember({"brec", "partite3", "k4blowup", "semibipartite"}));
  construct->add_option("--n", con_n, "Vertex count (brec)");
  construct->add_option("--sizes", con_sizes, "Part sizes, comma separated")->delimiter(',');
  construct->add_option("--splits", con_splits, "B_rec first-part sizes (default: optimal)")->delimiter(',');
  construct->add_option("--emit", con_emit, "Write the graph to this file ('-' for stdout)");
  construct->add_flag("--report", con_report, "Print edge count, density and limit");

  // density
  auto* density = app.add_subcommand("density", "Induced densities and flag pair-density tables");
  std::string den_pattern, den_host, den_type, den_forbid = "none", den_out;
  int den_flag_size = 0, den_m = 0;
  density->add_option("--pattern", den_pattern, "Graph F in p(F,H)");
  density->add_option("--host", den_host, "Graph H in p(F,H)");
  density->add_option("--type", den_type, "Type graph for a pair-density table (roots in vertex order)");
  density->add_option("--flag-size", den_flag_size, "Flag order for the table");
  density->add_option("--m", den_m, "Target order for the table");
  density->add_option("--forbid", den_forbid, "Forbidden family for the table");
  density->add_option("--out", den_out, "Table output file ('-' for stdout)");

  // emit-sdp
  auto* emit_sdp = app.add_subcommand("emit-sdp", "Write the flag-algebra SDP in sparse SDPA form");
  int sdp_m = 0;
  std::string sdp_forbid = "none", sdp_types = "default", sdp_out, sdp_lp_cert;
  bool sdp_decimal = false;
  emit_sdp->add_option("--m", sdp_m, "Order of the admissible graphs")->required();
  emit_sdp->add_option("--forbid", sdp_forbid, "Forbidden family");
  emit_sdp->add_option("--types", sdp_types, "default | none")->check(CLI::IsMember({"default", "none"}));
  emit_sdp->add_option("--out", sdp_out, "Output file ('-' for stdout)");
  emit_sdp->add_flag("--decimal", sdp_decimal, "20-digit decimals instead of exact fractions");
  emit_sdp->add_option("--lp-certificate", sdp_lp_cert, "Also write the block-free LP certificate here");

  // round
  auto* round = app.add_subcommand("round", "Round a floating SDP solution to a rational certificate");
  std::string round_model, round_solution_path, round_bound = "4294967296", round_out;
  std::optional<double> round_value_arg;
  round->add_option("--model", round_model, "SDP file written by emit-sdp");
  round->add_option("--solution", round_solution_path, "Solver values, see the model file layout");
  round->add_option("--value", round_value_arg, "Round a single number instead");
  round->add_option("--denominator-bound", round_bound, "Largest admissible denominator");
  round->add_option("--out", round_out, "Certificate output file ('-' for stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a bound certificate in exact arithmetic");
  std::string cert_path;
  verify_cmd->add_option("--cert", cert_path, "Certificate file")->required();

  // partition
  auto* partition = app.add_subcommand("partition", "Max-cut partition and bad/missing diagnostics");
  std::string part_graph, part_xi = "0", part_delta, part_pi = to_decimal(two_sqrt3_minus_3(), 50);
  bool part_analyze = false;
  int part_restarts = 32;
  std::uint64_t part_seed = 0;
  std::vector<int> part_v1;
  partition->add_option("--graph", part_graph, "Graph file or name")->required();
  partition->add_flag("--analyze", part_analyze, "Bad/missing sets, lemma and degree diagnostics");
  partition->add_option("--xi", part_xi, "xi in the partition inequality");
  partition->add_option("--restarts", part_restarts, "Local-search restarts")->check(CLI::PositiveNumber);
  partition->add_option("--seed", part_seed, "Seed of the first restart");
  partition->add_option("--v1", part_v1, "Use this V1 instead of the local-search partition")->delimiter(',');
  partition->add_option("--delta", part_delta, "delta for the low-degree set");
  partition->add_option("--pi", part_pi, "Density value for the low-degree threshold");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    merge_config(args, app);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (jobs > 0) set_worker_count(jobs);
  if (const char* dir = std::getenv("TURAN_CACHE_DIR"); dir && *dir) set_table_cache_dir(dir);

  try {
    Report report(human);

    if (enumerate->parsed()) {
      const auto graphs = enumerate_free(enum_m, Family::parse(enum_forbid), {.allow_large = enum_large});
      Sink sink(enum_out, out);
      write_graphs(sink.get(), graphs);
      out << "count\t" << graphs.size() << '\n';
      return 0;
    }

    if (construct->parsed()) {
      ConstructionSpec spec;
      auto fixed_sizes = [&](std::size_t count) {
        if (con_sizes.size() != count)
          throw std::invalid_argument("--kind " + con_kind + " needs " + std::to_string(count) + " sizes");
      };
      if (con_kind == "brec") {
        if (con_n <= 0) throw std::invalid_argument("--kind brec needs --n");
        spec = BRecSpec{con_n, con_splits.empty() ? b_rec(con_n).splits : con_splits};
      } else if (con_kind == "partite3") {
        fixed_sizes(3);
        spec = Partite3Spec{{con_sizes[0], con_sizes[1], con_sizes[2]}};
      } else if (con_kind == "k4blowup") {
        fixed_sizes(4);
        spec = K4BlowupSpec{{con_sizes[0], con_sizes[1], con_sizes[2], con_sizes[3]}};
      } else {
        fixed_sizes(2);
        spec = SemiBipartiteSpec{con_sizes[0], con_sizes[1]};
      }
      if (!con_emit.empty()) {
        Sink sink(con_emit, out);
        write_graph(sink.get(), build(spec));
        if (!sink.is_file() && !con_report) return 0;
      }
      const auto r = density_report(spec);
      const int n = vertex_count(spec);
      report.add("kind", con_kind);
      report.add("n", n);
      if (const auto* brec = std::get_if<BRecSpec>(&spec)) {
        report.add("splits", join(brec->splits));
        report.add("b_rec", b_rec(n).value);
        if (!brec->splits.empty() && n > 0)
          report.add("first_split_ratio", to_decimal(ratio(brec->splits.front(), n), 50));
      }
      report.add("edges", r.edges.get_str());
      report.add("density", n >= 3 ? to_string(r.density) : std::string("NA"));
      report.add("density_decimal", n >= 3 ? to_decimal(r.density, 50) : std::string("NA"));
      report.add("limit", r.limit ? to_string(*r.limit) : r.limit_decimal);
      report.add("limit_decimal", r.limit_decimal);
      report.print(out);
      return 0;
    }

    if (density->parsed()) {
      if (!den_type.empty()) {
        const FlagType type{load_graph(den_type)};
        const int flag_size = den_flag_size > 0 ? den_flag_size : (den_m + type.size()) / 2;
        const auto table = pair_density_table(type, flag_size, den_m, Family::parse(den_forbid));
        Sink sink(den_out, out);
        write_table(sink.get(), table);
        if (sink.is_file()) {
          report.add("flags", table.flags.size());
          report.add("targets", table.targets.size());
          report.print(out);
        }
        return 0;
      }
      if (den_host.empty()) throw std::invalid_argument("density needs --host (with --pattern) or --type");
      const auto host = load_graph(den_host);
      if (den_pattern.empty()) {
        const auto d = edge_density(host);
        report.add("edge_density", d);
        report.add("edge_density_decimal", to_decimal(d, 50));
      } else {
        const auto d = induced_density(load_graph(den_pattern), host);
        report.add("density", d);
        report.add("density_decimal", to_decimal(d, 50));
      }
      report.print(out);
      return 0;
    }

    if (emit_sdp->parsed()) {
      const auto family = Family::parse(sdp_forbid);
      const auto types = sdp_types == "default" ? default_types(sdp_m, family) : std::vector<TypeSpec>{};
      const auto model = assemble(sdp_m, family, types);
      Sink sink(sdp_out, out);
      emit(model, sink.get(), sdp_decimal ? NumberStyle::Decimal : NumberStyle::Exact);
      if (!sdp_lp_cert.empty()) {
        Sink cert_sink(sdp_lp_cert, out);
        write_certificate(cert_sink.get(), lp_certificate(model));
      }
      if (sink.is_file()) {
        std::vector<int> dims;
        for (const auto& b : model.blocks) dims.push_back(static_cast<int>(b.flags.size()));
        report.add("constraints", model.constraint_count());
        report.add("block_dims", dims.empty() ? std::string("-") : join(dims));
        report.add("lp_bound", lp_bound(model));
        report.print(out);
      }
      return 0;
    }

    if (round->parsed()) {
      const Integer max_den = parse_integer(round_bound);
      if (round_value_arg) {
        const auto q = round_value(*round_value_arg, max_den);
        report.add("value", q);
        report.add("value_decimal", to_decimal(q, 50));
        report.print(out);
        return 0;
      }
      if (round_model.empty() || round_solution_path.empty())
        throw std::invalid_argument("round needs --model and --solution, or --value");
      const auto model = parse_model_file(round_model);
      std::ifstream sol(round_solution_path);
      if (!sol) throw std::runtime_error("cannot open solution '" + round_solution_path + "'");
      const auto values = read_solution(sol);
      const auto cert = round_solution(model, values, max_den);
      Sink sink(round_out, out);
      write_certificate(sink.get(), cert);
      const auto verdict = verify(cert);
      std::ostream& status = sink.is_file() ? out : err;
      if (verdict.verified()) {
        status << "VERIFIED bound=" << to_string(cert.bound) << '\n';
        return 0;
      }
      status << "REJECTED " << verdict.reason << '\n';
      return 1;
    }

    if (verify_cmd->parsed()) {
      const auto cert = read_certificate_file(cert_path);
      const auto verdict = verify(cert);
      if (verdict.verified()) {
        out << "VERIFIED bound=" << to_string(cert.bound) << '\n';
        return 0;
      }
      out << "REJECTED " << verdict.reason << '\n';
      return 1;
    }

    if (partition->parsed()) {
      const auto graph = load_graph(part_graph);
      const int n = graph.order();
      std::vector<Vertex> v1, v2;
      std::optional<MaxCut> cut;
      if (n >= 3) cut = maxcut_local_search(graph, part_restarts, part_seed);
      if (!part_v1.empty()) {
        std::vector<bool> in_v1(static_cast<std::size_t>(n), false);
        for (int v : part_v1) {
          if (v < 0 || v >= n) throw std::invalid_argument("--v1: vertex " + std::to_string(v) + " out of range");
          in_v1[v] = true;
        }
        for (Vertex v = 0; v < n; ++v) (in_v1[v] ? v1 : v2).push_back(v);
      } else if (cut) {
        v1 = cut->v1;
        v2 = cut->v2;
      } else {
        for (Vertex v = 0; v < n; ++v) v2.push_back(v);
      }

      report.add("n", n);
      report.add("edges", graph.size());
      report.add("v1", v1.empty() ? std::string("-") : join(v1));
      report.add("v2", v2.empty() ? std::string("-") : join(v2));
      if (cut) {
        report.add("mu_lower", cut->mu);
        report.add("mu_lower_decimal", to_decimal(cut->mu, 50));
      }
      if (n <= 12 && n >= 1) report.add("mu_exact", exhaustive_maxcut(graph).mu);
      if (part_analyze) {
        const auto stats = bad_missing(graph, v1, v2);
        const auto gap = lemma22_gap(graph, v1, v2, parse_rational(part_xi));
        const auto degrees = degree_gap_check(graph);
        report.add("cross_present", stats.cross_present);
        report.add("bad", stats.bad.size());
        report.add("missing", stats.missing.size());
        report.add("inner2", stats.inner2);
        report.add("locally_maximal", is_locally_maximal(graph, v1, v2));
        report.add("xi", parse_rational(part_xi));
        report.add("lemma22_lhs", gap.lhs.get_str());
        report.add("lemma22_rhs", gap.rhs);
        report.add("lemma22_holds", gap.holds);
        report.add("prop33", prop33_expr(graph, v1, v2));
        report.add("degree_gap", degrees.gap);
        report.add("degree_gap_bound", degrees.bound);
        report.add("degree_gap_within", degrees.within);
        if (!part_delta.empty()) {
          const auto z = low_degree_set(graph, parse_rational(part_delta), HighPrecision(part_pi));
          report.add("low_degree_size", z.size());
          report.add("low_degree_set", z.empty() ? std::string("-") : join(z));
        }
      }
      report.print(out);
      return 0;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace turan::cli

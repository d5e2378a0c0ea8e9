#include "cli.hpp"

#include "dn/counting.hpp"
#include "dn/extraction.hpp"
#include "dn/generators.hpp"
#include "dn/goodness.hpp"
#include "dn/graph_io.hpp"
#include "dn/regularization.hpp"
#include "dn/rng.hpp"
#include "dn/splitting.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

namespace dn::cli {
namespace {

struct Source {
  std::string in;
  std::string gen;  // "kind:key=value,key=value"
  std::uint64_t seed = 1;
};

void add_source(CLI::App& cmd, Source& s) {
  cmd.add_option("--in", s.in, "Graph file (edge-list format)");
  cmd.add_option("--gen", s.gen, "Generator spec, e.g. gnp:n=30,p=0.2");
  cmd.add_option("--seed", s.seed, "Seed for generators and random choices");
}

Graph generate_from(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const GeneratorKind kind = parse_generator_kind(spec.substr(0, colon));
  GeneratorParams params;
  if (colon != std::string::npos) {
    std::istringstream list(spec.substr(colon + 1));
    std::string item;
    while (std::getline(list, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw Error(ErrorKind::invalid_argument, "generator parameter '" + item + "' is not key=value");
      }
      try {
        std::size_t used = 0;
        const std::string value = item.substr(eq + 1);
        params[item.substr(0, eq)] = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::invalid_argument, "generator parameter '" + item + "' is not numeric");
      }
    }
  }
  return generate(kind, params, seed);
}

Graph load_source(const Source& s) {
  if (s.in.empty() == s.gen.empty()) {
    throw Error(ErrorKind::invalid_argument, "give exactly one of --in and --gen");
  }
  return s.in.empty() ? generate_from(s.gen, s.seed) : load_graph_file(s.in);
}

std::string artifact_header(const std::string& command, std::uint64_t seed) {
  return "# rng=" + std::string(Rng::kId) + " seed=" + std::to_string(seed) + " command=" + command +
         "\n";
}

/// Writes to `path`, or to `fallback` when the path is empty or "-".
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::invalid_argument, "cannot write " + path);
  body(file);
  if (!file) throw Error(ErrorKind::invalid_argument, "write to " + path + " failed");
}

/// write_graph only accepts prefix bipartitions.
void write_any_graph(std::ostream& out, const Graph& g) {
  if (g.has_bipartition() && !g.prefix_side_size()) {
    write_graph(out, prefix_relabel(g).graph);
  } else {
    write_graph(out, g);
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot read " + path);
  return in;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::cap_exceeded:
    case ErrorKind::no_qualifying_index:
    case ErrorKind::insufficient_parents:
    case ErrorKind::no_qualifying_selection:
      return kFailed;
    default:
      return kInputError;
  }
}

CountReport plain_report(Structure s, std::size_t t, const Graph& g, BigInt count) {
  CountReport r;
  r.structure = s;
  r.t = t;
  r.n = g.n();
  r.m = g.m();
  r.count = std::move(count);
  return r;
}

std::vector<CountReport> count_structure(const Graph& g, Structure s, std::size_t t,
                                         std::size_t s_param, const CountCaps& caps) {
  switch (s) {
    case Structure::star_t:
      return {plain_report(s, t, g, count_stars(g, t))};
    case Structure::biclique_tt:
      return {count_bicliques(g, t, caps)};
    case Structure::t_matching:
      return {count_t_matchings(g, t)};
    case Structure::cherry_A:
    case Structure::cherry_B:
    case Structure::c4: {
      std::vector<CountReport> all = cherry_reports(g);
      std::erase_if(all, [&](const CountReport& r) { return r.structure != s; });
      return all;
    }
    case Structure::h_1t: {
      CountReport r = plain_report(s, t, g, count_h1t(g, t).copies);
      r.bound_value = h1t_bound(g, t);
      r.hypotheses_met = h1t_hypothesis(g, t);
      return {r};
    }
    case Structure::spider_t:
      return {plain_report(s, t, g, count_spiders(g, t))};
    case Structure::h_st:
      return {plain_report(s, t, g, count_hst(g, s_param, t, caps))};
  }
  return {};
}

struct ExtractFlags {
  std::size_t t = 2;
  std::size_t r = 2;
  std::size_t theta = 1;
  std::string mode = "even";
  std::optional<std::uint64_t> collision;
  std::size_t max_attempts = 20;
  std::optional<std::uint64_t> cap_aux;
};

void add_extract_flags(CLI::App& cmd, ExtractFlags& f) {
  cmd.add_option("--t", f.t, "Structure size t");
  cmd.add_option("--r", f.r, "Target radius r");
  cmd.add_option("--theta", f.theta, "Family size threshold");
  cmd.add_option("--mode", f.mode, "even or odd");
  cmd.add_option("--collision", f.collision, "Override the collision threshold");
  cmd.add_option("--max-attempts", f.max_attempts, "Partition retries");
  cmd.add_option("--cap-aux", f.cap_aux, "Auxiliary graph vertex cap");
}

ExtractOptions to_options(const ExtractFlags& f, std::uint64_t seed) {
  ExtractOptions o;
  o.t = f.t;
  o.r = f.r;
  o.theta = f.theta;
  o.mode = parse_split_mode(f.mode);
  o.seed = seed;
  o.max_split_attempts = f.max_attempts;
  o.collision_threshold = f.collision;
  if (f.cap_aux) o.caps.max_vertices = *f.cap_aux;
  return o;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::istringstream list(text);
  std::string item;
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (s.empty() || used != s.size() || s.front() == '-') {
      throw Error(ErrorKind::invalid_argument, "bad seed '" + s + "'");
    }
    return v;
  };
  while (std::getline(list, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      seeds.push_back(number(item));
      continue;
    }
    const std::uint64_t lo = number(item.substr(0, dots));
    const std::uint64_t hi = number(item.substr(dots + 2));
    if (hi < lo) throw Error(ErrorKind::invalid_argument, "empty seed range '" + item + "'");
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  return seeds;
}

std::size_t thread_budget() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DN_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) n = static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
    }
  }
  return n;
}

struct BenchRow {
  std::size_t n = 0, m = 0, t = 0, r = 0;
  std::uint64_t seed = 0;
  std::string outcome;
  std::string order, degree, radius;  // empty unless certified
  long long wall_ms = 0;
};

std::string to_csv(const BenchRow& b, bool timing) {
  std::ostringstream os;
  os << b.n << ',' << b.m << ',' << b.t << ',' << b.r << ',' << b.seed << ',' << b.outcome << ','
     << b.order << ',' << b.degree << ',' << b.radius << ',' << (timing ? b.wall_ms : 0);
  return os.str();
}

BenchRow bench_one(const Source& src, const ExtractFlags& flags, std::uint64_t seed) {
  BenchRow row;
  row.t = flags.t;
  row.r = flags.r;
  row.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    Source s = src;
    s.seed = seed;
    const Graph g = load_source(s);
    row.n = g.n();
    row.m = g.m();
    const ExtractionOutcome o = extract(g, to_options(flags, seed));
    if (o.ok()) {
      const Certificate& c = *o.certificate;
      row.outcome = "certified";
      row.order = std::to_string(c.order);
      row.degree = c.mode == SplitMode::even ? std::to_string(c.min_degree) : to_string(c.avg_degree);
      std::ostringstream rad;
      rad << c.radius;
      row.radius = rad.str();
    } else {
      row.outcome = to_string(*o.failure);
    }
  } catch (const Error& e) {
    row.outcome = e.kind() == ErrorKind::cap_exceeded ? "caps_exceeded" : "error";
  }
  row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return row;
}

std::vector<BenchRow> run_sweep(const Source& src, const ExtractFlags& flags,
                                const std::vector<std::uint64_t>& seeds) {
  std::vector<BenchRow> rows(seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < seeds.size(); k = next++) rows[k] = bench_one(src, flags, seeds[k]);
  };
  const std::size_t threads = std::min(thread_budget(), std::max<std::size_t>(seeds.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  return rows;
}

void print_certify(std::ostream& out, const CertifyReport& rep) {
  out << "order=" << rep.order << " min_degree=" << rep.min_degree
      << " avg_degree=" << to_string(rep.avg_degree) << " radius=" << rep.radius << '\n';
  out << "in_range=" << rep.in_range << " degree_ok=" << rep.degree_ok
      << " radius_ok=" << rep.radius_ok << " order_ok=" << rep.order_ok
      << " witness_ok=" << rep.witness_ok << " layers_disjoint=" << rep.layers_disjoint << '\n';
  out << (rep.passes() ? "certified" : "rejected") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degenerate-subgraph extraction experiments", "dn"};
  // --h is a parameter, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  int status = kOk;

  // gen
  Source gen_src;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  add_source(*gen, gen_src);
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  // count
  Source count_src;
  std::string structure = "t_matching", count_out;
  std::size_t count_t = 2, count_s = 1;
  std::uint64_t count_cap = CountCaps{}.max_tsets;
  auto* count = app.add_subcommand("count", "Count a structure and report its lower bound");
  add_source(*count, count_src);
  count->add_option("--structure", structure, "star_t, biclique_tt, t_matching, cherry_A, "
                                              "cherry_B, c4, h_1t, spider_t or h_st");
  count->add_option("--t", count_t, "t");
  count->add_option("--s", count_s, "s for h_st");
  count->add_option("--cap-tsets", count_cap, "Upper limit on C(n,t)");
  count->add_option("--out", count_out, "CSV path (default stdout)");

  // goodness
  Source good_src;
  std::size_t good_t = 0, good_h = 2;
  std::string good_kind = "biclique", good_out;
  std::optional<std::uint64_t> good_cap;
  auto* goodness = app.add_subcommand("goodness", "Classify (h,i)-goodness");
  add_source(*goodness, good_src);
  goodness->add_option("--t", good_t, "Aux structure size; 0 classifies the graph itself");
  goodness->add_option("--h", good_h, "Goodness depth h");
  goodness->add_option("--aux", good_kind, "biclique or htt");
  goodness->add_option("--cap-aux", good_cap, "Auxiliary graph vertex cap");
  goodness->add_option("--out", good_out, "CSV path (default stdout)");

  // split
  Source split_src;
  ExtractFlags split_flags;
  std::size_t split_h = 2;
  std::string split_out, split_csv, split_partition;
  auto* split = app.add_subcommand("split", "Random partition and family validation");
  add_source(*split, split_src);
  add_extract_flags(*split, split_flags);
  split->add_option("--h", split_h, "Number of classes");
  split->add_option("--partition", split_partition, "Validate a stored partition instead");
  split->add_option("--out", split_out, "Partition file");
  split->add_option("--csv", split_csv, "Family CSV (default stdout)");

  // extract
  Source ex_src;
  ExtractFlags ex_flags;
  std::string ex_out;
  auto* ex = app.add_subcommand("extract", "Extract a certified dense subgraph");
  add_source(*ex, ex_src);
  add_extract_flags(*ex, ex_flags);
  ex->add_option("--out", ex_out, "Certificate file (default stdout)");

  // regularize
  Source reg_src;
  std::string reg_out;
  std::optional<std::size_t> reg_t;
  std::string reg_c = "1";
  bool reg_claims = false;
  auto* reg = app.add_subcommand("regularize", "Two-step degree regularization");
  add_source(*reg, reg_src);
  reg->add_option("--t", reg_t, "Also report spider and H_{1,t} counts in G' for this t");
  reg->add_option("--c", reg_c, "Constant for the spider comparison (rational)");
  reg->add_flag("--claims", reg_claims, "Run the heavy/light claim check on the input instead");
  reg->add_option("--out", reg_out, "Result file (default stdout)");

  // verify
  Source ver_src;
  std::string ver_cert;
  auto* ver = app.add_subcommand("verify", "Re-certify a stored certificate");
  add_source(*ver, ver_src);
  ver->add_option("--cert", ver_cert, "Certificate file")->required();

  // exponent
  std::string exp_in;
  std::optional<std::string> exp_density;
  std::size_t exp_m = 5;
  auto* expo = app.add_subcommand("exponent", "Erdos-Renyi exponent of a family");
  expo->add_option("--in", exp_in, "Family file (edge-list blocks back to back)");
  expo->add_option("--density", exp_density, "Materialize the average-degree-d family instead");
  expo->add_option("--m", exp_m, "Order bound for --density");

  // bench
  Source bench_src;
  ExtractFlags bench_flags;
  std::string bench_seeds = "1..10", bench_out;
  bool bench_no_timing = false;
  auto* bench = app.add_subcommand("bench", "Extraction sweep over seeds");
  add_source(*bench, bench_src);
  add_extract_flags(*bench, bench_flags);
  bench->add_option("--seeds", bench_seeds, "Seed list, e.g. 1..10 or 1,4,9");
  bench->add_flag("--no-timing", bench_no_timing, "Write 0 for wall_time_ms");
  bench->add_option("--out", bench_out, "CSV path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gen) {
      const Graph g = load_source(gen_src);
      emit(gen_out, out, [&](std::ostream& os) {
        os << artifact_header("gen", gen_src.seed);
        write_any_graph(os, g);
      });
    } else if (*count) {
      const Graph g = load_source(count_src);
      const Structure s = parse_structure(structure);
      CountCaps caps;
      caps.max_tsets = count_cap;
      const auto reports = count_structure(g, s, count_t, count_s, caps);
      emit(count_out, out, [&](std::ostream& os) {
        os << kCountCsvHeader << '\n';
        for (const auto& r : reports) os << to_csv_row(r) << '\n';
      });
    } else if (*goodness) {
      const Graph g = load_source(good_src);
      if (good_t == 0) {
        const GoodnessTable table = classify_goodness(g, good_h);
        emit(good_out, out, [&](std::ostream& os) { write_goodness_csv(os, table); });
      } else {
        if (good_kind != "biclique" && good_kind != "htt") {
          throw Error(ErrorKind::invalid_argument, "--aux must be biclique or htt");
        }
        AuxCaps caps;
        if (good_cap) caps.max_vertices = *good_cap;
        const AuxGraph aux =
            build_aux(g, good_t, good_kind == "htt" ? AuxKind::htt_aux : AuxKind::biclique_aux, caps);
        const GoodnessTable table = classify_goodness(aux.graph(), good_h);
        emit(good_out, out, [&](std::ostream& os) {
          write_goodness_csv(os, table, [&](std::size_t i) { return aux.encode(i); });
        });
      }
    } else if (*split) {
      const SplitMode mode = parse_split_mode(split_flags.mode);
      const Graph host = mode == SplitMode::odd ? bipartite_half(load_source(split_src), split_src.seed)
                                                : load_source(split_src);
      AuxCaps caps;
      if (split_flags.cap_aux) caps.max_vertices = *split_flags.cap_aux;
      const AuxGraph aux = build_aux(
          host, split_flags.t, mode == SplitMode::odd ? AuxKind::htt_aux : AuxKind::biclique_aux, caps);
      const GoodnessTable table = classify_goodness(aux.graph(), split_h);
      Partition part;
      SplitValidation v;
      if (!split_partition.empty()) {
        auto in = open_input(split_partition);
        part = load_partition(in);
        v = validate_split(host, aux, table, part, split_flags.theta, mode);
      } else {
        SplitOutcome o = split_with_retries(host, aux, table, split_h, split_flags.theta, mode,
                                            split_flags.max_attempts, split_src.seed);
        if (!o.partition) throw Error(ErrorKind::precondition, "no partition attempt was made");
        part = *o.partition;
        v = *o.validation;
      }
      emit(split_csv, out, [&](std::ostream& os) { write_split_csv(os, v, aux); });
      if (!split_out.empty()) emit(split_out, out, [&](std::ostream& os) { write_partition(os, part); });
      if (!v.passes) {
        err << "split failed: " << v.short_records << " short families"
            << (v.monochromatic_top ? "" : ", no monochromatic top") << '\n';
        status = kFailed;
      }
    } else if (*ex) {
      const Graph g = load_source(ex_src);
      const ExtractionOutcome o = extract(g, to_options(ex_flags, ex_src.seed));
      if (o.ok()) {
        emit(ex_out, out, [&](std::ostream& os) {
          os << artifact_header("extract", ex_src.seed);
          write_certificate(os, *o.certificate);
        });
      } else {
        err << "extraction failed: " << to_string(*o.failure);
        if (!o.detail.empty()) err << " (" << o.detail << ')';
        err << '\n';
        status = kFailed;
      }
    } else if (*reg) {
      const Graph g = load_source(reg_src);
      if (reg_claims) {
        if (!reg_t) throw Error(ErrorKind::invalid_argument, "--claims needs --t");
        const auto sides = two_coloring(g);
        if (!sides) throw Error(ErrorKind::precondition, "claim check needs a bipartite graph");
        const ClaimReport rep =
            claim_bounds_check(g.has_bipartition() ? g : g.with_bipartition(*sides), *reg_t);
        emit(reg_out, out, [&](std::ostream& os) {
          os << "t=" << rep.t << " anchors=" << rep.anchors << " good_anchors=" << rep.good_anchors
             << " claim1_violations=" << rep.claim1_violations
             << " claim2_violations=" << rep.claim2_violations << '\n';
          for (const auto& c : rep.counterexamples) os << c << '\n';
        });
        if (!rep.ok()) status = kFailed;
      } else {
        const RegularizationResult r = regularize(g);
        emit(reg_out, out, [&](std::ostream& os) {
          os << artifact_header("regularize", reg_src.seed);
          write_regularization(os, r);
        });
        if (reg_t) {
          Rational c;
          try {
            c = Rational(reg_c);
          } catch (const std::exception&) {
            throw Error(ErrorKind::invalid_argument, "--c must be a rational like 1/8");
          }
          const SpiderH1tReport rep = spider_vs_h1t_report(r, *reg_t, c);
          err << "t=" << rep.t << " h1t=" << rep.h1t << " spiders=" << rep.spiders
              << " ratio=" << (rep.ratio ? to_string(*rep.ratio) : std::string("undefined"))
              << " hypothesis_met=" << rep.hypothesis_met << " bound_holds=" << rep.bound_holds
              << '\n';
        }
        if (!r.verified()) status = kFailed;
      }
    } else if (*ver) {
      const Graph g = load_source(ver_src);
      auto in = open_input(ver_cert);
      const Certificate c = load_certificate(in);
      const CertifyReport rep = certify(g, c);
      print_certify(out, rep);
      if (!rep.passes()) status = kFailed;
    } else if (*expo) {
      std::vector<Graph> family;
      if (exp_density) {
        Rational d;
        try {
          d = Rational(*exp_density);
        } catch (const std::exception&) {
          throw Error(ErrorKind::invalid_argument, "--density must be a rational like 5/2");
        }
        family = materialize_density_family(d, exp_m);
        out << "members=" << family.size() << " predicted_gamma=" << to_string(density_family_gamma(d, exp_m))
            << '\n';
      } else {
        if (exp_in.empty()) throw Error(ErrorKind::invalid_argument, "exponent needs --in or --density");
        auto in = open_input(exp_in);
        family = load_graphs(in);
      }
      if (family.empty()) throw Error(ErrorKind::invalid_argument, "family is empty");
      const FamilyExponent fe = erdos_renyi_exponent(family);
      out << "gamma=" << to_string(fe.gamma) << '\n';
      out << "lower_bound_exponent=" << to_string(fe.lower_bound_exponent()) << '\n';
      out << "witness_member=" << fe.witness_member << " witness_vertices=";
      for (std::size_t k = 0; k < fe.witness_vertices.size(); ++k) {
        out << (k ? " " : "") << fe.witness_vertices[k];
      }
      out << '\n';
    } else if (*bench) {
      const auto seeds = parse_seed_list(bench_seeds);
      to_options(bench_flags, 0);  // validate the mode before the sweep
      const auto rows = run_sweep(bench_src, bench_flags, seeds);
      emit(bench_out, out, [&](std::ostream& os) {
        os << kBenchCsvHeader << '\n';
        for (const auto& row : rows) os << to_csv(row, !bench_no_timing) << '\n';
        if (!rows.empty()) {
          std::map<std::string, std::size_t> tally;
          for (const auto& row : rows) ++tally[row.outcome];
          os << "# summary runs=" << rows.size();
          for (const auto& [k, v] : tally) os << ' ' << k << '=' << v;
          os << '\n';
        }
      });
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return status;
}

}  // namespace dn::cli

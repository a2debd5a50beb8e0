#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dodagx/bench.hpp"
#include "dodagx/dodag.hpp"
#include "dodagx/io.hpp"
#include "dodagx/protocols.hpp"
#include "dodagx/topology.hpp"
#include "dodagx/verify.hpp"

namespace {

using namespace dodagx;

struct Globals {
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out;
};

struct GenArgs {
  std::string family;
  std::size_t rows = 0, cols = 0, n = 0, k = 4;
  double p = 0.0;
};

struct BenchArgs {
  bool no_raw = false;
  bool serial = false;
  bool sample = false;
  std::size_t sample_size = bench::kDefaultSampleSize;
  bench::GridSweepConfig grid;
  bench::SmallWorldSweepConfig smallworld;
  bench::FixedKConfig fixedk;
  bench::RepeaterConfig repeater;
};

/// Writes to the --out file, or stdout when it is empty.
void emit_text(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw DomainError("cannot write '" + g.out + "'");
  f << text << '\n';
}

io::Json read_json_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return io::parse(buf.str());
  }
  return io::read_file(path);
}

void run_gen(const Globals& g, const GenArgs& a) {
  topology::TopologySpec spec;
  if (a.family == "grid")
    spec = topology::Grid{a.rows, a.cols};
  else if (a.family == "smallworld")
    spec = topology::SmallWorld{a.n, a.k, a.p, g.seed};
  else if (a.family == "star")
    spec = topology::Star{a.n};
  else if (a.family == "ring")
    spec = topology::Ring{a.n};
  else
    spec = topology::RandomTree{a.n, g.seed};
  emit_text(g, io::graph_to_json(topology::generate(spec)).dump());
}

void run_dodag(const Globals& g, const std::string& graph_path, const std::optional<VertexId>& root) {
  const Graph net = io::graph_from_json(read_json_input(graph_path));
  const DodagTree t = root ? build_dodag(net, *root) : build_dodag(net);
  emit_text(g, io::tree_to_json(t).dump());
}

void run_route(const Globals& g, const std::string& graph_path, const std::string& tree_path,
               const std::string& protocol, const std::vector<VertexId>& parties) {
  const Graph net = io::graph_from_json(read_json_input(graph_path));
  const auto tree = [&] { return tree_path.empty() ? build_dodag(net) : io::tree_from_json(io::read_file(tree_path), net); };
  const auto need = [&](std::size_t lo, std::size_t hi) {
    if (parties.size() < lo || parties.size() > hi)
      throw DomainError("protocol '" + protocol + "' takes " + std::to_string(lo) +
                        (lo == hi ? "" : "-" + std::to_string(hi)) + " parties");
  };

  RoutingOutcome out;
  if (protocol == bench::kProtocolDodagX) {
    need(2, 3);
    const DodagTree t = tree();
    out = dodag_x(t.tree_graph, t, PartySet{parties});
  } else if (protocol == bench::kProtocolNParty) {
    need(2, net.order());
    const DodagTree t = tree();
    out = dodag_x_nparty(t.tree_graph, t, PartySet{parties});
  } else if (protocol == bench::kProtocolX) {
    need(2, 3);
    out = parties.size() == 2 ? x_protocol_pair(net, parties[0], parties[1])
                              : x_protocol_triplet(net, parties[0], parties[1], parties[2]);
  } else {
    need(2, 2);
    out = repeater_protocol(net, parties[0], parties[1]);
  }
  emit_text(g, io::outcome_to_json(out, protocol).dump(2));
}

/// Runs one sweep, streaming raw records and writing the summary files.
template <class Sweep>
void run_bench(const Globals& g, const BenchArgs& a, const std::string& name, Sweep&& sweep) {
  const std::filesystem::path dir = g.out.empty() ? std::filesystem::path(".") : std::filesystem::path(g.out);
  std::filesystem::create_directories(dir);
  const auto open = [&](const std::string& suffix) {
    std::ofstream f(dir / (name + suffix));
    if (!f) throw DomainError("cannot write '" + (dir / (name + suffix)).string() + "'");
    return f;
  };

  bench::SweepOptions options;
  options.master_seed = g.seed;
  options.threads = g.threads;
  options.parallel = !a.serial;
  if (a.sample) options.sample_size = a.sample_size;

  std::ofstream raw;
  if (!a.no_raw) {
    raw = open("_raw.csv");
    raw << bench::kRawHeader << '\n';
    options.sink = [&raw](const bench::BenchmarkRecord& r) { raw << bench::raw_csv_line(r) << '\n'; };
  }
  const bench::SweepResult result = sweep(options);
  auto agg = open("_aggregate.csv");
  bench::write_aggregate_csv(agg, result.aggregates);
  auto diff = open("_diff.csv");
  bench::write_diff_csv(diff, result.diffs);

  std::cerr << name << ": " << result.aggregates.size() << " aggregate rows, " << result.diffs.size()
            << " cells";
  if (result.failed_generations > 0) std::cerr << ", " << result.failed_generations << " generations failed";
  if (result.unsuccessful_tree_runs > 0) std::cerr << ", " << result.unsuccessful_tree_runs << " unsuccessful tree runs";
  std::cerr << '\n';
}

int run_verify(const Globals& g, const std::string& suite) {
  std::vector<verify::CheckResult> results;
  if (suite == "oracle") {
    verify::OracleSuiteConfig c;
    c.seed = g.seed;
    results = verify::run_oracle_suite(c);
  } else {
    verify::TheoremSuiteConfig c;
    c.seed = g.seed;
    results = verify::run_theorem_suite(c);
  }
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
    if (r.failures > 0) std::cout << ", " << r.failures << " failures; first: " << r.detail;
    std::cout << ")\n";
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement routing on graph-state networks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Master seed");
  app.add_option("--threads", g.threads, "Worker threads for sweeps (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", g.out, "Output file (gen, dodag, route) or directory (bench)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a network as graph JSON");
  gen_cmd->add_option("family", gen.family, "grid | smallworld | star | ring | tree")
      ->required()
      ->check(CLI::IsMember({"grid", "smallworld", "star", "ring", "tree"}));
  gen_cmd->add_option("--rows", gen.rows, "Grid rows");
  gen_cmd->add_option("--cols", gen.cols, "Grid columns");
  gen_cmd->add_option("-n,--nodes", gen.n, "Vertex count");
  gen_cmd->add_option("-k,--degree", gen.k, "Small-world mean degree");
  gen_cmd->add_option("-p,--rewire", gen.p, "Small-world rewiring probability");

  std::string graph_path;
  std::optional<VertexId> root;
  auto* dodag_cmd = app.add_subcommand("dodag", "Build the DODAG of a graph as tree JSON");
  dodag_cmd->add_option("--graph", graph_path, "Graph JSON file, - for stdin")->required();
  dodag_cmd->add_option("--root", root, "Root vertex (default: minimum eccentricity)");

  std::string tree_path, protocol;
  std::vector<VertexId> parties;
  auto* route_cmd = app.add_subcommand("route", "Run a routing protocol and print the outcome JSON");
  route_cmd->add_option("--graph", graph_path, "Graph JSON file, - for stdin")->required();
  route_cmd->add_option("--tree", tree_path, "Tree JSON for dodag-x / nparty (default: build the DODAG)");
  route_cmd->add_option("--protocol", protocol, "dodag-x | x | repeater | nparty")
      ->required()
      ->check(CLI::IsMember({bench::kProtocolDodagX, bench::kProtocolX, bench::kProtocolRepeater,
                             bench::kProtocolNParty}));
  route_cmd->add_option("--parties", parties, "Comma-separated party ids")->required()->delimiter(',');

  BenchArgs b;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark sweeps writing raw, aggregate and diff CSVs");
  bench_cmd->require_subcommand(1);
  bench_cmd->add_flag("--no-raw", b.no_raw, "Skip the per-run CSV");
  bench_cmd->add_flag("--serial", b.serial, "Use the serial reference kernels");
  bench_cmd->add_flag("--sample", b.sample, "Sample triplets on networks above 40 vertices");
  bench_cmd->add_option("--sample-size", b.sample_size, "Triplets per sampled network");

  auto* grid_cmd = bench_cmd->add_subcommand("grid", "m x l grids, all triplets");
  grid_cmd->add_option("--min-rows", b.grid.min_rows);
  grid_cmd->add_option("--max-rows", b.grid.max_rows);
  grid_cmd->add_option("--min-cols", b.grid.min_cols);
  grid_cmd->add_option("--max-cols", b.grid.max_cols);

  auto* sw_cmd = bench_cmd->add_subcommand("smallworld", "Watts-Strogatz (k, p) sweep");
  sw_cmd->add_option("-n,--nodes", b.smallworld.n);
  sw_cmd->add_option("--k-values", b.smallworld.k_values)->delimiter(',');
  sw_cmd->add_option("--p-values", b.smallworld.p_values)->delimiter(',');
  sw_cmd->add_option("--seeds", b.smallworld.seeds)->check(CLI::PositiveNumber);

  auto* fk_cmd = bench_cmd->add_subcommand("fixedk", "Fixed-k scan over network size and p");
  fk_cmd->add_option("-k,--degree", b.fixedk.k);
  fk_cmd->add_option("--n-values", b.fixedk.n_values)->delimiter(',');
  fk_cmd->add_option("--p-values", b.fixedk.p_values)->delimiter(',');
  fk_cmd->add_option("--seeds", b.fixedk.seeds)->check(CLI::PositiveNumber);

  auto* rep_cmd = bench_cmd->add_subcommand("repeater", "Two-party X-protocol against the repeater protocol");
  rep_cmd->add_option("--families", b.repeater.families)->delimiter(',');
  rep_cmd->add_option("--grid-sides", b.repeater.grid_sides)->delimiter(',');
  rep_cmd->add_option("--star-sizes", b.repeater.star_sizes)->delimiter(',');
  rep_cmd->add_option("--smallworld-sizes", b.repeater.smallworld_sizes)->delimiter(',');
  rep_cmd->add_option("--k-values", b.repeater.k_values)->delimiter(',');
  rep_cmd->add_option("--p-values", b.repeater.p_values)->delimiter(',');
  rep_cmd->add_option("--seeds", b.repeater.seeds)->check(CLI::PositiveNumber);

  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle or theorem self-checks");
  verify_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember({"oracle", "theorems"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) run_gen(g, gen);
    if (*dodag_cmd) run_dodag(g, graph_path, root);
    if (*route_cmd) run_route(g, graph_path, tree_path, protocol, parties);
    if (*grid_cmd) run_bench(g, b, "grid", [&](const auto& o) { return bench::run_grid_sweep(b.grid, o); });
    if (*sw_cmd)
      run_bench(g, b, "smallworld", [&](const auto& o) { return bench::run_smallworld_sweep(b.smallworld, o); });
    if (*fk_cmd) run_bench(g, b, "fixedk", [&](const auto& o) { return bench::run_fixed_k_scan(b.fixedk, o); });
    if (*rep_cmd)
      run_bench(g, b, "repeater", [&](const auto& o) { return bench::run_repeater_comparison(b.repeater, o); });
    if (*verify_cmd) return run_verify(g, suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

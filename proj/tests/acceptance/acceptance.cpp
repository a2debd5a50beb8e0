// Acceptance run: one PASS/FAIL line per criterion, pinned tolerances, exit
// status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "dodagx/bench.hpp"
#include "dodagx/topology.hpp"
#include "dodagx/verify.hpp"

namespace fs = std::filesystem;
using namespace dodagx;
using namespace dodagx::bench;

namespace {

constexpr std::uint64_t kMasterSeed = 0;

int failures = 0;

void report(bool pass, const std::string& id, const std::string& detail) {
  std::printf("%s  %-28s %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string summarize(const std::vector<verify::CheckResult>& results) {
  std::string s;
  for (const auto& r : results) {
    if (!s.empty()) s += "; ";
    s += r.name + " " + std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases);
    if (!r.passed() && !r.detail.empty()) s += " [first failure: " + r.detail + "]";
  }
  return s;
}

bool all_passed(const std::vector<verify::CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
}

void oracle_criteria() {
  verify::OracleSuiteConfig c;
  c.seed = kMasterSeed;
  c.stabilizer_graphs = 0;
  Stopwatch sw;
  std::vector<verify::CheckResult> rules;
  for (const auto& r : verify::run_oracle_suite(c))
    if (r.cases > 0) rules.push_back(r);
  const double t = sw.seconds();
  report(all_passed(rules) && t <= 300.0, "rewrite-rules-vs-oracle", summarize(rules) + "; " + fmt(t, 1) + " s (<= 300 s)");

  const auto stab = verify::check_stabilizers(50, 8, kMasterSeed, 1e-10);
  report(stab.passed() && stab.cases == 50, "stabilizer-check", summarize({stab}) + " graph states, tolerance 1e-10");
}

void theorem_criteria() {
  const auto closed = verify::check_closed_forms(100, 40, kMasterSeed);
  report(closed.passed(), "closed-form-neighborhoods", summarize({closed}) + " leaf-to-leaf paths on 100 trees");

  const auto props = verify::check_tree_properties(500, 50, 20, kMasterSeed);
  report(all_passed(props), "tree-property-suite", summarize(props) + " (500 trees, n <= 50)");

  const auto equal = verify::check_equal_counts_on_trees(200, 50, 200, kMasterSeed);
  report(equal.passed(), "equal-counts-on-trees", summarize({equal}) + " triplets on 200 trees, exact");
}

CellKey grid_cell(std::size_t m, std::size_t l) { return {"grid", m, l, m * l, std::nullopt, std::nullopt}; }

void grid_criteria() {
  SweepOptions o;
  o.master_seed = kMasterSeed;
  Stopwatch sw;
  const SweepResult r = run_grid_sweep({}, o);
  const double t = sw.seconds();

  std::string bad;
  double max_diff = -1e9;
  std::string max_cell;
  for (const DiffCell& d : r.diffs) {
    const std::string name = std::to_string(*d.cell.rows) + "x" + std::to_string(*d.cell.cols);
    if (d.percent_difference > max_diff) {
      max_diff = d.percent_difference;
      max_cell = name;
    }
    if (name == "3x3") continue;
    if (!(d.percent_difference > 0)) bad += (bad.empty() ? "" : " ") + name + "=" + fmt(d.percent_difference);
  }
  report(bad.empty() && r.diffs.size() == 64 && r.unsuccessful_tree_runs == 0, "grid-a-positive-except-3x3",
         bad.empty() ? "all 63 cells > 0" : "cells <= 0: " + bad);

  const double d33 = r.find_diff(grid_cell(3, 3))->percent_difference;
  report(d33 >= -5.0 && d33 <= 0.5, "grid-b-3x3-band", "3x3 = " + fmt(d33) + " (band [-5.0, 0.5])");
  report(max_diff >= 14.0 && max_diff <= 21.0, "grid-c-max-band",
         "max = " + fmt(max_diff) + " at " + max_cell + " (band [14.0, 21.0])");

  const double d44 = r.find_diff(grid_cell(4, 4))->percent_difference;
  const double d99 = r.find_diff(grid_cell(9, 9))->percent_difference;
  report(d99 > d44, "grid-d-grows-with-size", "9x9 = " + fmt(d99) + " vs 4x4 = " + fmt(d44));
  report(t <= 900.0, "grid-runtime", fmt(t, 1) + " s (<= 900 s)");
}

void smallworld_criteria() {
  SmallWorldSweepConfig c;
  c.seeds = 20;
  SweepOptions o;
  o.master_seed = kMasterSeed;
  Stopwatch sw;
  const SweepResult r = run_smallworld_sweep(c, o);
  const double t = sw.seconds();

  double sum = 0, max_diff = -1e9;
  std::string max_cell, low_cells;
  bool low_found = false;
  std::map<double, std::pair<double, std::size_t>> high_k_by_p;
  for (const DiffCell& d : r.diffs) {
    const std::size_t k = *d.cell.k;
    const double p = *d.cell.p;
    sum += d.percent_difference;
    if (d.percent_difference > max_diff) {
      max_diff = d.percent_difference;
      max_cell = "k=" + std::to_string(k) + " p=" + fmt(p, 1);
    }
    if (k <= 4 && p <= 0.2 + 1e-9 && d.percent_difference <= 0) {
      low_found = true;
      low_cells += " k=" + std::to_string(k) + ",p=" + fmt(p, 1) + ":" + fmt(d.percent_difference);
    }
    if (k >= 8) {
      auto& [s, n] = high_k_by_p[p];
      s += d.percent_difference;
      ++n;
    }
  }
  const std::size_t expected_cells = c.k_values.size() * c.p_values.size();
  const double grand = r.diffs.empty() ? 0.0 : sum / static_cast<double>(r.diffs.size());
  const bool complete = r.diffs.size() == expected_cells && r.unsuccessful_tree_runs == 0;
  report(complete && grand >= 12.0 && grand <= 33.0, "smallworld-a-grand-mean",
         "grand mean = " + fmt(grand) + " over " + std::to_string(r.diffs.size()) + " cells, " +
             std::to_string(r.failed_generations) + " failed generations (band [12, 33])");
  report(max_diff >= 28.0, "smallworld-b-max", "max = " + fmt(max_diff) + " at " + max_cell + " (>= 28)");
  report(low_found, "smallworld-c-low-k-low-p", low_found ? "cells <= 0:" + low_cells : "no cell with k <= 4, p <= 0.2 is <= 0");

  std::string per_p;
  bool all_positive = high_k_by_p.size() == c.p_values.size();
  for (const auto& [p, acc] : high_k_by_p) {
    const double mean = acc.first / static_cast<double>(acc.second);
    per_p += (per_p.empty() ? "" : " ") + fmt(p, 1) + ":" + fmt(mean, 1);
    all_positive = all_positive && mean > 0;
  }
  report(all_positive, "smallworld-d-k>=8-positive", "per-p mean over k >= 8: " + per_p);
  report(t <= 1800.0, "smallworld-runtime", fmt(t, 1) + " s (<= 1800 s)");
}

void fixed_k_criteria() {
  const FixedKConfig c;
  SweepOptions o;
  o.master_seed = kMasterSeed;
  const SweepResult r = run_fixed_k_scan(c, o);
  const std::size_t largest = *std::max_element(c.n_values.begin(), c.n_values.end());

  std::string high, low;
  bool high_ok = true, low_ok = true;
  for (const double p : c.p_values) {
    const CellKey cell{"smallworld", std::nullopt, std::nullopt, largest, c.k, p};
    const AggregateCell* x = r.find(cell, kProtocolX);
    const AggregateCell* d = r.find(cell, kProtocolDodagX);
    if (!x || !d) {
      (p >= 0.5 ? high_ok : low_ok) = false;
      continue;
    }
    const double mx = x->mean_total(), md = d->mean_total();
    const std::string entry = "p=" + fmt(p, 1) + " x=" + fmt(mx) + " dodag-x=" + fmt(md);
    if (p >= 0.5 - 1e-9) {
      high_ok = high_ok && md < mx;
      high += (high.empty() ? "" : "; ") + entry;
    } else if (p <= 0.1 + 1e-9) {
      const double rel = std::abs(mx - md) / mx * 100.0;
      low_ok = low_ok && rel < 5.0;
      low += (low.empty() ? "" : "; ") + entry + " (" + fmt(rel, 1) + "%)";
    }
  }
  const std::string n = "N=" + std::to_string(largest) + ", k=" + std::to_string(c.k) + ": ";
  report(high_ok && !high.empty(), "fixedk-high-p-dodagx-cheaper", n + high);
  report(low_ok && !low.empty(), "fixedk-low-p-within-5pct", n + low + " (< 5%)");
}

void repeater_criteria() {
  RepeaterConfig c;
  c.families = {"grid", "star"};
  SweepOptions o;
  o.master_seed = kMasterSeed;
  const SweepResult r = run_repeater_comparison(c, o);

  bool star_ok = true;
  std::string stars;
  for (const std::size_t n : c.star_sizes) {
    const CellKey cell{"star", std::nullopt, std::nullopt, n, std::nullopt, std::nullopt};
    const AggregateCell* x = r.find(cell, kProtocolX);
    const AggregateCell* rep = r.find(cell, kProtocolRepeater);
    const bool eq = x && rep && x->sum_total == rep->sum_total && x->samples == rep->samples;
    star_ok = star_ok && eq;
    stars += (stars.empty() ? "" : " ") + std::to_string(n) + (eq ? ":eq" : ":NE");
  }
  report(star_ok, "repeater-a-star-equal", "star sizes " + stars);

  bool gap_ok = true;
  double last_gap = -1e9;
  std::string gaps;
  std::map<std::size_t, double> x_mean;
  for (const std::size_t side : {4, 6, 8}) {
    const CellKey cell = grid_cell(side, side);
    const double mx = r.find(cell, kProtocolX)->mean_total();
    const double mr = r.find(cell, kProtocolRepeater)->mean_total();
    const double gap = mr - mx;
    gap_ok = gap_ok && mx < mr && gap >= last_gap;
    last_gap = gap;
    x_mean[side * side] = mx;
    gaps += (gaps.empty() ? "" : "; ") + std::string("N=") + std::to_string(side * side) + " x=" + fmt(mx, 3) +
            " repeater=" + fmt(mr, 3) + " gap=" + fmt(gap, 3);
  }
  report(gap_ok, "repeater-b-grid-gap", gaps);

  const double ratio = x_mean[64] / x_mean[16];
  report(ratio < 2.0, "repeater-c-sublinear", "mean(64)/mean(16) = " + fmt(x_mean[64], 3) + "/" + fmt(x_mean[16], 3) +
                                                   " = " + fmt(ratio, 3) + " (< 2)");
}

void depth_criteria() {
  const auto square = topology::dodag_depth_scaling(topology::DepthFamily::SquareGrid, {3, 4, 5, 6, 7, 8, 9});
  bool ok = true;
  std::string s;
  for (std::size_t i = 0; i < square.size(); ++i) {
    const double n = static_cast<double>(i + 3);
    ok = ok && square[i].mean_depth >= n - 2 && square[i].mean_depth <= n;
    s += (s.empty() ? "" : " ") + std::to_string(i + 3) + ":" + fmt(square[i].mean_depth, 0);
  }
  report(ok, "depth-square-grid", "n:depth " + s + " (n - 1 +/- 1)");

  const auto sw = topology::dodag_depth_scaling(topology::DepthFamily::SmallWorld, {30, 240}, 8, 0.5, 20, kMasterSeed);
  const double growth = sw[1].mean_depth - sw[0].mean_depth;
  report(growth <= 4.0, "depth-smallworld-log",
         "depth(240) - depth(30) = " + fmt(sw[1].mean_depth) + " - " + fmt(sw[0].mean_depth) + " = " + fmt(growth) +
             " (<= 4, 20 seeds)");
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(DODAGX_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void determinism_criteria() {
  const fs::path root = fs::temp_directory_path() / ("dodagx_acceptance_" + std::to_string(::getpid()));
  const std::vector<std::pair<std::string, std::string>> runs{
      {"grid", "bench grid"},
      {"smallworld", "bench smallworld --k-values 2,8,16,24 --p-values 0,0.5,1 --seeds 2"},
      {"fixedk", "bench fixedk --n-values 10,30,60 --p-values 0,0.5 --seeds 2"},
      {"repeater", "bench repeater"},
  };
  for (const auto& [name, args] : runs) {
    const fs::path a = root / (name + "_t1"), b = root / (name + "_t4");
    const int ra = run_cli("--seed 7 --threads 1 --out " + a.string() + " " + args);
    const int rb = run_cli("--seed 7 --threads 4 --out " + b.string() + " " + args);
    const std::string raw_a = slurp(a / (name + "_raw.csv"));
    const std::string raw_b = slurp(b / (name + "_raw.csv"));
    const bool same = ra == 0 && rb == 0 && !raw_a.empty() && raw_a == raw_b;
    const auto lines = std::count(raw_a.begin(), raw_a.end(), '\n');
    report(same, "determinism-" + name,
           "threads 1 vs 4: " + std::string(same ? "byte-identical" : "DIFFERENT") + " raw CSV, " +
               std::to_string(lines) + " lines");
  }
  fs::remove_all(root);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> groups{
      {"oracle", oracle_criteria},       {"theorems", theorem_criteria}, {"grid", grid_criteria},
      {"small-world", smallworld_criteria}, {"fixed-k", fixed_k_criteria}, {"repeater", repeater_criteria},
      {"depth", depth_criteria},         {"determinism", determinism_criteria},
  };
  Stopwatch total;
  for (const auto& [name, run] : groups) {
    try {
      run();
    } catch (const std::exception& e) {
      report(false, name, std::string("exception: ") + e.what());
    }
  }
  std::printf("%d criteria failed; %.1f s total\n", failures, total.seconds());
  return failures == 0 ? 0 : 1;
}

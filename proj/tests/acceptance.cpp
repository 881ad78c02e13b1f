// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "pamcpp/evaluator.hpp"
#include "pamcpp/generator.hpp"
#include "pamcpp/io.hpp"
#include "pamcpp/solver.hpp"
#include "test_support.hpp"

using namespace pamcpp;
using namespace pamcpp::testing;

namespace {

int failures = 0;

struct Criterion {
  const char* name;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::vector<std::string> problems;
  std::vector<std::string> details;

  explicit Criterion(const char* n) : name(n) {}
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void note(const std::string& what) { details.push_back(what); }
  void finish() {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    if (problems.empty()) {
      std::printf("[PASS] %s (%.1fs)\n", name, secs);
    } else {
      ++failures;
      std::printf("[FAIL] %s (%.1fs)\n", name, secs);
      for (const auto& p : problems) std::printf("       - %s\n", p.c_str());
    }
    for (const auto& d : details) std::printf("       %s\n", d.c_str());
    std::fflush(stdout);
  }
};

struct Combo {
  int width, height, zones, robots;
  CostMode mode;
};

const std::vector<Combo> kSuiteCombos{
    {8, 8, 0, 1, CostMode::kUnit},      {8, 8, 1, 2, CostMode::kUniform},
    {12, 12, 2, 2, CostMode::kUnit},    {16, 16, 4, 3, CostMode::kUniform},
    {20, 20, 6, 4, CostMode::kUnit},    {24, 24, 8, 5, CostMode::kUniform},
    {28, 28, 10, 6, CostMode::kUnit},   {32, 32, 14, 8, CostMode::kUniform},
    {36, 36, 16, 9, CostMode::kUnit},   {40, 40, 20, 10, CostMode::kUniform}};

int completion_index(const GridMap& map, const GridWalk& walk,
                     const std::vector<Cell>& cells) {
  std::set<int> remaining;
  for (Cell c : cells) remaining.insert(map.index(c));
  for (std::size_t t = 0; t < walk.cells.size(); ++t) {
    remaining.erase(map.index(walk.cells[t]));
    if (remaining.empty()) return static_cast<int>(t);
  }
  return -1;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// 1. walk validity, full coverage, zone order, T_j <= makespan, mmr >= 1
void criterion1() {
  Criterion c("criterion 1: validity suite (200 instances)");
  int solved = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (const Combo& combo : kSuiteCombos) {
      Instance inst;
      try {
        inst = generate_instance(seed, combo.width, combo.height, combo.zones,
                                 combo.robots, combo.mode);
      } catch (const std::exception& e) {
        c.require(false, std::string("generation failed: ") + e.what());
        continue;
      }
      inst.config.ls_iterations = 500;
      SolveResult r;
      try {
        r = solve(inst);
      } catch (const std::exception& e) {
        c.require(false, std::string("solve failed: ") + e.what());
        continue;
      }
      ++solved;
      try {
        check_plan(inst, r.plan);  // walk validity + full coverage
      } catch (const std::exception& e) {
        c.require(false, std::string("plan invalid (seed ") + std::to_string(seed) +
                             "): " + e.what());
        continue;
      }
      for (std::size_t i = 0; i < inst.robots.size(); ++i) {
        int prev = -1;
        for (int j : r.plan.assignment.sequences[i]) {
          int done = completion_index(inst.map, r.plan.paths[i], inst.zones[j].cells);
          c.require(done > prev, "zone order violated at seed " + std::to_string(seed));
          prev = done;
        }
      }
      for (int t : r.metrics.zone_times)
        c.require(t <= r.metrics.makespan, "zone time exceeds makespan");
      c.require(r.metrics.mmr >= 1.0 - 1e-12, "mmr below 1");
    }
  }
  c.require(solved == 200, "expected 200 solves, got " + std::to_string(solved));
  c.finish();
}

// 2. greedy+LS within 15% of the oracle everywhere, within 2% on >= 80%
void criterion2() {
  Criterion c("criterion 2: assignment oracle equivalence (50 tables)");
  int within2 = 0;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    std::mt19937_64 gen(1000 + i);
    int n = 2 + i % 4;  // 2..5
    int k = 1 + i % 2;  // 1..2
    // tables drawn from random instances, the distribution assignments see
    Instance inst = generate_instance(1000 + i, 20, 20, n, k,
                                      i % 3 ? CostMode::kUnit : CostMode::kUniform);
    HyperGraph h = build_hypergraph(inst.map);
    std::vector<std::vector<int>> zone_hvs;
    for (const Zone& z : inst.zones) zone_hvs.push_back(zone_hypervertices(h, inst.map, z));
    CostTables tables = compute_cost_tables(h, inst, zone_hvs);
    std::vector<double> weights(n, 1.0);  // uniform priorities, the reference protocol

    SolverConfig cfg;
    cfg.seed = 1000 + i;
    cfg.ls_iterations = 2000;
    cfg.ls_schedule = LsSchedule::kCosine;
    Assignment refined = local_search(greedy_assign(tables, weights, k), tables, weights, cfg);
    Assignment oracle = brute_force_assign(tables, weights, k);
    double gap = (refined.surrogate_cost - oracle.surrogate_cost) /
                 std::max(oracle.surrogate_cost, 1e-12);
    worst = std::max(worst, gap);
    c.require(gap <= 0.15 + 1e-12, "gap " + std::to_string(gap) + " exceeds 15% on table " +
                                       std::to_string(i));
    if (gap <= 0.02 + 1e-12) ++within2;
  }
  c.require(within2 >= 40, "only " + std::to_string(within2) + "/50 tables within 2%");
  char buf[120];
  std::snprintf(buf, sizeof buf, "worst gap %.1f%%, within 2%% on %d/50 tables",
                100.0 * worst, within2);
  c.note(buf);
  c.finish();
}

// 3. single-zone, zone-contains-start walks have exactly 4*|hvs|+1 cells
void criterion3() {
  Criterion c("criterion 3: STC exactness on zone-contains-start instances");
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Instance inst = generate_instance(seed, 16, 16, 1, 1, CostMode::kUnit);
    inst.robots[0] = inst.zones[0].cells.front();
    validate_instance(inst);

    HyperGraph h = build_hypergraph(inst.map);
    auto zh = std::vector<std::vector<int>>{
        zone_hypervertices(h, inst.map, inst.zones[0])};
    Assignment a;
    a.sequences = {{0}};
    auto plans = plan_phase1(h, inst, a, zh);
    std::size_t expected = 4 * plans[0].covered_hvs.size() + 1;
    c.require(plans[0].walk.cells.size() == expected,
              "seed " + std::to_string(seed) + ": walk " +
                  std::to_string(plans[0].walk.cells.size()) + " != " +
                  std::to_string(expected));
    c.require(plans[0].covered_hvs == zh[0], "covered set is not the zone set");
  }
  c.finish();
}

// 4. accept-only-if-improving makes every trace non-increasing
void criterion4() {
  Criterion c("criterion 4: local search monotonicity (100 runs)");
  for (int i = 0; i < 100; ++i) {
    std::mt19937_64 gen(2000 + i);
    int n = 2 + i % 7;  // 2..8
    int k = 1 + i % 4;  // 1..4
    CostTables tables = random_tables(gen, n, k);
    std::vector<double> weights(n, 1.0);
    Assignment initial = greedy_assign(tables, weights, k);
    SolverConfig cfg;
    cfg.seed = 2000 + i;
    cfg.ls_iterations = 500;
    cfg.ls_schedule = i % 2 ? LsSchedule::kCosine : LsSchedule::kStatic;
    std::vector<LsTraceEntry> trace;
    Assignment refined = local_search(initial, tables, weights, cfg, &trace);
    double prev = initial.surrogate_cost;
    bool monotone = true;
    for (const LsTraceEntry& e : trace) {
      if (e.surrogate > prev + 1e-12) monotone = false;
      prev = e.surrogate;
    }
    c.require(monotone, "trace increased in run " + std::to_string(i));
    c.require(refined.surrogate_cost <= initial.surrogate_cost + 1e-12,
              "final surrogate above initial in run " + std::to_string(i));
  }
  c.finish();
}

struct TrendSample {
  Metrics solver, baseline;
};

std::vector<TrendSample> latency_trend_samples() {
  static std::vector<TrendSample> cache;
  if (!cache.empty()) return cache;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Instance inst = generate_instance(3000 + seed, 20, 20, 4, 3, CostMode::kUnit);
    inst.config.ls_iterations = 2000;
    inst.config.seed = seed;
    SolveResult r = solve(inst, {.run_baseline = true});
    cache.push_back({r.metrics, *r.baseline_metrics});
  }
  return cache;
}

// 5. solver latency beats the baseline on >= 90% of instances, mean reduction
//    >= 30%, mean makespan overhead <= 35%
void criterion5() {
  Criterion c("criterion 5: latency-vs-baseline trend (20 instances)");
  auto samples = latency_trend_samples();
  int wins = 0;
  double reduction_sum = 0.0, overhead_sum = 0.0;
  for (const TrendSample& s : samples) {
    if (s.solver.weighted_latency < s.baseline.weighted_latency) ++wins;
    reduction_sum += (s.baseline.weighted_latency - s.solver.weighted_latency) /
                     s.baseline.weighted_latency;
    overhead_sum += (static_cast<double>(s.solver.makespan) - s.baseline.makespan) /
                    s.baseline.makespan;
  }
  double mean_reduction = reduction_sum / samples.size();
  double mean_overhead = overhead_sum / samples.size();
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "latency wins %d/20, mean reduction %.1f%%, mean makespan overhead %.1f%%",
                wins, 100.0 * mean_reduction, 100.0 * mean_overhead);
  c.note(buf);
  c.require(wins >= 18, "solver won only " + std::to_string(wins) + "/20");
  c.require(mean_reduction >= 0.30,
            "mean latency reduction " + std::to_string(100.0 * mean_reduction) + "% < 30%");
  c.require(mean_overhead <= 0.35,
            "mean makespan overhead " + std::to_string(100.0 * mean_overhead) + "% > 35%");
  c.finish();
}

// 6. median latency strictly drops from k=2 to k=4 and never rises to k=8
void criterion6() {
  Criterion c("criterion 6: robot-count scaling on a fixed 30x30 instance");
  Instance base = generate_instance(2024, 30, 30, 8, 2, CostMode::kUnit);
  std::vector<double> medians;
  for (int k : {2, 4, 8}) {
    std::vector<double> latencies;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      Instance trial = resample_starts(base, k, 4000 + seed);
      trial.config.ls_iterations = 2000;
      trial.config.seed = seed;
      latencies.push_back(solve(trial).metrics.weighted_latency);
    }
    medians.push_back(median(latencies));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "median latency k=2: %.1f, k=4: %.1f, k=8: %.1f",
                medians[0], medians[1], medians[2]);
  c.note(buf);
  c.require(medians[0] > medians[1], "no strict decrease from k=2 to k=4");
  c.require(medians[1] >= medians[2], "increase from k=4 to k=8");
  c.finish();
}

// 7. raising one zone's weight from 1 to 10 brings its coverage time down
void criterion7() {
  Criterion c("criterion 7: weight controllability (20 runs)");
  int no_worse = 0;
  double sum1 = 0.0, sum10 = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Instance inst = generate_instance(5000 + seed, 24, 24, 6, 3, CostMode::kUnit);
    inst.config.ls_iterations = 2000;
    inst.config.seed = seed;
    SolveResult plain = solve(inst);
    Instance boosted = inst;
    boosted.zones[0].weight = 10.0;
    SolveResult heavy = solve(boosted);
    int t1 = plain.metrics.zone_times[0];
    int t10 = heavy.metrics.zone_times[0];
    if (t10 <= t1) ++no_worse;
    sum1 += t1;
    sum10 += t10;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "T_j(w=10) <= T_j(w=1) in %d/20 runs; mean %.1f -> %.1f",
                no_worse, sum1 / 20.0, sum10 / 20.0);
  c.note(buf);
  c.require(no_worse >= 16, "improved or equal in only " + std::to_string(no_worse) + "/20");
  c.require(sum10 < sum1, "mean coverage time did not drop");
  c.finish();
}

// 8. solver MMR within +0.10 of the baseline in mean
void criterion8() {
  Criterion c("criterion 8: workload balance");
  auto samples = latency_trend_samples();
  double solver_sum = 0.0, base_sum = 0.0;
  for (const TrendSample& s : samples) {
    solver_sum += s.solver.mmr;
    base_sum += s.baseline.mmr;
  }
  double delta = solver_sum / samples.size() - base_sum / samples.size();
  char buf[160];
  std::snprintf(buf, sizeof buf, "mean mmr solver %.3f vs baseline %.3f (delta %.3f)",
                solver_sum / samples.size(), base_sum / samples.size(), delta);
  c.note(buf);
  c.require(delta <= 0.10, "mmr delta " + std::to_string(delta) + " > 0.10");
  c.finish();
}

// 9. library primitives against brute-force enumeration
void criterion9() {
  Criterion c("criterion 9: small-instance brute-force cross-checks");

  {  // kruskal vs spanning-tree enumeration
    std::mt19937_64 gen(71);
    for (int round = 0; round < 10; ++round) {
      int n = 4 + static_cast<int>(draw_below(gen, 3));
      std::vector<HyperEdge> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (v == u + 1 || draw_unit(gen) < 0.5)
            edges.push_back({u, v, 0.5 + draw_unit(gen)});
      HyperGraph h = synthetic_graph(n, edges);
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 0);
      double mst = kruskal_mst(h, all).total_cost;
      double opt = enumerate_mst_cost(h, all);
      c.require(std::abs(mst - opt) < 1e-9, "kruskal mismatch in round " +
                                                std::to_string(round));
    }
  }
  {  // steiner within 2x of the enumerated optimum
    std::mt19937_64 gen(72);
    for (int round = 0; round < 8; ++round) {
      HyperGraph h = lattice_graph(3, 3, 0.5 + draw_unit(gen));
      std::vector<int> terminals;
      for (int v = 0; v < 9; ++v)
        if (draw_unit(gen) < 0.4) terminals.push_back(v);
      if (terminals.empty()) terminals.push_back(static_cast<int>(draw_below(gen, 9)));
      double heur = steiner_tree(h, terminals).total_cost;
      double opt = enumerate_steiner_cost(h, terminals);
      c.require(heur <= 2.0 * opt + 1e-9, "steiner over 2x in round " +
                                              std::to_string(round));
    }
  }
  {  // min-max split within 1.25x of the enumerated optimum on short cycles
    std::mt19937_64 gen(73);
    for (int round = 0; round < 8; ++round) {
      int blocks = 3 + static_cast<int>(draw_below(gen, 4));  // 12..24 cycle cells
      GridMap map = open_map(2 * blocks, 2);
      HyperGraph h = build_hypergraph(map);
      std::vector<int> all(blocks);
      std::iota(all.begin(), all.end(), 0);
      HyperTree tree = kruskal_mst(h, all);
      tree.anchor = 0;
      GridWalk cycle = circumnavigate(h, tree, {0, 0});
      int k = 1 + static_cast<int>(draw_below(gen, 3));
      std::vector<double> c1;
      std::vector<Cell> ends;
      auto free = map.free_cells();
      for (int i = 0; i < k; ++i) {
        c1.push_back(static_cast<double>(draw_below(gen, 2 * blocks)));
        ends.push_back(free[draw_below(gen, free.size())]);
      }
      auto split = min_max_split(cycle, c1, ends, map, false);
      double opt = enumerate_split_optimum(cycle, c1, ends, map, false);
      c.require(split.realized_max <= 1.25 * opt + 1e-9,
                "split " + std::to_string(split.realized_max) + " vs optimum " +
                    std::to_string(opt) + " in round " + std::to_string(round));
    }
  }
  {  // evaluator replay vs naive re-scan
    for (std::uint64_t seed : {11, 12, 13, 14, 15}) {
      Instance inst = generate_instance(seed, 16, 16, 3, 2, CostMode::kUnit);
      inst.config.ls_iterations = 200;
      SolveResult r = solve(inst);
      c.require(zone_coverage_times(inst, r.plan) == naive_zone_times(inst, r.plan.paths),
                "replay mismatch at seed " + std::to_string(seed));
    }
  }
  c.finish();
}

// 10. bit-identical plans; reports identical once wall times are zeroed
void criterion10() {
  Criterion c("criterion 10: determinism");
  Instance inst = generate_instance(6000, 20, 20, 4, 3, CostMode::kUniform);
  std::string regenerated = serialize_instance(
      generate_instance(6000, 20, 20, 4, 3, CostMode::kUniform));
  c.require(regenerated == serialize_instance(inst), "generator not reproducible");
  inst.config.ls_iterations = 1000;
  SolveResult a = solve(inst, {.run_baseline = true, .keep_trace = true});
  SolveResult b = solve(inst, {.run_baseline = true, .keep_trace = true});
  c.require(serialize_plan(a.plan, inst) == serialize_plan(b.plan, inst),
            "plan files differ");
  auto strip = [](std::string text, const Instance&) {
    auto doc = nlohmann::ordered_json::parse(text);
    for (auto& [key, value] : doc.at("runtime_breakdown").items()) value = 0.0;
    return doc.dump();
  };
  c.require(strip(serialize_report(a, inst), inst) == strip(serialize_report(b, inst), inst),
            "report files differ beyond runtime_breakdown");
  c.finish();
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

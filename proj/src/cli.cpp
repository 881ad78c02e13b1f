#include "pamcpp/cli.hpp"

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pamcpp/bench.hpp"
#include "pamcpp/errors.hpp"
#include "pamcpp/io.hpp"
#include "pamcpp/render_svg.hpp"

namespace pamcpp {

namespace {

struct SizeFlag {
  int width = 0;
  int height = 0;
};

SizeFlag parse_size(const std::string& text) {
  auto sep = text.find('x');
  if (sep == std::string::npos) throw CLI::ValidationError("--size", "expected WxH");
  try {
    return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--size", "expected WxH");
  }
}

CostMode parse_costs(const std::string& text) {
  if (text == "unit") return CostMode::kUnit;
  if (text == "uniform") return CostMode::kUniform;
  throw CLI::ValidationError("--costs", "expected unit or uniform");
}

struct ConfigFlags {
  std::optional<int> ls_iterations;
  std::optional<std::string> schedule;
  std::optional<std::uint64_t> seed;
  bool closed_tour = false;
  bool weighted_time = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--ls-iterations", ls_iterations, "Local search iterations");
    cmd->add_option("--schedule", schedule, "Operator schedule: cosine|static")
        ->check(CLI::IsMember({"cosine", "static"}));
    cmd->add_option("--seed", seed, "Solver seed override");
    cmd->add_flag("--closed-tour", closed_tour, "Return every robot to its start");
    cmd->add_flag("--weighted-time", weighted_time, "Cost-weighted workload accounting");
  }

  void apply(SolverConfig& cfg) const {
    if (ls_iterations) cfg.ls_iterations = *ls_iterations;
    if (schedule)
      cfg.ls_schedule = *schedule == "static" ? LsSchedule::kStatic : LsSchedule::kCosine;
    if (seed) cfg.seed = *seed;
    if (closed_tour) cfg.closed_tour = true;
    if (weighted_time) cfg.weighted_time = true;
  }
};

std::string default_out(const std::string& instance_path, const std::string& suffix) {
  std::string stem = instance_path;
  if (auto pos = stem.rfind(".pamcpp.json"); pos != std::string::npos)
    stem = stem.substr(0, pos);
  else if (auto dot = stem.rfind(".json"); dot != std::string::npos)
    stem = stem.substr(0, dot);
  return stem + suffix;
}

int dispatch(int argc, const char* const* argv) {
  CLI::App app{"Priority-aware multi-robot coverage path planner"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a random instance");
  std::uint64_t gen_seed = 1;
  std::string gen_size = "20x20", gen_costs = "unit", gen_out = "instance.pamcpp.json";
  int gen_zones = 4, gen_robots = 3;
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--size", gen_size, "Map size WxH (even dimensions)");
  gen->add_option("--zones", gen_zones, "Number of zones");
  gen->add_option("--robots", gen_robots, "Number of robots");
  gen->add_option("--costs", gen_costs, "Cost mode: unit|uniform");
  gen->add_option("-o,--output", gen_out, "Output instance path");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  std::string solve_instance, solve_plan_out, solve_report_out;
  bool solve_baseline = false, solve_trace = false;
  ConfigFlags solve_cfg;
  solve_cmd->add_option("instance", solve_instance, "Instance file")->required();
  solve_cmd->add_option("-o,--plan", solve_plan_out, "Plan output path");
  solve_cmd->add_option("--report", solve_report_out, "Report output path");
  solve_cmd->add_flag("--baseline", solve_baseline, "Also run the priority-agnostic baseline");
  solve_cmd->add_flag("--trace", solve_trace, "Record the local-search trace");
  solve_cfg.add_to(solve_cmd);

  // evaluate
  auto* eval_cmd = app.add_subcommand("evaluate", "Re-evaluate a plan against an instance");
  std::string eval_instance, eval_plan, eval_out;
  eval_cmd->add_option("--instance", eval_instance, "Instance file")->required();
  eval_cmd->add_option("--plan", eval_plan, "Plan file")->required();
  eval_cmd->add_option("-o,--output", eval_out, "Metrics output path");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Seeded solver-vs-baseline trials");
  std::string bench_instance_path, bench_size = "20x20", bench_costs = "unit";
  std::string bench_sweep, bench_out;
  int bench_zones = 4, bench_robots = 3, bench_trials = 10;
  std::uint64_t bench_seed = 1;
  ConfigFlags bench_cfg;
  bench_cmd->add_option("--instance", bench_instance_path,
                        "Fixed instance (starts resampled per trial)");
  bench_cmd->add_option("--size", bench_size, "Generated map size WxH");
  bench_cmd->add_option("--zones", bench_zones, "Generated zone count");
  bench_cmd->add_option("--robots", bench_robots, "Robot count");
  bench_cmd->add_option("--costs", bench_costs, "Cost mode: unit|uniform");
  bench_cmd->add_option("--trials", bench_trials, "Trials per row");
  bench_cmd->add_option("--bench-seed", bench_seed, "First trial seed");
  bench_cmd->add_option("--sweep", bench_sweep, "e.g. robots=2,4,6,8");
  bench_cmd->add_option("-o,--output", bench_out, "Aggregate JSON output path");
  bench_cfg.add_to(bench_cmd);

  // render
  auto* render_cmd = app.add_subcommand("render", "Render an instance (and plan) to SVG");
  std::string render_instance, render_plan, render_out = "out.svg";
  render_cmd->add_option("--instance", render_instance, "Instance file")->required();
  render_cmd->add_option("--plan", render_plan, "Plan file");
  render_cmd->add_option("-o,--output", render_out, "SVG output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*gen) {
    SizeFlag size = parse_size(gen_size);
    if (size.width % 2 != 0 || size.height % 2 != 0) {
      std::cerr << "error: dimensions must be even\n";
      return 2;
    }
    Instance instance = generate_instance(gen_seed, size.width, size.height, gen_zones,
                                          gen_robots, parse_costs(gen_costs));
    write_file(gen_out, serialize_instance(instance));
    std::cout << "wrote " << gen_out << "\n";
    return 0;
  }

  if (*solve_cmd) {
    Instance instance = parse_instance(read_file(solve_instance));
    solve_cfg.apply(instance.config);
    SolveResult result =
        solve(instance, {.run_baseline = solve_baseline, .keep_trace = solve_trace});
    std::string plan_path = solve_plan_out.empty()
                                ? default_out(solve_instance, ".plan.json")
                                : solve_plan_out;
    std::string report_path = solve_report_out.empty()
                                  ? default_out(solve_instance, ".report.json")
                                  : solve_report_out;
    write_file(plan_path, serialize_plan(result.plan, instance));
    write_file(report_path, serialize_report(result, instance));
    std::cout << "weighted_latency " << result.metrics.weighted_latency << " makespan "
              << result.metrics.makespan << " mmr " << result.metrics.mmr << "\n";
    return 0;
  }

  if (*eval_cmd) {
    Instance instance = parse_instance(read_file(eval_instance));
    FullPlan plan = parse_plan(read_file(eval_plan), instance);
    check_plan(instance, plan);
    Metrics metrics = evaluate(instance, plan);
    std::string text = serialize_metrics(metrics);
    if (eval_out.empty())
      std::cout << text;
    else
      write_file(eval_out, text);
    return 0;
  }

  if (*bench_cmd) {
    BenchOptions options;
    options.trials = bench_trials;
    options.seed = bench_seed;
    if (!bench_sweep.empty()) {
      if (bench_sweep.rfind("robots=", 0) != 0)
        throw CLI::ValidationError("--sweep", "expected robots=a,b,...");
      std::string list = bench_sweep.substr(7);
      std::size_t pos = 0;
      while (pos < list.size()) {
        auto comma = list.find(',', pos);
        if (comma == std::string::npos) comma = list.size();
        try {
          int count = std::stoi(list.substr(pos, comma - pos));
          if (count < 1) throw std::invalid_argument("robot count");
          options.robot_sweep.push_back(count);
        } catch (const std::exception&) {
          throw CLI::ValidationError("--sweep", "expected robots=a,b,...");
        }
        pos = comma + 1;
      }
    }
    std::vector<BenchRow> rows;
    if (!bench_instance_path.empty()) {
      Instance base = parse_instance(read_file(bench_instance_path));
      bench_cfg.apply(base.config);
      if (options.robot_sweep.empty())
        options.robot_sweep = {static_cast<int>(base.robots.size())};
      rows = bench_instance(base, options);
    } else {
      SizeFlag size = parse_size(bench_size);
      SolverConfig cfg;
      bench_cfg.apply(cfg);
      rows = bench_generated(size.width, size.height, bench_zones, bench_robots,
                             parse_costs(bench_costs), cfg, options);
    }
    std::cout << format_bench_table(rows);
    if (!bench_out.empty()) write_file(bench_out, serialize_bench(rows));
    return 0;
  }

  if (*render_cmd) {
    Instance instance = parse_instance(read_file(render_instance));
    std::string svg;
    if (render_plan.empty()) {
      svg = render_svg(instance, nullptr);
    } else {
      FullPlan plan = parse_plan(read_file(render_plan), instance);
      check_plan(instance, plan);
      svg = render_svg(instance, &plan);
    }
    write_file(render_out, svg);
    return 0;
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  try {
    return dispatch(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PlacementError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
}

}  // namespace pamcpp

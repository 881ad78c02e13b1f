#include "pamcpp/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pamcpp/errors.hpp"

namespace pamcpp {

using ordered_json = nlohmann::ordered_json;

namespace {

Cell parse_cell(const ordered_json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer())
    throw ParseError(what + " must be an [x,y] pair");
  return {j[0].get<int>(), j[1].get<int>()};
}

const ordered_json& require(const ordered_json& doc, const char* field) {
  auto it = doc.find(field);
  if (it == doc.end()) throw ParseError(std::string("missing field: ") + field);
  return *it;
}

SolverConfig parse_config(const ordered_json& j) {
  SolverConfig cfg;
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("ls_iterations")) cfg.ls_iterations = j.at("ls_iterations").get<int>();
  if (j.contains("ls_schedule")) {
    std::string s = j.at("ls_schedule").get<std::string>();
    if (s == "cosine")
      cfg.ls_schedule = LsSchedule::kCosine;
    else if (s == "static")
      cfg.ls_schedule = LsSchedule::kStatic;
    else
      throw ParseError("ls_schedule must be \"cosine\" or \"static\"");
  }
  if (j.contains("ls_period_fraction"))
    cfg.ls_period_fraction = j.at("ls_period_fraction").get<double>();
  if (j.contains("closed_tour")) cfg.closed_tour = j.at("closed_tour").get<bool>();
  if (j.contains("weighted_time")) cfg.weighted_time = j.at("weighted_time").get<bool>();
  return cfg;
}

ordered_json config_json(const SolverConfig& cfg) {
  ordered_json j;
  j["seed"] = cfg.seed;
  j["ls_iterations"] = cfg.ls_iterations;
  j["ls_schedule"] = cfg.ls_schedule == LsSchedule::kCosine ? "cosine" : "static";
  j["ls_period_fraction"] = cfg.ls_period_fraction;
  j["closed_tour"] = cfg.closed_tour;
  j["weighted_time"] = cfg.weighted_time;
  return j;
}

ordered_json metrics_json(const Metrics& m) {
  ordered_json j;
  j["zone_times"] = m.zone_times;
  j["weighted_latency"] = m.weighted_latency;
  j["makespan"] = m.makespan;
  j["mmr"] = m.mmr;
  return j;
}

// zone indices -> zone ids, per robot
ordered_json assignment_json(const Assignment& assignment, const Instance& instance) {
  ordered_json out = ordered_json::array();
  for (const auto& seq : assignment.sequences) {
    ordered_json row = ordered_json::array();
    for (int j : seq) row.push_back(instance.zones[j].id);
    out.push_back(row);
  }
  return out;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }

  try {
    Instance instance;
    instance.map.width = require(doc, "width").get<int>();
    instance.map.height = require(doc, "height").get<int>();
    if (instance.map.width <= 0 || instance.map.height <= 0)
      throw ValidationError("empty map");
    if (instance.map.width % 2 != 0 || instance.map.height % 2 != 0)
      throw ValidationError("dimensions must be even");

    const auto& rows = require(doc, "rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != instance.map.height)
      throw ParseError("rows must list height strings");
    instance.map.obstacle.assign(instance.map.width * instance.map.height, 0);
    instance.map.cost.assign(instance.map.width * instance.map.height, 0.0);
    for (int y = 0; y < instance.map.height; ++y) {
      std::string row = rows[y].get<std::string>();
      if (static_cast<int>(row.size()) != instance.map.width)
        throw ParseError("row " + std::to_string(y) + " has wrong length");
      for (int x = 0; x < instance.map.width; ++x) {
        if (row[x] == '#')
          instance.map.obstacle[instance.map.index(x, y)] = 1;
        else if (row[x] != '.')
          throw ParseError("invalid character in row " + std::to_string(y));
      }
    }

    if (doc.contains("cell_costs")) {
      const auto& costs = doc.at("cell_costs");
      std::size_t next = 0;
      for (int y = 0; y < instance.map.height; ++y)
        for (int x = 0; x < instance.map.width; ++x) {
          if (instance.map.obstacle[instance.map.index(x, y)]) continue;
          if (next >= costs.size())
            throw ParseError("cell_costs shorter than the free-cell count");
          instance.map.cost[instance.map.index(x, y)] = costs[next++].get<double>();
        }
      if (next != costs.size())
        throw ParseError("cell_costs longer than the free-cell count");
    } else {
      for (int i = 0; i < instance.map.width * instance.map.height; ++i)
        if (!instance.map.obstacle[i]) instance.map.cost[i] = 1.0;
    }

    for (const auto& zj : require(doc, "zones")) {
      Zone zone;
      zone.id = require(zj, "id").get<int>();
      zone.weight = require(zj, "weight").get<double>();
      for (const auto& cj : require(zj, "cells"))
        zone.cells.push_back(parse_cell(cj, "zone cell"));
      instance.zones.push_back(std::move(zone));
    }

    for (const auto& rj : require(doc, "robots"))
      instance.robots.push_back(parse_cell(rj, "robot start"));

    if (doc.contains("config")) instance.config = parse_config(doc.at("config"));

    validate_instance(instance);
    return instance;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

std::string serialize_instance(const Instance& instance) {
  ordered_json doc;
  doc["width"] = instance.map.width;
  doc["height"] = instance.map.height;

  ordered_json rows = ordered_json::array();
  for (int y = 0; y < instance.map.height; ++y) {
    std::string row(instance.map.width, '.');
    for (int x = 0; x < instance.map.width; ++x)
      if (instance.map.obstacle[instance.map.index(x, y)]) row[x] = '#';
    rows.push_back(row);
  }
  doc["rows"] = rows;

  bool unit = true;
  for (int i = 0; i < instance.map.width * instance.map.height && unit; ++i)
    if (!instance.map.obstacle[i] && instance.map.cost[i] != 1.0) unit = false;
  if (!unit) {
    ordered_json costs = ordered_json::array();
    for (int y = 0; y < instance.map.height; ++y)
      for (int x = 0; x < instance.map.width; ++x)
        if (!instance.map.obstacle[instance.map.index(x, y)])
          costs.push_back(instance.map.cost[instance.map.index(x, y)]);
    doc["cell_costs"] = costs;
  }

  ordered_json zones = ordered_json::array();
  for (const Zone& zone : instance.zones) {
    ordered_json zj;
    zj["id"] = zone.id;
    zj["weight"] = zone.weight;
    ordered_json cells = ordered_json::array();
    for (Cell c : zone.cells) cells.push_back({c.x, c.y});
    zj["cells"] = cells;
    zones.push_back(zj);
  }
  doc["zones"] = zones;

  ordered_json robots = ordered_json::array();
  for (Cell r : instance.robots) robots.push_back({r.x, r.y});
  doc["robots"] = robots;
  doc["config"] = config_json(instance.config);
  return doc.dump(2) + "\n";
}

std::string instance_digest(const Instance& instance) {
  std::string text = serialize_instance(instance);
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string serialize_plan(const FullPlan& plan, const Instance& instance) {
  ordered_json doc;
  ordered_json robots = ordered_json::array();
  for (std::size_t i = 0; i < plan.paths.size(); ++i) {
    ordered_json rj;
    ordered_json path = ordered_json::array();
    for (Cell c : plan.paths[i].cells) path.push_back({c.x, c.y});
    rj["path"] = path;
    rj["phase_boundary"] = plan.phase_boundary[i];
    robots.push_back(rj);
  }
  doc["robots"] = robots;
  doc["assignment"] = assignment_json(plan.assignment, instance);
  return doc.dump(2) + "\n";
}

FullPlan parse_plan(const std::string& text, const Instance& instance) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed plan: ") + e.what());
  }
  try {
    FullPlan plan;
    for (const auto& rj : require(doc, "robots")) {
      GridWalk walk;
      for (const auto& cj : require(rj, "path"))
        walk.cells.push_back(parse_cell(cj, "path cell"));
      plan.paths.push_back(std::move(walk));
      plan.phase_boundary.push_back(require(rj, "phase_boundary").get<int>());
    }
    plan.assignment.sequences.assign(plan.paths.size(), {});
    if (doc.contains("assignment")) {
      const auto& rows = doc.at("assignment");
      for (std::size_t i = 0; i < rows.size() && i < plan.paths.size(); ++i) {
        for (const auto& idj : rows[i]) {
          int id = idj.get<int>();
          int index = -1;
          for (std::size_t j = 0; j < instance.zones.size(); ++j)
            if (instance.zones[j].id == id) index = static_cast<int>(j);
          if (index < 0)
            throw ValidationError("unknown zone id " + std::to_string(id) + " in plan");
          plan.assignment.sequences[i].push_back(index);
        }
      }
    }
    return plan;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed plan: ") + e.what());
  }
}

std::string serialize_metrics(const Metrics& metrics) {
  return metrics_json(metrics).dump(2) + "\n";
}

std::string serialize_report(const SolveResult& result, const Instance& instance) {
  ordered_json doc;
  doc["instance_digest"] = result.plan.instance_digest;
  doc["assignment"] = assignment_json(result.plan.assignment, instance);
  doc["metrics"] = metrics_json(result.metrics);
  if (result.baseline_metrics)
    doc["metrics_baseline"] = metrics_json(*result.baseline_metrics);
  if (!result.ls_trace.empty()) {
    ordered_json trace = ordered_json::array();
    for (const LsTraceEntry& e : result.ls_trace) {
      ordered_json tj;
      tj["iteration"] = e.iteration;
      tj["operator"] = e.move_op ? "move" : "swap";
      tj["accepted"] = e.accepted;
      tj["surrogate"] = e.surrogate;
      trace.push_back(tj);
    }
    doc["ls_trace"] = trace;
  }
  ordered_json rt;
  rt["cost_calculation"] = result.stage_seconds.cost_calculation;
  rt["zone_assignment"] = result.stage_seconds.zone_assignment;
  rt["sequential_tree_traversal"] = result.stage_seconds.sequential_tree_traversal;
  rt["residual_path_planning"] = result.stage_seconds.residual_path_planning;
  doc["runtime_breakdown"] = rt;
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

}  // namespace pamcpp

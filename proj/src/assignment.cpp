#include "pamcpp/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "pamcpp/errors.hpp"
#include "pamcpp/rng.hpp"

namespace pamcpp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> multi_source_distances(const HyperGraph& h,
                                           const std::vector<int>& sources) {
  std::vector<double> dist(h.hv_count, kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (int s : sources) {
    dist[s] = 0.0;
    queue.emplace(0.0, s);
  }
  std::vector<char> done(h.hv_count, 0);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (auto [v, w] : h.adjacency[u]) {
      if (d + w < dist[v]) {
        dist[v] = d + w;
        queue.emplace(dist[v], v);
      }
    }
  }
  return dist;
}

}  // namespace

CostTables compute_cost_tables(const HyperGraph& h, const Instance& instance,
                               const std::vector<std::vector<int>>& zone_hvs) {
  const int n = static_cast<int>(zone_hvs.size());
  const int k = static_cast<int>(instance.robots.size());
  CostTables tables;
  tables.zone_internal.resize(n);
  tables.depot_to_zone.assign(k, std::vector<double>(n, 0.0));
  tables.zone_to_zone.assign(n, std::vector<double>(n, 0.0));

  for (int j = 0; j < n; ++j)
    tables.zone_internal[j] = kruskal_mst(h, zone_hvs[j]).total_cost;

  for (int i = 0; i < k; ++i) {
    int start_hv = h.hv_of(instance.map, instance.robots[i]);
    auto r = dijkstra(h, start_hv);
    for (int j = 0; j < n; ++j) {
      double best = kInf;
      for (int u : zone_hvs[j]) best = std::min(best, r.dist[u]);
      tables.depot_to_zone[i][j] = best;
    }
  }

  for (int j = 0; j < n; ++j) {
    auto dist = multi_source_distances(h, zone_hvs[j]);
    for (int j2 = j + 1; j2 < n; ++j2) {
      double best = kInf;
      for (int u : zone_hvs[j2]) best = std::min(best, dist[u]);
      tables.zone_to_zone[j][j2] = best;
      tables.zone_to_zone[j2][j] = best;
    }
  }
  return tables;
}

double surrogate_latency(const CostTables& tables, const std::vector<double>& weights,
                         const std::vector<std::vector<int>>& sequences) {
  double total = 0.0;
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    double arrival = 0.0;
    int last = -1;
    for (int j : sequences[i]) {
      double travel = last < 0 ? tables.depot_to_zone[i][j] : tables.zone_to_zone[last][j];
      arrival += travel + tables.zone_internal[j];
      total += weights[j] * arrival;
      last = j;
    }
  }
  return total;
}

Assignment greedy_assign(const CostTables& tables, const std::vector<double>& weights,
                         int n_robots) {
  const int n = tables.zone_count();
  Assignment out;
  out.sequences.assign(n_robots, {});
  std::vector<char> assigned(n, 0);
  std::vector<double> elapsed(n_robots, 0.0);

  for (int round = 0; round < n; ++round) {
    double best_delta = kInf;
    int best_robot = -1, best_zone = -1;
    for (int i = 0; i < n_robots; ++i) {
      for (int j = 0; j < n; ++j) {
        if (assigned[j]) continue;
        double travel = out.sequences[i].empty()
                            ? tables.depot_to_zone[i][j]
                            : tables.zone_to_zone[out.sequences[i].back()][j];
        double delta = weights[j] * (elapsed[i] + travel + tables.zone_internal[j]);
        if (delta < best_delta) {
          best_delta = delta;
          best_robot = i;
          best_zone = j;
        }
      }
    }
    double travel = out.sequences[best_robot].empty()
                        ? tables.depot_to_zone[best_robot][best_zone]
                        : tables.zone_to_zone[out.sequences[best_robot].back()][best_zone];
    out.sequences[best_robot].push_back(best_zone);
    elapsed[best_robot] += travel + tables.zone_internal[best_zone];
    assigned[best_zone] = 1;
  }
  out.surrogate_cost = surrogate_latency(tables, weights, out.sequences);
  return out;
}

double move_probability(const SolverConfig& config, int iteration) {
  if (config.ls_schedule == LsSchedule::kStatic) return 0.5;
  int period = std::max(
      1, static_cast<int>(std::ceil(config.ls_period_fraction * config.ls_iterations)));
  return 0.5 * (1.0 + std::cos(2.0 * std::numbers::pi * iteration / period));
}

namespace {

struct ZoneSlot {
  int robot = 0;
  int pos = 0;
};

ZoneSlot locate(const std::vector<std::vector<int>>& sequences, int zone) {
  for (std::size_t i = 0; i < sequences.size(); ++i)
    for (std::size_t p = 0; p < sequences[i].size(); ++p)
      if (sequences[i][p] == zone) return {static_cast<int>(i), static_cast<int>(p)};
  throw InternalError("zone missing from assignment");
}

}  // namespace

Assignment local_search(const Assignment& initial, const CostTables& tables,
                        const std::vector<double>& weights, const SolverConfig& config,
                        std::vector<LsTraceEntry>* trace) {
  const int n = tables.zone_count();
  const int k = static_cast<int>(initial.sequences.size());
  Assignment current = initial;
  current.surrogate_cost = surrogate_latency(tables, weights, current.sequences);
  if (config.ls_iterations == 0 || n < 2) return current;

  std::mt19937_64 gen(config.seed);
  for (int t = 0; t < config.ls_iterations; ++t) {
    bool use_move = draw_unit(gen) < move_probability(config, t);
    auto candidate = current.sequences;
    if (use_move) {
      int zone = static_cast<int>(draw_below(gen, n));
      ZoneSlot slot = locate(candidate, zone);
      candidate[slot.robot].erase(candidate[slot.robot].begin() + slot.pos);
      int target = static_cast<int>(draw_below(gen, k));
      int pos = static_cast<int>(draw_below(gen, candidate[target].size() + 1));
      candidate[target].insert(candidate[target].begin() + pos, zone);
    } else {
      int a = static_cast<int>(draw_below(gen, n));
      int b = static_cast<int>(draw_below(gen, n - 1));
      if (b >= a) ++b;
      ZoneSlot sa = locate(candidate, a);
      ZoneSlot sb = locate(candidate, b);
      std::swap(candidate[sa.robot][sa.pos], candidate[sb.robot][sb.pos]);
    }
    double cost = surrogate_latency(tables, weights, candidate);
    bool accepted = cost < current.surrogate_cost;
    if (accepted) {
      current.sequences = std::move(candidate);
      current.surrogate_cost = cost;
    }
    if (trace) trace->push_back({t, use_move, accepted, current.surrogate_cost});
  }
  return current;
}

namespace {

struct OracleState {
  const CostTables* tables = nullptr;
  const std::vector<double>* weights = nullptr;
  std::vector<std::vector<int>> sequences;
  double best_cost = kInf;
  std::vector<int> best_encoding;
  std::vector<std::vector<int>> best_sequences;

  std::vector<int> encode() const {
    std::vector<int> enc;
    for (const auto& seq : sequences) {
      for (int j : seq) enc.push_back(j);
      enc.push_back(-1);
    }
    return enc;
  }

  void visit_leaf() {
    double cost = surrogate_latency(*tables, *weights, sequences);
    if (cost < best_cost) {
      best_cost = cost;
      best_sequences = sequences;
      best_encoding = encode();
    } else if (cost == best_cost) {
      auto enc = encode();
      if (enc < best_encoding) {
        best_sequences = sequences;
        best_encoding = enc;
      }
    }
  }

  void place(int zone, int n_zones) {
    if (zone == n_zones) {
      visit_leaf();
      return;
    }
    for (auto& seq : sequences) {
      for (std::size_t pos = 0; pos <= seq.size(); ++pos) {
        seq.insert(seq.begin() + pos, zone);
        place(zone + 1, n_zones);
        seq.erase(seq.begin() + pos);
      }
    }
  }
};

}  // namespace

Assignment brute_force_assign(const CostTables& tables, const std::vector<double>& weights,
                              int n_robots) {
  const int n = tables.zone_count();
  if (n > 7 || n_robots > 3)
    throw ValidationError("instance too large for oracle");

  OracleState state;
  state.tables = &tables;
  state.weights = &weights;
  state.sequences.assign(n_robots, {});
  state.place(0, n);

  Assignment out;
  out.sequences = state.best_sequences.empty() ? state.sequences : state.best_sequences;
  out.surrogate_cost = surrogate_latency(tables, weights, out.sequences);
  return out;
}

}  // namespace pamcpp

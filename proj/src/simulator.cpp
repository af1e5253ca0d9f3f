/*
 * Copyright (C) 2026 The wsnlife Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "wsnlife/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <random>
#include <stdexcept>
#include <thread>

#include "wsnlife/error.hpp"
#include "wsnlife/numeric.hpp"

namespace wsnlife {

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::kBalancedRotating: return "balanced-rotating";
    case Strategy::kStaticTree: return "static-tree";
    case Strategy::kRoundRobinParent: return "round-robin-parent";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
  for (Strategy s : all_strategies()) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

std::vector<Strategy> all_strategies() {
  return {Strategy::kBalancedRotating, Strategy::kStaticTree, Strategy::kRoundRobinParent};
}

void SimConfig::validate() const {
  if (!(battery_j > 0.0)) throw InvalidArgument("battery energy must be > 0 J");
  if (max_iterations < 1) throw InvalidArgument("max_iterations must be >= 1");
}

namespace {

using Counts = std::vector<std::size_t>;

/// Assigns one iteration's packet workload to every node.
class Router {
 public:
  virtual ~Router() = default;
  virtual void assign(std::int64_t iteration, Counts& received, Counts& transmitted) = 0;
};

class BalancedRotatingRouter final : public Router {
 public:
  BalancedRotatingRouter(const SpherePartition& partition, std::mt19937_64& rng) : partition_(partition) {
    for (const auto& members : partition.spheres()) {
      auto order = members;
      std::shuffle(order.begin(), order.end(), rng);
      order_.push_back(std::move(order));
    }
  }

  void assign(std::int64_t iteration, Counts& received, Counts& transmitted) override {
    std::size_t incoming = 0;
    for (std::size_t j = partition_.depth(); j >= 1; --j) {
      const auto& order = order_[j];
      const std::size_t s = order.size();
      const std::size_t share = incoming / s;
      const std::size_t extra = incoming % s;
      const std::size_t offset = static_cast<std::size_t>(iteration % static_cast<std::int64_t>(s));
      std::size_t outgoing = 0;
      for (std::size_t q = 0; q < s; ++q) {
        // Packet p lands on position (offset + p) mod s.
        const std::size_t residue = (q + s - offset) % s;
        const std::size_t r = share + (residue < extra ? 1 : 0);
        received[order[q]] = r;
        transmitted[order[q]] = r + 1;
        outgoing += r + 1;
      }
      incoming = outgoing;
    }
    const std::size_t base = partition_.sphere(0).front();
    received[base] = incoming;
    transmitted[base] = 0;
  }

 private:
  const SpherePartition& partition_;
  std::vector<std::vector<std::size_t>> order_;
};

/// Shared machinery for strategies that forward along real graph edges.
class ParentRouter : public Router {
 public:
  ParentRouter(const Topology& topology, const SpherePartition& partition)
      : partition_(partition), candidates_(topology.size()) {
    for (std::size_t v = 0; v < topology.size(); ++v) {
      const std::size_t j = partition.sphere_of(v);
      if (j == 0) continue;
      for (std::size_t w : topology.neighbors(v)) {
        if (partition.sphere_of(w) + 1 == j) candidates_[v].push_back(w);
      }
      if (candidates_[v].empty()) {
        throw InvalidStrategyForTopology("node '" + topology.nodes()[v].str() +
                                         "' has no neighbor in the next inner sphere");
      }
    }
  }

  void assign(std::int64_t iteration, Counts& received, Counts& transmitted) override {
    std::fill(received.begin(), received.end(), 0);
    std::fill(transmitted.begin(), transmitted.end(), 0);
    for (std::size_t j = partition_.depth(); j >= 1; --j) {
      for (std::size_t v : partition_.sphere(j)) {
        transmitted[v] = received[v] + 1;
        received[parent(v, iteration)] += transmitted[v];
      }
    }
  }

 protected:
  virtual std::size_t parent(std::size_t node, std::int64_t iteration) const = 0;

  const SpherePartition& partition_;
  std::vector<std::vector<std::size_t>> candidates_;
};

class StaticTreeRouter final : public ParentRouter {
 public:
  StaticTreeRouter(const Topology& topology, const SpherePartition& partition, std::mt19937_64& rng)
      : ParentRouter(topology, partition), parent_(topology.size(), 0) {
    for (std::size_t v = 0; v < topology.size(); ++v) {
      if (!candidates_[v].empty()) parent_[v] = candidates_[v][rng() % candidates_[v].size()];
    }
  }

 protected:
  std::size_t parent(std::size_t node, std::int64_t) const override { return parent_[node]; }

 private:
  std::vector<std::size_t> parent_;
};

class RoundRobinParentRouter final : public ParentRouter {
 public:
  RoundRobinParentRouter(const Topology& topology, const SpherePartition& partition, std::mt19937_64& rng)
      : ParentRouter(topology, partition), offset_(topology.size(), 0) {
    for (std::size_t v = 0; v < topology.size(); ++v) {
      if (!candidates_[v].empty()) offset_[v] = rng() % candidates_[v].size();
    }
  }

 protected:
  std::size_t parent(std::size_t node, std::int64_t iteration) const override {
    const auto& c = candidates_[node];
    return c[(offset_[node] + static_cast<std::uint64_t>(iteration)) % c.size()];
  }

 private:
  std::vector<std::uint64_t> offset_;
};

std::unique_ptr<Router> make_router(const Topology& topology, const SpherePartition& partition,
                                    const SimConfig& config, std::mt19937_64& rng) {
  switch (config.strategy) {
    case Strategy::kBalancedRotating: return std::make_unique<BalancedRotatingRouter>(partition, rng);
    case Strategy::kStaticTree: return std::make_unique<StaticTreeRouter>(topology, partition, rng);
    case Strategy::kRoundRobinParent: return std::make_unique<RoundRobinParentRouter>(topology, partition, rng);
  }
  throw InvalidArgument("unknown routing strategy");
}

/// Every packet crosses each sphere boundary exactly once: S_j receives one
/// packet per node outside B_j and transmits those plus one of its own each.
void check_conservation(const SpherePartition& partition, const Counts& received, const Counts& transmitted) {
  const std::size_t n = partition.total();
  for (std::size_t j = 0; j <= partition.depth(); ++j) {
    std::size_t in = 0;
    std::size_t out = 0;
    for (std::size_t v : partition.sphere(j)) {
      in += received[v];
      out += transmitted[v];
    }
    const std::size_t expected_in = j == 0 ? n - partition.size_of(0) : n - partition.ball_size(j);
    const std::size_t expected_out = j == 0 ? 0 : expected_in + partition.size_of(j);
    if (in != expected_in || out != expected_out) {
      throw std::logic_error("packet conservation violated in sphere " + std::to_string(j));
    }
  }
}

}  // namespace

SimResult simulate(const Topology& topology, const SpherePartition& partition, const EnergyModel& model,
                   const SimConfig& config, const IterationObserver& observer) {
  config.validate();
  if (partition.total() != topology.size()) throw InvalidArgument("partition does not match topology");
  if (partition.depth() < 1) throw InvalidArgument("network has no sensor nodes besides the base station");

  std::mt19937_64 rng(config.seed);
  auto router = make_router(topology, partition, config, rng);

  const double e_send = send_energy(model, config.payload_bytes);
  const double e_recv = receive_energy(model, config.payload_bytes);
  const double flat = model.overhearing_per_iteration;
  const double budget = config.battery_j * 1000.0;
  const std::size_t n = topology.size();
  const std::size_t base = topology.base_index();

  Counts received(n, 0);
  Counts transmitted(n, 0);
  Counts total_received(n, 0);
  Counts total_transmitted(n, 0);
  std::vector<double> spent(n, 0.0);

  // Costs are recomputed from integer packet totals rather than accumulated,
  // so rounding error does not grow with the iteration count.
  auto cost = [&](std::size_t rx, std::size_t tx, std::int64_t iterations) {
    return static_cast<double>(rx) * e_recv + static_cast<double>(tx) * e_send +
           static_cast<double>(iterations) * flat;
  };

  SimResult result;
  result.strategy = config.strategy;
  result.seed = config.seed;

  for (std::int64_t t = 0;; ++t) {
    if (t == config.max_iterations) {
      result.cap_reached = true;
      break;
    }
    router->assign(t, received, transmitted);
    check_conservation(partition, received, transmitted);

    for (std::size_t v = 0; v < n && !result.first_dead; ++v) {
      if (v == base) continue;
      if (!fits_budget(cost(total_received[v] + received[v], total_transmitted[v] + transmitted[v], t + 1), budget)) {
        result.first_dead = topology.nodes()[v];
      }
    }
    if (result.first_dead) break;

    for (std::size_t v = 0; v < n; ++v) {
      total_received[v] += received[v];
      total_transmitted[v] += transmitted[v];
      spent[v] = cost(total_received[v], total_transmitted[v], v == base ? 0 : t + 1);
    }
    result.completed_iterations = t + 1;
    if (observer) observer(IterationLoad{t + 1, received, transmitted, spent});
  }

  for (std::size_t v = 0; v < n; ++v) {
    if (v == base) {
      result.base_spent = spent[v];
    } else {
      result.per_node_spent.emplace(topology.nodes()[v], spent[v]);
    }
  }
  result.per_sphere_max_iteration_energy.assign(partition.depth(), 0.0);
  if (result.completed_iterations > 0) {
    const double iterations = static_cast<double>(result.completed_iterations);
    for (std::size_t j = 1; j <= partition.depth(); ++j) {
      double best = 0.0;
      for (std::size_t v : partition.sphere(j)) best = std::max(best, spent[v] / iterations);
      result.per_sphere_max_iteration_energy[j - 1] = best;
    }
  }
  return result;
}

std::vector<SimResult> simulate_all(const Topology& topology, const SpherePartition& partition,
                                    const EnergyModel& model, std::span<const SimConfig> configs, unsigned threads) {
  std::vector<SimResult> results(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(configs.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      try {
        results[i] = simulate(topology, partition, model, configs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

BoundsVerdict validate_against_bounds(const SimResult& result, const BoundsReport& report) {
  BoundsVerdict verdict;
  verdict.completed_iterations = result.completed_iterations;
  verdict.lower_iterations = report.t_max_lower_iterations;
  verdict.upper_iterations = report.t_max_upper_iterations;
  verdict.lower_margin = verdict.completed_iterations - verdict.lower_iterations;
  verdict.upper_margin = verdict.upper_iterations - verdict.completed_iterations;
  verdict.lower_checked = !(result.cap_reached && verdict.lower_margin < 0);

  if (verdict.upper_margin < 0) {
    throw BoundViolation(std::string(to_string(result.strategy)) + ": " +
                         std::to_string(verdict.completed_iterations) + " iterations exceed the upper bound " +
                         std::to_string(verdict.upper_iterations));
  }
  if (verdict.lower_checked && verdict.lower_margin < 0) {
    throw BoundViolation(std::string(to_string(result.strategy)) + ": " +
                         std::to_string(verdict.completed_iterations) + " iterations fall below the lower bound " +
                         std::to_string(verdict.lower_iterations));
  }
  return verdict;
}

}  // namespace wsnlife

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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsnlife/bounds.hpp"
#include "wsnlife/energy_model.hpp"
#include "wsnlife/topology.hpp"

namespace wsnlife {

/// How packets are routed inward each iteration.
enum class Strategy {
  /// Sphere-level routing: any node of S_j may relay for any node of S_{j+1}.
  /// Incoming packets are dealt round-robin over the sphere, starting at an
  /// offset that advances by one every iteration.
  kBalancedRotating,
  /// Every node forwards to one fixed neighbor in the next inner sphere.
  kStaticTree,
  /// Every node cycles through its inner-sphere neighbors, one per iteration.
  kRoundRobinParent,
};

std::string_view to_string(Strategy strategy);
std::optional<Strategy> parse_strategy(std::string_view text);
std::vector<Strategy> all_strategies();

struct SimConfig {
  Strategy strategy = Strategy::kBalancedRotating;
  std::size_t payload_bytes = 0;
  double battery_j = 0.0;  ///< per sensor node
  std::int64_t max_iterations = 1'000'000'000;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SimResult {
  Strategy strategy = Strategy::kBalancedRotating;
  std::uint64_t seed = 0;
  /// Iterations in which every packet reached the base station.
  std::int64_t completed_iterations = 0;
  /// Node that could not afford the next iteration; empty if the cap was hit.
  std::optional<NodeId> first_dead;
  bool cap_reached = false;
  /// Energy spent by each sensor node (mJ). The base station is reported
  /// separately since its supply is unlimited.
  std::map<NodeId, double> per_node_spent;
  double base_spent = 0.0;
  /// Element j-1: largest per-iteration average energy among the members of
  /// sphere j (mJ). Zero when no iteration completed.
  std::vector<double> per_sphere_max_iteration_energy;
};

/// Per-node packet counts of one completed iteration, indexed like
/// Topology::nodes().
struct IterationLoad {
  std::int64_t iteration = 0;  ///< 1-based
  std::span<const std::size_t> received;
  std::span<const std::size_t> transmitted;
  std::span<const double> spent;  ///< cumulative, mJ
};

using IterationObserver = std::function<void(const IterationLoad&)>;

/// Play the collection protocol iteration by iteration until some sensor node
/// cannot afford its workload for the next iteration. Only fully completed
/// iterations count.
SimResult simulate(const Topology& topology, const SpherePartition& partition, const EnergyModel& model,
                   const SimConfig& config, const IterationObserver& observer = {});

/// Independent simulations over one network, run on up to `threads` worker
/// threads. Results are returned in the order of `configs`.
std::vector<SimResult> simulate_all(const Topology& topology, const SpherePartition& partition,
                                    const EnergyModel& model, std::span<const SimConfig> configs,
                                    unsigned threads = 0);

struct BoundsVerdict {
  std::int64_t completed_iterations = 0;
  std::int64_t lower_iterations = 0;
  std::int64_t upper_iterations = 0;
  std::int64_t lower_margin = 0;  ///< completed - lower
  std::int64_t upper_margin = 0;  ///< upper - completed
  /// False when the run stopped at its iteration cap below the lower bound,
  /// so only the upper side could be checked.
  bool lower_checked = true;
};

/// Check that the simulated lifetime lies within the analytical bracket.
/// Throws BoundViolation otherwise.
BoundsVerdict validate_against_bounds(const SimResult& result, const BoundsReport& report);

}  // namespace wsnlife

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
#include <vector>

#include "wsnlife/energy_model.hpp"
#include "wsnlife/topology.hpp"

namespace wsnlife {

/// Minimum per-iteration energy (mJ) of a node in sphere `i` when the packets
/// entering and leaving the sphere are split evenly across its members:
///
///   m_i = (N - b_i) / s_i * e_recv + (N - b_i + s_i) / s_i * e_send
///
/// Throws SphereIndexOutOfRange unless 1 <= i <= depth().
double sphere_min_energy(const SpherePartition& partition, std::size_t i, double e_recv, double e_send);

/// Largest per-iteration energy (mJ) any node can be asked to spend: it
/// receives every packet except its own and those of the base's sphere, and
/// forwards them all plus its own.
double worst_case_node_energy(const SpherePartition& partition, double e_recv, double e_send);

/// Analytical lifetime bracket of a continuous-collection network.
struct BoundsReport {
  // inputs
  double battery_j = 0.0;
  std::size_t payload_bytes = 0;
  double interval_s = 0.0;
  double e_send = 0.0;  ///< mJ per transmitted packet
  double e_recv = 0.0;  ///< mJ per received packet
  double overhearing_per_iteration = 0.0;

  /// m_1..m_k (element 0 is sphere 1), including any flat per-iteration cost.
  std::vector<double> per_sphere_min;
  /// Sphere index (1-based) attaining the largest m_i; smallest on ties.
  std::size_t binding_sphere = 0;
  double worst_case_node_energy = 0.0;

  double t_max_lower = 0.0;
  double t_max_upper = 0.0;
  std::int64_t t_max_lower_iterations = 0;
  std::int64_t t_max_upper_iterations = 0;
  double lifetime_lower_h = 0.0;
  double lifetime_upper_h = 0.0;

  double max_sphere_min() const { return per_sphere_min.at(binding_sphere - 1); }
};

/// Iteration and wall-clock lifetime bounds for a uniform battery of
/// `battery_j` joules per node, reporting every `interval_s` seconds.
/// Lifetimes count whole iterations only.
BoundsReport lifetime_bounds(const SpherePartition& partition, const EnergyModel& model, std::size_t payload_bytes,
                             double battery_j, double interval_s);

}  // namespace wsnlife

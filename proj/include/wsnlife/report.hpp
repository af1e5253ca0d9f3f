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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "wsnlife/bounds.hpp"
#include "wsnlife/energy_model.hpp"
#include "wsnlife/simulator.hpp"
#include "wsnlife/topology.hpp"

namespace wsnlife::report {

/// One-line layer summary, e.g. "s: 1,4,6,10,8; N=29; k=4".
std::string partition_summary(const SpherePartition& partition);

// Structured documents. Every top-level document carries "schema_version"
// and "kind"; numbers are unrounded.

/// {"kind": "partition", "sizes", "cumulative", "n", "k", "spheres": [[id...]...]}
nlohmann::json partition_document(const Topology& topology, const SpherePartition& partition);

nlohmann::json model_to_json(const EnergyModel& model);

/// Fields: battery_j, payload_bytes, interval_s, e_send_mj, e_receive_mj,
/// overhearing_mj_per_iteration, per_sphere_min_mj, binding_sphere,
/// worst_case_node_energy_mj, t_max_lower, t_max_upper,
/// t_max_lower_iterations, t_max_upper_iterations, lifetime_lower_h,
/// lifetime_upper_h.
nlohmann::json bounds_to_json(const BoundsReport& bounds);

/// Fields: strategy, seed, completed_iterations, first_dead (id or null),
/// cap_reached, per_node_spent_mj (object keyed by id), base_spent_mj,
/// per_sphere_max_iteration_energy_mj.
nlohmann::json sim_result_to_json(const SimResult& result);

/// Fields: completed_iterations, lower_iterations, upper_iterations,
/// lower_margin, upper_margin, lower_checked.
nlohmann::json verdict_to_json(const BoundsVerdict& verdict);

/// Wraps `body` with schema_version and kind.
nlohmann::json document(const std::string& kind, nlohmann::json body);

// Human-readable tables; energies rounded half-up to two decimals.
std::string bounds_table(const SpherePartition& partition, const BoundsReport& bounds);
std::string sim_table(const SimResult& result, const std::optional<BoundsVerdict>& verdict);

/// Observer that appends one CSV row per sensor node for every `stride`-th
/// completed iteration:
///   iteration,node,sphere,received,transmitted,spent_mj
/// The header row is written immediately.
IterationObserver trace_writer(std::ostream& out, const Topology& topology, const SpherePartition& partition,
                               std::int64_t stride = 1);

}  // namespace wsnlife::report

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

#include "wsnlife/bounds.hpp"

#include <cmath>
#include <string>

#include "wsnlife/error.hpp"
#include "wsnlife/numeric.hpp"

namespace wsnlife {

double sphere_min_energy(const SpherePartition& partition, std::size_t i, double e_recv, double e_send) {
  if (i < 1 || i > partition.depth()) {
    throw SphereIndexOutOfRange("sphere index " + std::to_string(i) + " outside 1.." +
                                std::to_string(partition.depth()));
  }
  const double n = static_cast<double>(partition.total());
  const double b = static_cast<double>(partition.ball_size(i));
  const double s = static_cast<double>(partition.size_of(i));
  return (n - b) / s * e_recv + (n - b + s) / s * e_send;
}

double worst_case_node_energy(const SpherePartition& partition, double e_recv, double e_send) {
  const double outside_base = static_cast<double>(partition.total() - partition.size_of(0));
  return (e_recv + e_send) * outside_base - e_recv;
}

BoundsReport lifetime_bounds(const SpherePartition& partition, const EnergyModel& model, std::size_t payload_bytes,
                             double battery_j, double interval_s) {
  if (!(battery_j > 0.0)) throw InvalidArgument("battery energy must be > 0 J");
  if (!(interval_s > 0.0)) throw InvalidArgument("iteration interval must be > 0 s");
  if (partition.depth() < 1) throw InvalidArgument("network has no sensor nodes besides the base station");
  if (model.is_zero() && model.overhearing_per_iteration == 0.0) throw ZeroEnergyModel();

  BoundsReport report;
  report.battery_j = battery_j;
  report.payload_bytes = payload_bytes;
  report.interval_s = interval_s;
  report.e_send = send_energy(model, payload_bytes);
  report.e_recv = receive_energy(model, payload_bytes);
  report.overhearing_per_iteration = model.overhearing_per_iteration;

  const double flat = model.overhearing_per_iteration;
  report.binding_sphere = 1;
  for (std::size_t i = 1; i <= partition.depth(); ++i) {
    report.per_sphere_min.push_back(sphere_min_energy(partition, i, report.e_recv, report.e_send) + flat);
    if (report.per_sphere_min.back() > report.max_sphere_min()) report.binding_sphere = i;
  }
  report.worst_case_node_energy = worst_case_node_energy(partition, report.e_recv, report.e_send) + flat;

  const double battery_mj = battery_j * 1000.0;
  report.t_max_lower = battery_mj / report.worst_case_node_energy;
  report.t_max_upper = battery_mj / report.max_sphere_min();
  report.t_max_lower_iterations = whole_iterations(report.t_max_lower);
  report.t_max_upper_iterations = whole_iterations(report.t_max_upper);
  report.lifetime_lower_h = static_cast<double>(report.t_max_lower_iterations) * interval_s / 3600.0;
  report.lifetime_upper_h = static_cast<double>(report.t_max_upper_iterations) * interval_s / 3600.0;
  return report;
}

}  // namespace wsnlife

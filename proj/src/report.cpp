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

#include "wsnlife/report.hpp"

#include <cstdio>
#include <sstream>

#include "wsnlife/io.hpp"
#include "wsnlife/numeric.hpp"

namespace wsnlife::report {

using nlohmann::json;

namespace {

std::string fixed2(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", round_half_up(value, 2));
  return buf;
}

}  // namespace

std::string partition_summary(const SpherePartition& partition) {
  std::ostringstream out;
  out << "s: ";
  for (std::size_t i = 0; i < partition.sizes().size(); ++i) out << (i ? "," : "") << partition.sizes()[i];
  out << "; N=" << partition.total() << "; k=" << partition.depth();
  return out.str();
}

json document(const std::string& kind, json body) {
  json doc = {{"schema_version", io::kSchemaVersion}, {"kind", kind}};
  for (auto& [key, value] : body.items()) doc[key] = std::move(value);
  return doc;
}

json partition_document(const Topology& topology, const SpherePartition& partition) {
  json spheres = json::array();
  for (const auto& members : partition.spheres()) {
    json ids = json::array();
    for (std::size_t v : members) ids.push_back(topology.nodes()[v].str());
    spheres.push_back(std::move(ids));
  }
  return document("partition", {{"sizes", partition.sizes()},
                                {"cumulative", partition.cumulative()},
                                {"n", partition.total()},
                                {"k", partition.depth()},
                                {"base", topology.base().str()},
                                {"spheres", std::move(spheres)}});
}

json model_to_json(const EnergyModel& model) {
  return {{"m_send", model.m_send},
          {"b_send", model.b_send},
          {"m_receive", model.m_receive},
          {"b_receive", model.b_receive},
          {"overhead_bytes", model.overhead_bytes},
          {"ack_bytes", model.ack_bytes},
          {"overhearing_mj_per_iteration", model.overhearing_per_iteration}};
}

json bounds_to_json(const BoundsReport& b) {
  return {{"battery_j", b.battery_j},
          {"payload_bytes", b.payload_bytes},
          {"interval_s", b.interval_s},
          {"e_send_mj", b.e_send},
          {"e_receive_mj", b.e_recv},
          {"overhearing_mj_per_iteration", b.overhearing_per_iteration},
          {"per_sphere_min_mj", b.per_sphere_min},
          {"binding_sphere", b.binding_sphere},
          {"worst_case_node_energy_mj", b.worst_case_node_energy},
          {"t_max_lower", b.t_max_lower},
          {"t_max_upper", b.t_max_upper},
          {"t_max_lower_iterations", b.t_max_lower_iterations},
          {"t_max_upper_iterations", b.t_max_upper_iterations},
          {"lifetime_lower_h", b.lifetime_lower_h},
          {"lifetime_upper_h", b.lifetime_upper_h}};
}

json sim_result_to_json(const SimResult& r) {
  json spent = json::object();
  for (const auto& [id, mj] : r.per_node_spent) spent[id.str()] = mj;
  return {{"strategy", std::string(to_string(r.strategy))},
          {"seed", r.seed},
          {"completed_iterations", r.completed_iterations},
          {"first_dead", r.first_dead ? json(r.first_dead->str()) : json(nullptr)},
          {"cap_reached", r.cap_reached},
          {"per_node_spent_mj", std::move(spent)},
          {"base_spent_mj", r.base_spent},
          {"per_sphere_max_iteration_energy_mj", r.per_sphere_max_iteration_energy}};
}

json verdict_to_json(const BoundsVerdict& v) {
  return {{"completed_iterations", v.completed_iterations},
          {"lower_iterations", v.lower_iterations},
          {"upper_iterations", v.upper_iterations},
          {"lower_margin", v.lower_margin},
          {"upper_margin", v.upper_margin},
          {"lower_checked", v.lower_checked}};
}

std::string bounds_table(const SpherePartition& partition, const BoundsReport& b) {
  std::ostringstream out;
  out << "payload " << b.payload_bytes << " B, battery " << b.battery_j << " J, interval " << b.interval_s << " s\n";
  out << "E(send)    = " << fixed2(b.e_send) << " mJ\n";
  out << "E(receive) = " << fixed2(b.e_recv) << " mJ\n\n";
  out << "sphere    s_i    b_i    m_i (mJ)\n";
  for (std::size_t i = 1; i <= partition.depth(); ++i) {
    char line[96];
    std::snprintf(line, sizeof line, "%6zu %6zu %6zu %11s%s\n", i, partition.size_of(i), partition.ball_size(i),
                  fixed2(b.per_sphere_min[i - 1]).c_str(), i == b.binding_sphere ? "  <- binding" : "");
    out << line;
  }
  out << "\nworst-case node energy = " << fixed2(b.worst_case_node_energy) << " mJ\n";
  out << "T_max: " << b.t_max_lower_iterations << " <= T_max <= " << b.t_max_upper_iterations << " iterations\n";
  out << "lifetime: " << fixed2(b.lifetime_lower_h) << " h .. " << fixed2(b.lifetime_upper_h) << " h\n";
  return out.str();
}

std::string sim_table(const SimResult& r, const std::optional<BoundsVerdict>& verdict) {
  std::ostringstream out;
  out << "strategy " << to_string(r.strategy) << ", seed " << r.seed << "\n";
  out << "completed iterations: " << r.completed_iterations << (r.cap_reached ? " (iteration cap reached)" : "")
      << "\n";
  out << "first dead: " << (r.first_dead ? r.first_dead->str() : std::string("-")) << "\n";
  for (std::size_t j = 0; j < r.per_sphere_max_iteration_energy.size(); ++j) {
    out << "  sphere " << j + 1 << " max energy/iteration: " << fixed2(r.per_sphere_max_iteration_energy[j])
        << " mJ\n";
  }
  if (verdict) {
    out << "bounds: " << verdict->lower_iterations << " <= " << verdict->completed_iterations
        << " <= " << verdict->upper_iterations << "  (lower margin " << verdict->lower_margin
        << ", upper margin " << verdict->upper_margin << ")" << (verdict->lower_checked ? "" : " [lower side not checked]") << "\n";
  }
  return out.str();
}

IterationObserver trace_writer(std::ostream& out, const Topology& topology, const SpherePartition& partition,
                               std::int64_t stride) {
  if (stride < 1) stride = 1;
  out << "iteration,node,sphere,received,transmitted,spent_mj\n";
  return [&out, &topology, &partition, stride](const IterationLoad& load) {
    if (load.iteration % stride != 0) return;
    for (std::size_t v = 0; v < topology.size(); ++v) {
      if (v == topology.base_index()) continue;
      char spent[40];
      std::snprintf(spent, sizeof spent, "%.6f", load.spent[v]);
      out << load.iteration << ',' << topology.nodes()[v].str() << ',' << partition.sphere_of(v) << ','
          << load.received[v] << ',' << load.transmitted[v] << ',' << spent << '\n';
    }
  };
}

}  // namespace wsnlife::report

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

#include "wsnlife/energy_model.hpp"

#include <cmath>

#include "wsnlife/error.hpp"

namespace wsnlife {

std::string_view to_string(Direction direction) { return direction == Direction::kTx ? "tx" : "rx"; }

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "tx") return Direction::kTx;
  if (text == "rx") return Direction::kRx;
  return std::nullopt;
}

namespace {

void require_energy(double value, const std::string& what) {
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidProfile(what + " must be a finite non-negative energy");
  }
}

}  // namespace

void RadioProfile::validate() const {
  require_energy(m_tx, "m_tx");
  require_energy(m_rx, "m_rx");
  require_energy(e_cca, "e_cca");
  require_energy(e_listen, "e_listen");
  require_energy(overhearing_per_iteration, "overhearing_per_iteration");
  for (const auto& [key, energy] : block_overrides) {
    require_energy(energy, std::string("block override ") + std::string(to_string(key.first)) + "@" +
                               std::to_string(key.second));
  }
}

double RadioProfile::tx_cost(std::size_t bytes) const {
  if (auto it = block_overrides.find({Direction::kTx, bytes}); it != block_overrides.end()) return it->second;
  return m_tx * static_cast<double>(bytes);
}

double RadioProfile::rx_cost(std::size_t bytes) const {
  if (auto it = block_overrides.find({Direction::kRx, bytes}); it != block_overrides.end()) return it->second;
  return m_rx * static_cast<double>(bytes);
}

EnergyModel build_model(const RadioProfile& profile, const FrameConfig& frame) {
  profile.validate();
  EnergyModel model;
  model.overhead_bytes = data_frame_length(frame, 0);
  model.ack_bytes = ack_frame_length();
  model.m_send = profile.m_tx;
  model.m_receive = profile.m_rx;
  model.b_send = profile.e_cca + profile.tx_cost(model.overhead_bytes) + profile.rx_cost(model.ack_bytes);
  model.b_receive = profile.e_listen + profile.rx_cost(model.overhead_bytes) + profile.tx_cost(model.ack_bytes);
  model.overhearing_per_iteration = profile.overhearing_per_iteration;
  return model;
}

RadioProfile cc2420_profile() {
  RadioProfile p;
  p.m_tx = 0.12;
  p.m_rx = 0.12;
  p.e_cca = 0.08;
  p.e_listen = 0.58;
  p.block_overrides = {
      {{Direction::kTx, 11}, 1.32},
      {{Direction::kTx, 18}, 2.16},
      {{Direction::kRx, 11}, 1.30},
      {{Direction::kRx, 18}, 2.13},
  };
  return p;
}

std::optional<RadioProfile> profile_preset(std::string_view key) {
  if (key == "cc2420-paper") return cc2420_profile();
  return std::nullopt;
}

std::vector<std::string> profile_preset_names() { return {"cc2420-paper"}; }

}  // namespace wsnlife

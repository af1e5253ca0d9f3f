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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wsnlife/frame_model.hpp"

namespace wsnlife {

enum class Direction { kTx, kRx };

std::string_view to_string(Direction direction);
std::optional<Direction> parse_direction(std::string_view text);

/// Measured energy costs of a radio. All energies are millijoules.
struct RadioProfile {
  double m_tx = 0.0;      ///< per transmitted byte
  double m_rx = 0.0;      ///< per received byte
  double e_cca = 0.0;     ///< one clear-channel assessment
  double e_listen = 0.0;  ///< one listening period before a reception
  /// Measured energy of a whole block of exactly `bytes` bytes, used in place
  /// of the per-byte rate for that length.
  std::map<std::pair<Direction, std::size_t>, double> block_overrides;
  /// Flat per-iteration cost charged to every sensor node (overheard traffic,
  /// idle listening, ...). Zero unless a deployment supplies it.
  double overhearing_per_iteration = 0.0;

  /// Throws InvalidProfile if any energy is negative or not finite.
  void validate() const;

  /// Energy of sending `bytes` bytes, honoring block overrides.
  double tx_cost(std::size_t bytes) const;
  /// Energy of receiving `bytes` bytes, honoring block overrides.
  double rx_cost(std::size_t bytes) const;

  friend bool operator==(const RadioProfile&, const RadioProfile&) = default;
};

/// Linear per-packet energy: E = slope * payload + intercept, for the sender
/// and the receiver of one acknowledged unicast data frame.
struct EnergyModel {
  double m_send = 0.0;
  double b_send = 0.0;
  double m_receive = 0.0;
  double b_receive = 0.0;
  std::size_t overhead_bytes = 0;
  std::size_t ack_bytes = 0;
  double overhearing_per_iteration = 0.0;

  bool is_zero() const noexcept {
    return m_send == 0.0 && b_send == 0.0 && m_receive == 0.0 && b_receive == 0.0;
  }
};

/// Sender pays CCA + data frame out + ack in; receiver pays listening + data
/// frame in + ack out. Each fixed cost is charged once per exchange.
EnergyModel build_model(const RadioProfile& profile, const FrameConfig& frame);

inline double send_energy(const EnergyModel& model, std::size_t payload_bytes) {
  return model.m_send * static_cast<double>(payload_bytes) + model.b_send;
}

inline double receive_energy(const EnergyModel& model, std::size_t payload_bytes) {
  return model.m_receive * static_cast<double>(payload_bytes) + model.b_receive;
}

/// Tmote Sky / CC2420 at 0 dBm: 0.12 mJ per byte either way, CCA 0.08 mJ,
/// listening 0.58 mJ, and the measured 11- and 18-byte block energies.
RadioProfile cc2420_profile();

/// Preset lookup by key ("cc2420-paper").
std::optional<RadioProfile> profile_preset(std::string_view key);
std::vector<std::string> profile_preset_names();

}  // namespace wsnlife

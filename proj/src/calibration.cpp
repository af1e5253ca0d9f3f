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

#include "wsnlife/calibration.hpp"

#include <cmath>
#include <string>

#include "wsnlife/error.hpp"
#include "wsnlife/numeric.hpp"

namespace wsnlife {

namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw NonPositiveInput(std::string("scope reading field ") + field + " must be > 0");
  }
}

double per_byte_rate(const FrameReading& frame, const char* what) {
  if (frame.byte_count <= frame.excluded_preamble_bytes) {
    throw ZeroEffectiveBytes(std::string(what) + " reading has no bytes left after excluding the preamble");
  }
  return mean_energy(frame.readings) / static_cast<double>(frame.byte_count - frame.excluded_preamble_bytes);
}

}  // namespace

double reading_energy(const ScopeReading& reading) {
  require_positive(reading.v_scope, "v_scope");
  require_positive(reading.duration_s, "duration_s");
  require_positive(reading.gain, "gain");
  require_positive(reading.r_sense, "r_sense");
  require_positive(reading.v_supply, "v_supply");
  const double current = reading.v_scope / (reading.gain * reading.r_sense);
  return current * reading.v_supply * reading.duration_s * 1000.0;
}

double mean_energy(std::span<const ScopeReading> readings) {
  if (readings.empty()) throw InvalidArgument("at least one scope reading is required");
  double sum = 0.0;
  for (const auto& r : readings) sum += reading_energy(r);
  return sum / static_cast<double>(readings.size());
}

RadioProfile profile_from_readings(const CalibrationInput& input, const FrameConfig& frame,
                                   const CalibrationOptions& options) {
  auto finish = [&](double value) { return options.round_like_paper ? round_half_up(value, 2) : value; };

  const double tx_rate = per_byte_rate(input.tx, "tx");
  const double rx_rate = per_byte_rate(input.rx, "rx");

  RadioProfile profile;
  profile.m_tx = finish(tx_rate);
  profile.m_rx = finish(rx_rate);
  profile.e_cca = finish(mean_energy(input.cca));
  profile.e_listen = finish(mean_energy(input.listen));

  // Blocks are extrapolated from the unrounded rate, then rounded once.
  for (std::size_t bytes : {ack_frame_length(), data_frame_length(frame, 0)}) {
    profile.block_overrides[{Direction::kTx, bytes}] = finish(tx_rate * static_cast<double>(bytes));
    profile.block_overrides[{Direction::kRx, bytes}] = finish(rx_rate * static_cast<double>(bytes));
  }
  for (const auto& [key, energy] : input.measured_blocks) profile.block_overrides[key] = energy;

  profile.validate();
  return profile;
}

}  // namespace wsnlife

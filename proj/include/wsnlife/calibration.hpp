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
#include <span>
#include <utility>
#include <vector>

#include "wsnlife/energy_model.hpp"
#include "wsnlife/frame_model.hpp"

namespace wsnlife {

/// One oscilloscope measurement across a series sense resistor feeding an
/// instrumentation amplifier.
struct ScopeReading {
  double v_scope = 0.0;     ///< amplified voltage, V
  double duration_s = 0.0;  ///< trace duration, s
  double gain = 98.0;       ///< amplifier gain
  double r_sense = 1.7;     ///< sense resistance, ohm
  double v_supply = 3.0;    ///< supply voltage, V
};

/// Energy drawn during `reading`, in mJ: current through the sense resistor
/// (v_scope / (gain * r_sense)) times supply voltage times duration.
/// Throws NonPositiveInput unless every field is > 0.
double reading_energy(const ScopeReading& reading);

/// Mean of reading_energy over repeated measurements of one operation.
double mean_energy(std::span<const ScopeReading> readings);

/// Repeated readings of a frame transmission or reception. The first
/// `excluded_preamble_bytes` of `byte_count` are not charged to the frame.
struct FrameReading {
  std::vector<ScopeReading> readings;
  std::size_t byte_count = 0;
  std::size_t excluded_preamble_bytes = 0;
};

struct CalibrationInput {
  std::vector<ScopeReading> cca;
  std::vector<ScopeReading> listen;
  FrameReading tx;
  FrameReading rx;
  /// Directly measured block energies (mJ); they take precedence over
  /// per-byte extrapolation and are never rounded.
  std::map<std::pair<Direction, std::size_t>, double> measured_blocks;
};

struct CalibrationOptions {
  /// Round every derived energy to two decimals (half-up).
  bool round_like_paper = false;
};

/// Assemble a RadioProfile from scope readings. Block overrides are filled
/// for the acknowledgment length and for `frame`'s data-frame overhead in
/// both directions. Throws ZeroEffectiveBytes when a frame reading leaves no
/// bytes after preamble exclusion.
RadioProfile profile_from_readings(const CalibrationInput& input, const FrameConfig& frame,
                                   const CalibrationOptions& options = {});

}  // namespace wsnlife

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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wsnlife/calibration.hpp"
#include "wsnlife/energy_model.hpp"
#include "wsnlife/frame_model.hpp"
#include "wsnlife/topology.hpp"

namespace wsnlife::io {

/// Version stamped into every document this library writes.
inline constexpr int kSchemaVersion = 1;

/// Read a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Parse JSON text, reporting syntax errors as `source:line:column: ...`.
nlohmann::json parse_json(std::string_view text, const std::string& source);

// Topology file:
//   { "nodes": [id, ...], "edges": [[id, id], ...], "base": id }
// Ids are strings or integers; integers are taken in decimal string form.
// Unknown fields are rejected.
Topology parse_topology(const nlohmann::json& doc, const std::string& source);
Topology load_topology(const std::filesystem::path& path);
nlohmann::json topology_to_json(const Topology& topology);

// Frame config object:
//   { "dest_pan_bytes": 2, "dest_addr_bytes": 2, "src_pan_bytes": 0,
//     "src_addr_bytes": 2, "extra_header_bytes": 1 }
// Missing fields take FrameConfig defaults. A string selects a named preset.
FrameConfig parse_frame(const nlohmann::json& doc, const std::string& source);
nlohmann::json frame_to_json(const FrameConfig& frame);

/// Profile entry plus the frame it was calibrated for, if recorded.
struct NamedProfile {
  RadioProfile profile;
  std::optional<FrameConfig> frame;
};

// Profile file:
//   { "schema_version": 1,
//     "profiles": {
//       "<name>": { "m_tx": mJ, "m_rx": mJ, "e_cca": mJ, "e_listen": mJ,
//                   "block_overrides": [{"direction": "tx"|"rx", "bytes": n, "energy_mj": mJ}, ...],
//                   "overhearing_mj_per_iteration": mJ,   (optional)
//                   "frame": <frame config or preset key> (optional) } } }
std::map<std::string, NamedProfile> parse_profiles(const nlohmann::json& doc, const std::string& source);
nlohmann::json profile_to_json(const RadioProfile& profile, const std::optional<FrameConfig>& frame = std::nullopt);
nlohmann::json profiles_document(const std::map<std::string, NamedProfile>& profiles);

/// Resolve `--profile`: a built-in preset key, a profile file holding exactly
/// one profile, or `file#name`.
NamedProfile resolve_profile(const std::string& spec);

// Readings file:
//   { "schema_version": 1,
//     "frame_preset": "paper-tinyos" | "frame": {...},          (optional)
//     "defaults": { "gain": 98, "r_sense": 1.7, "v_supply": 3 },  (optional)
//     "cca":    reading | [reading, ...],
//     "listen": reading | [reading, ...],
//     "tx": { "byte_count": 46, "excluded_preamble_bytes": 4, "readings": reading | [reading, ...] },
//     "rx": { ... same as tx ... },
//     "measured_blocks": [{"direction": "tx", "bytes": 11, "energy_mj": 1.32}, ...] (optional) }
// where reading = { "v_scope": V, "duration_s": s, and optional gain/r_sense/v_supply }.
struct ReadingsFile {
  CalibrationInput input;
  FrameConfig frame;
};
ReadingsFile parse_readings(const nlohmann::json& doc, const std::string& source);
ReadingsFile load_readings(const std::filesystem::path& path);

}  // namespace wsnlife::io

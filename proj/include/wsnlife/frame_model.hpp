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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wsnlife {

/// Synchronization header, PHY header, frame control, sequence number and FCS
/// of an IEEE 802.15.4 data or acknowledgment frame, in bytes.
inline constexpr std::size_t kFixedFrameBytes = 11;

/// On-air length above which a data frame no longer fits a standard PSDU.
/// Exceeding it only produces a warning.
inline constexpr std::size_t kSoftFrameLimit = 133;

/// Addressing-mode choices of an 802.15.4 data frame.
struct FrameConfig {
  std::size_t dest_pan_bytes = 2;   // 0 or 2
  std::size_t dest_addr_bytes = 2;  // 0, 2 or 8
  std::size_t src_pan_bytes = 0;    // 0 or 2
  std::size_t src_addr_bytes = 2;   // 0, 2 or 8
  /// Stack-specific header additions (TinyOS adds one byte).
  std::size_t extra_header_bytes = 0;

  std::size_t addressing_bytes() const noexcept {
    return dest_pan_bytes + dest_addr_bytes + src_pan_bytes + src_addr_bytes;
  }

  /// Throws InvalidFrameConfig when a field is outside its enumerated values.
  void validate() const;

  friend bool operator==(const FrameConfig&, const FrameConfig&) = default;
};

/// Full PPDU length of a data frame carrying `payload_bytes`.
std::size_t data_frame_length(const FrameConfig& config, std::size_t payload_bytes);

/// Full PPDU length of an acknowledgment frame; independent of addressing.
constexpr std::size_t ack_frame_length() noexcept { return kFixedFrameBytes; }

inline bool exceeds_soft_limit(std::size_t frame_length) noexcept {
  return frame_length > kSoftFrameLimit;
}

/// Short 16-bit addresses, destination PAN id only (17 + n bytes).
FrameConfig short_address_frame();
/// As short_address_frame() plus the one-byte TinyOS header field (18 + n).
FrameConfig tinyos_frame();

/// Preset lookup by key: "paper-802154-short-addr" or "paper-tinyos".
std::optional<FrameConfig> frame_preset(std::string_view key);
std::vector<std::string> frame_preset_names();

}  // namespace wsnlife

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

#include "wsnlife/frame_model.hpp"

#include "wsnlife/error.hpp"

namespace wsnlife {

namespace {

void require_one_of(std::size_t value, std::initializer_list<std::size_t> allowed, const char* field) {
  for (std::size_t a : allowed) {
    if (value == a) return;
  }
  throw InvalidFrameConfig(std::string(field) + " may not be " + std::to_string(value) + " bytes");
}

}  // namespace

void FrameConfig::validate() const {
  require_one_of(dest_pan_bytes, {0, 2}, "dest_pan_bytes");
  require_one_of(dest_addr_bytes, {0, 2, 8}, "dest_addr_bytes");
  require_one_of(src_pan_bytes, {0, 2}, "src_pan_bytes");
  require_one_of(src_addr_bytes, {0, 2, 8}, "src_addr_bytes");
}

std::size_t data_frame_length(const FrameConfig& config, std::size_t payload_bytes) {
  config.validate();
  return kFixedFrameBytes + config.addressing_bytes() + config.extra_header_bytes + payload_bytes;
}

FrameConfig short_address_frame() { return FrameConfig{2, 2, 0, 2, 0}; }

FrameConfig tinyos_frame() {
  FrameConfig config = short_address_frame();
  config.extra_header_bytes = 1;
  return config;
}

std::optional<FrameConfig> frame_preset(std::string_view key) {
  if (key == "paper-802154-short-addr") return short_address_frame();
  if (key == "paper-tinyos") return tinyos_frame();
  return std::nullopt;
}

std::vector<std::string> frame_preset_names() { return {"paper-802154-short-addr", "paper-tinyos"}; }

}  // namespace wsnlife

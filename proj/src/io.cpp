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

#include "wsnlife/io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "wsnlife/error.hpp"

namespace wsnlife::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw ParseError(source + ": " + (where.empty() ? "" : "at " + where + ": ") + what);
}

void require_object(const json& j, const std::string& source, const std::string& where) {
  if (!j.is_object()) fail(source, where, "expected an object");
}

void only_fields(const json& j, std::initializer_list<std::string_view> allowed, const std::string& source,
                 const std::string& where) {
  require_object(j, source, where);
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(source, where, "unknown field '" + key + "'");
  }
}

const json& field(const json& j, const std::string& key, const std::string& source, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(source, where, "missing field '" + key + "'");
  return *it;
}

double number(const json& j, const std::string& source, const std::string& where) {
  if (!j.is_number()) fail(source, where, "expected a number");
  return j.get<double>();
}

std::size_t count(const json& j, const std::string& source, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(source, where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

NodeId node_id(const json& j, const std::string& source, const std::string& where) {
  if (j.is_string()) return NodeId(j.get<std::string>());
  if (j.is_number_unsigned()) return NodeId(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return NodeId(std::to_string(j.get<std::int64_t>()));
  fail(source, where, "node id must be a string or an integer");
}

void check_schema_version(const json& doc, const std::string& source) {
  if (auto it = doc.find("schema_version"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<int>() != kSchemaVersion) {
      fail(source, "/schema_version", "unsupported schema version " + it->dump());
    }
  }
}

std::map<std::pair<Direction, std::size_t>, double> parse_blocks(const json& j, const std::string& source,
                                                                  const std::string& where) {
  if (!j.is_array()) fail(source, where, "expected an array");
  std::map<std::pair<Direction, std::size_t>, double> blocks;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    only_fields(j[i], {"direction", "bytes", "energy_mj"}, source, at);
    const auto& dir_json = field(j[i], "direction", source, at);
    auto dir = dir_json.is_string() ? parse_direction(dir_json.get<std::string>()) : std::nullopt;
    if (!dir) fail(source, at + "/direction", "expected \"tx\" or \"rx\"");
    const std::size_t bytes = count(field(j[i], "bytes", source, at), source, at + "/bytes");
    const double energy = number(field(j[i], "energy_mj", source, at), source, at + "/energy_mj");
    if (!blocks.emplace(std::make_pair(*dir, bytes), energy).second) fail(source, at, "duplicate block override");
  }
  return blocks;
}

json blocks_to_json(const std::map<std::pair<Direction, std::size_t>, double>& blocks) {
  json out = json::array();
  for (const auto& [key, energy] : blocks) {
    out.push_back({{"direction", std::string(to_string(key.first))}, {"bytes", key.second}, {"energy_mj", energy}});
  }
  return out;
}

ScopeReading parse_reading(const json& j, const ScopeReading& defaults, const std::string& source,
                           const std::string& where) {
  only_fields(j, {"v_scope", "duration_s", "gain", "r_sense", "v_supply"}, source, where);
  ScopeReading r = defaults;
  r.v_scope = number(field(j, "v_scope", source, where), source, where + "/v_scope");
  r.duration_s = number(field(j, "duration_s", source, where), source, where + "/duration_s");
  if (j.contains("gain")) r.gain = number(j["gain"], source, where + "/gain");
  if (j.contains("r_sense")) r.r_sense = number(j["r_sense"], source, where + "/r_sense");
  if (j.contains("v_supply")) r.v_supply = number(j["v_supply"], source, where + "/v_supply");
  return r;
}

std::vector<ScopeReading> parse_reading_list(const json& j, const ScopeReading& defaults, const std::string& source,
                                             const std::string& where) {
  std::vector<ScopeReading> out;
  if (j.is_array()) {
    if (j.empty()) fail(source, where, "at least one reading is required");
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(parse_reading(j[i], defaults, source, where + "/" + std::to_string(i)));
    }
  } else {
    out.push_back(parse_reading(j, defaults, source, where));
  }
  return out;
}

FrameReading parse_frame_reading(const json& j, const ScopeReading& defaults, const std::string& source,
                                 const std::string& where) {
  only_fields(j, {"byte_count", "excluded_preamble_bytes", "readings"}, source, where);
  FrameReading fr;
  fr.byte_count = count(field(j, "byte_count", source, where), source, where + "/byte_count");
  if (j.contains("excluded_preamble_bytes")) {
    fr.excluded_preamble_bytes = count(j["excluded_preamble_bytes"], source, where + "/excluded_preamble_bytes");
  }
  fr.readings = parse_reading_list(field(j, "readings", source, where), defaults, source, where + "/readings");
  return fr;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Convert the byte offset into line:column for the message.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
  }
}

Topology parse_topology(const json& doc, const std::string& source) {
  only_fields(doc, {"nodes", "edges", "base"}, source, "");
  const auto& nodes_json = field(doc, "nodes", source, "");
  if (!nodes_json.is_array()) fail(source, "/nodes", "expected an array");
  std::vector<NodeId> nodes;
  for (std::size_t i = 0; i < nodes_json.size(); ++i) {
    nodes.push_back(node_id(nodes_json[i], source, "/nodes/" + std::to_string(i)));
  }

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const auto& edges_json = doc["edges"];
    if (!edges_json.is_array()) fail(source, "/edges", "expected an array");
    for (std::size_t i = 0; i < edges_json.size(); ++i) {
      const std::string at = "/edges/" + std::to_string(i);
      const auto& e = edges_json[i];
      if (!e.is_array() || e.size() != 2) fail(source, at, "an edge is a two-element list of node ids");
      edges.emplace_back(node_id(e[0], source, at + "/0"), node_id(e[1], source, at + "/1"));
    }
  }
  NodeId base = node_id(field(doc, "base", source, ""), source, "/base");

  try {
    return Topology(std::move(nodes), std::move(edges), std::move(base));
  } catch (const EmptyTopology&) {
    throw;
  } catch (const InvalidTopology& e) {
    throw InvalidTopology(source + ": " + e.what());
  }
}

Topology load_topology(const std::filesystem::path& path) {
  const std::string source = path.string();
  return parse_topology(parse_json(read_file(path), source), source);
}

json topology_to_json(const Topology& topology) {
  json nodes = json::array();
  for (const auto& id : topology.nodes()) nodes.push_back(id.str());
  json edges = json::array();
  for (const auto& [a, b] : topology.edge_indices()) {
    edges.push_back({topology.nodes()[a].str(), topology.nodes()[b].str()});
  }
  return {{"nodes", nodes}, {"edges", edges}, {"base", topology.base().str()}};
}

FrameConfig parse_frame(const json& doc, const std::string& source) {
  if (doc.is_string()) {
    auto preset = frame_preset(doc.get<std::string>());
    if (!preset) fail(source, "/frame", "unknown frame preset '" + doc.get<std::string>() + "'");
    return *preset;
  }
  only_fields(doc, {"dest_pan_bytes", "dest_addr_bytes", "src_pan_bytes", "src_addr_bytes", "extra_header_bytes"},
              source, "/frame");
  FrameConfig f;
  auto opt = [&](const char* key, std::size_t& out) {
    if (doc.contains(key)) out = count(doc[key], source, std::string("/frame/") + key);
  };
  opt("dest_pan_bytes", f.dest_pan_bytes);
  opt("dest_addr_bytes", f.dest_addr_bytes);
  opt("src_pan_bytes", f.src_pan_bytes);
  opt("src_addr_bytes", f.src_addr_bytes);
  opt("extra_header_bytes", f.extra_header_bytes);
  try {
    f.validate();
  } catch (const InvalidFrameConfig& e) {
    fail(source, "/frame", e.what());
  }
  return f;
}

json frame_to_json(const FrameConfig& frame) {
  return {{"dest_pan_bytes", frame.dest_pan_bytes},
          {"dest_addr_bytes", frame.dest_addr_bytes},
          {"src_pan_bytes", frame.src_pan_bytes},
          {"src_addr_bytes", frame.src_addr_bytes},
          {"extra_header_bytes", frame.extra_header_bytes}};
}

std::map<std::string, NamedProfile> parse_profiles(const json& doc, const std::string& source) {
  only_fields(doc, {"schema_version", "profiles"}, source, "");
  check_schema_version(doc, source);
  const auto& profiles = field(doc, "profiles", source, "");
  require_object(profiles, source, "/profiles");
  std::map<std::string, NamedProfile> out;
  for (const auto& [name, entry] : profiles.items()) {
    const std::string at = "/profiles/" + name;
    only_fields(entry,
                {"m_tx", "m_rx", "e_cca", "e_listen", "block_overrides", "overhearing_mj_per_iteration", "frame"},
                source, at);
    NamedProfile np;
    auto& p = np.profile;
    p.m_tx = number(field(entry, "m_tx", source, at), source, at + "/m_tx");
    p.m_rx = number(field(entry, "m_rx", source, at), source, at + "/m_rx");
    p.e_cca = number(field(entry, "e_cca", source, at), source, at + "/e_cca");
    p.e_listen = number(field(entry, "e_listen", source, at), source, at + "/e_listen");
    if (entry.contains("block_overrides")) {
      p.block_overrides = parse_blocks(entry["block_overrides"], source, at + "/block_overrides");
    }
    if (entry.contains("overhearing_mj_per_iteration")) {
      p.overhearing_per_iteration =
          number(entry["overhearing_mj_per_iteration"], source, at + "/overhearing_mj_per_iteration");
    }
    if (entry.contains("frame")) np.frame = parse_frame(entry["frame"], source);
    try {
      p.validate();
    } catch (const InvalidProfile& e) {
      fail(source, at, e.what());
    }
    out.emplace(name, std::move(np));
  }
  if (out.empty()) fail(source, "/profiles", "no profiles defined");
  return out;
}

json profile_to_json(const RadioProfile& profile, const std::optional<FrameConfig>& frame) {
  json j = {{"m_tx", profile.m_tx},
            {"m_rx", profile.m_rx},
            {"e_cca", profile.e_cca},
            {"e_listen", profile.e_listen},
            {"block_overrides", blocks_to_json(profile.block_overrides)}};
  if (profile.overhearing_per_iteration != 0.0) j["overhearing_mj_per_iteration"] = profile.overhearing_per_iteration;
  if (frame) j["frame"] = frame_to_json(*frame);
  return j;
}

json profiles_document(const std::map<std::string, NamedProfile>& profiles) {
  json entries = json::object();
  for (const auto& [name, np] : profiles) entries[name] = profile_to_json(np.profile, np.frame);
  return {{"schema_version", kSchemaVersion}, {"profiles", entries}};
}

NamedProfile resolve_profile(const std::string& spec) {
  if (auto preset = profile_preset(spec)) return NamedProfile{*preset, std::nullopt};

  std::string path = spec;
  std::string name;
  if (auto hash = spec.rfind('#'); hash != std::string::npos) {
    path = spec.substr(0, hash);
    name = spec.substr(hash + 1);
  }
  if (!std::filesystem::exists(path)) {
    throw ParseError("'" + spec + "' is neither a built-in profile nor an existing file");
  }
  auto profiles = parse_profiles(parse_json(read_file(path), path), path);
  if (name.empty()) {
    if (profiles.size() != 1) throw ParseError(path + ": holds several profiles; select one with '" + path + "#name'");
    return profiles.begin()->second;
  }
  auto it = profiles.find(name);
  if (it == profiles.end()) throw ParseError(path + ": no profile named '" + name + "'");
  return it->second;
}

ReadingsFile parse_readings(const json& doc, const std::string& source) {
  only_fields(doc,
              {"schema_version", "frame_preset", "frame", "defaults", "cca", "listen", "tx", "rx", "measured_blocks"},
              source, "");
  check_schema_version(doc, source);

  ReadingsFile out;
  out.frame = tinyos_frame();
  if (doc.contains("frame_preset") && doc.contains("frame")) fail(source, "", "give either 'frame_preset' or 'frame'");
  if (doc.contains("frame_preset")) out.frame = parse_frame(doc["frame_preset"], source);
  if (doc.contains("frame")) out.frame = parse_frame(doc["frame"], source);

  ScopeReading defaults;
  if (doc.contains("defaults")) {
    const auto& d = doc["defaults"];
    only_fields(d, {"gain", "r_sense", "v_supply"}, source, "/defaults");
    if (d.contains("gain")) defaults.gain = number(d["gain"], source, "/defaults/gain");
    if (d.contains("r_sense")) defaults.r_sense = number(d["r_sense"], source, "/defaults/r_sense");
    if (d.contains("v_supply")) defaults.v_supply = number(d["v_supply"], source, "/defaults/v_supply");
  }

  auto& in = out.input;
  in.cca = parse_reading_list(field(doc, "cca", source, ""), defaults, source, "/cca");
  in.listen = parse_reading_list(field(doc, "listen", source, ""), defaults, source, "/listen");
  in.tx = parse_frame_reading(field(doc, "tx", source, ""), defaults, source, "/tx");
  in.rx = parse_frame_reading(field(doc, "rx", source, ""), defaults, source, "/rx");
  if (doc.contains("measured_blocks")) in.measured_blocks = parse_blocks(doc["measured_blocks"], source, "/measured_blocks");
  return out;
}

ReadingsFile load_readings(const std::filesystem::path& path) {
  const std::string source = path.string();
  return parse_readings(parse_json(read_file(path), source), source);
}

}  // namespace wsnlife::io

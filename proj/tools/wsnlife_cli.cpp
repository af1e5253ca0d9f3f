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

// wsnlife: lifetime bounds and routing simulation for continuous sensor
// networks. Run `wsnlife --help` for the command list.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsnlife/bounds.hpp"
#include "wsnlife/calibration.hpp"
#include "wsnlife/energy_model.hpp"
#include "wsnlife/error.hpp"
#include "wsnlife/frame_model.hpp"
#include "wsnlife/io.hpp"
#include "wsnlife/report.hpp"
#include "wsnlife/simulator.hpp"
#include "wsnlife/topology.hpp"

namespace {

using namespace wsnlife;
using nlohmann::json;

constexpr int kExitError = 1;
constexpr int kExitBoundViolation = 3;

struct GlobalOptions {
  std::string profile = "cc2420-paper";
  std::string frame_preset;
  std::size_t payload = 2;
  double battery_j = 30780.0;
  double interval_s = 10.0;
  std::string format = "table";
  std::uint64_t seed = 0;
  bool round_like_paper = false;
  std::string output;
};

/// Output sink: --output file or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ParseError(path + ": cannot open for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct Pipeline {
  Topology topology;
  SpherePartition partition;
  EnergyModel model;
  FrameConfig frame;
};

FrameConfig choose_frame(const GlobalOptions& g, const io::NamedProfile& profile) {
  if (!g.frame_preset.empty()) {
    auto preset = frame_preset(g.frame_preset);
    if (!preset) throw InvalidArgument("unknown frame preset '" + g.frame_preset + "'");
    return *preset;
  }
  return profile.frame.value_or(tinyos_frame());
}

Pipeline load_pipeline(const GlobalOptions& g, const std::string& topology_path) {
  Topology topology = io::load_topology(topology_path);
  SpherePartition parts = partition(topology);
  io::NamedProfile profile = io::resolve_profile(g.profile);
  FrameConfig frame = choose_frame(g, profile);
  if (auto length = data_frame_length(frame, g.payload); exceeds_soft_limit(length)) {
    std::cerr << "warning: data frame of " << length << " bytes exceeds the " << kSoftFrameLimit
              << "-byte 802.15.4 frame limit\n";
  }
  EnergyModel model = build_model(profile.profile, frame);
  return Pipeline{std::move(topology), std::move(parts), model, frame};
}

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

void require_format(const GlobalOptions& g, std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed) {
    if (g.format == a) return;
  }
  throw InvalidArgument("format '" + g.format + "' is not available for this command");
}

int cmd_partition(const GlobalOptions& g, const std::string& topology_path) {
  require_format(g, {"table", "structured"});
  Topology topology = io::load_topology(topology_path);
  SpherePartition parts = partition(topology);
  Sink sink(g.output);
  if (g.format == "structured") {
    print_json(sink.stream(), report::partition_document(topology, parts));
  } else {
    sink.stream() << report::partition_summary(parts) << '\n';
  }
  return 0;
}

json bounds_body(const GlobalOptions& g, const Pipeline& p, const BoundsReport& bounds) {
  return {{"profile", g.profile},
          {"frame", io::frame_to_json(p.frame)},
          {"model", report::model_to_json(p.model)},
          {"partition", {{"sizes", p.partition.sizes()}, {"cumulative", p.partition.cumulative()},
                         {"n", p.partition.total()}, {"k", p.partition.depth()}}},
          {"bounds", report::bounds_to_json(bounds)}};
}

int cmd_bounds(const GlobalOptions& g, const std::string& topology_path) {
  require_format(g, {"table", "structured"});
  Pipeline p = load_pipeline(g, topology_path);
  BoundsReport bounds = lifetime_bounds(p.partition, p.model, g.payload, g.battery_j, g.interval_s);
  Sink sink(g.output);
  if (g.format == "structured") {
    print_json(sink.stream(), report::document("bounds", bounds_body(g, p, bounds)));
  } else {
    sink.stream() << report::partition_summary(p.partition) << "\n" << report::bounds_table(p.partition, bounds);
  }
  return 0;
}

struct SimulateOptions {
  std::string strategy = "balanced-rotating";
  std::int64_t max_iterations = 1'000'000'000;
  std::string trace_path;
  std::int64_t trace_every = 1;
};

Strategy strategy_or_throw(const std::string& name) {
  auto s = parse_strategy(name);
  if (!s) throw InvalidArgument("unknown strategy '" + name + "'");
  return *s;
}

int cmd_simulate(const GlobalOptions& g, const std::string& topology_path, const SimulateOptions& o) {
  require_format(g, {"table", "structured", "trace"});
  Pipeline p = load_pipeline(g, topology_path);
  BoundsReport bounds = lifetime_bounds(p.partition, p.model, g.payload, g.battery_j, g.interval_s);

  SimConfig config;
  config.strategy = strategy_or_throw(o.strategy);
  config.payload_bytes = g.payload;
  config.battery_j = g.battery_j;
  config.max_iterations = o.max_iterations;
  config.seed = g.seed;

  Sink sink(g.output);
  std::unique_ptr<std::ofstream> trace_file;
  IterationObserver observer;
  if (g.format == "trace") {
    observer = report::trace_writer(sink.stream(), p.topology, p.partition, o.trace_every);
  } else if (!o.trace_path.empty()) {
    trace_file = std::make_unique<std::ofstream>(o.trace_path, std::ios::binary);
    if (!*trace_file) throw ParseError(o.trace_path + ": cannot open for writing");
    observer = report::trace_writer(*trace_file, p.topology, p.partition, o.trace_every);
  }

  SimResult result = simulate(p.topology, p.partition, p.model, config, observer);

  std::optional<BoundsVerdict> verdict;
  std::string violation;
  try {
    verdict = validate_against_bounds(result, bounds);
  } catch (const BoundViolation& e) {
    violation = e.what();
  }

  if (g.format == "structured") {
    json body = bounds_body(g, p, bounds);
    body["result"] = report::sim_result_to_json(result);
    body["verdict"] = verdict ? report::verdict_to_json(*verdict) : json(nullptr);
    body["bound_violation"] = violation.empty() ? json(nullptr) : json(violation);
    print_json(sink.stream(), report::document("simulation", std::move(body)));
  } else if (g.format == "table") {
    sink.stream() << report::sim_table(result, verdict);
  }
  if (!violation.empty()) {
    std::cerr << "error: bound violation: " << violation << '\n';
    return kExitBoundViolation;
  }
  return 0;
}

struct CalibrateOptions {
  std::string name = "calibrated";
};

int cmd_calibrate(const GlobalOptions& g, const std::string& readings_path, const CalibrateOptions& o) {
  require_format(g, {"table", "structured"});
  io::ReadingsFile readings = io::load_readings(readings_path);
  FrameConfig frame = readings.frame;
  if (!g.frame_preset.empty()) {
    auto preset = frame_preset(g.frame_preset);
    if (!preset) throw InvalidArgument("unknown frame preset '" + g.frame_preset + "'");
    frame = *preset;
  }
  CalibrationOptions options;
  options.round_like_paper = g.round_like_paper;
  RadioProfile profile = profile_from_readings(readings.input, frame, options);

  json doc = io::profiles_document({{o.name, io::NamedProfile{profile, frame}}});
  Sink sink(g.output);
  if (g.format == "structured" || !g.output.empty()) {
    print_json(sink.stream(), doc);
  } else {
    auto& out = sink.stream();
    out << "profile '" << o.name << "'" << (g.round_like_paper ? " (rounded to 2 decimals)" : "") << "\n";
    out << "  m_tx     = " << profile.m_tx << " mJ/byte\n";
    out << "  m_rx     = " << profile.m_rx << " mJ/byte\n";
    out << "  e_cca    = " << profile.e_cca << " mJ\n";
    out << "  e_listen = " << profile.e_listen << " mJ\n";
    for (const auto& [key, energy] : profile.block_overrides) {
      out << "  " << to_string(key.first) << "@" << key.second << " = " << energy << " mJ\n";
    }
  }
  return 0;
}

struct SweepOptions {
  std::vector<std::string> strategies;
  std::vector<std::size_t> payloads;
  std::uint64_t seed_count = 1;
  unsigned jobs = 0;
  std::int64_t max_iterations = 1'000'000'000;
};

int cmd_sweep(const GlobalOptions& g, const std::string& topology_path, const SweepOptions& o) {
  require_format(g, {"table", "structured"});
  Pipeline p = load_pipeline(g, topology_path);

  std::vector<Strategy> strategies;
  if (o.strategies.empty()) {
    strategies = all_strategies();
  } else {
    for (const auto& s : o.strategies) strategies.push_back(strategy_or_throw(s));
  }
  std::vector<std::size_t> payloads = o.payloads.empty() ? std::vector<std::size_t>{g.payload} : o.payloads;

  std::vector<SimConfig> configs;
  for (std::size_t payload : payloads) {
    for (Strategy s : strategies) {
      for (std::uint64_t k = 0; k < o.seed_count; ++k) {
        configs.push_back(SimConfig{s, payload, g.battery_j, o.max_iterations, g.seed + k});
      }
    }
  }
  std::vector<SimResult> results = simulate_all(p.topology, p.partition, p.model, configs, o.jobs);

  json runs = json::array();
  std::ostringstream table;
  int violations = 0;
  std::map<std::size_t, BoundsReport> bounds_by_payload;
  for (std::size_t payload : payloads) {
    bounds_by_payload.emplace(payload, lifetime_bounds(p.partition, p.model, payload, g.battery_j, g.interval_s));
  }
  table << "payload  strategy              seed   completed      lower      upper  status\n";
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const BoundsReport& bounds = bounds_by_payload.at(configs[i].payload_bytes);
    json run = {{"payload_bytes", configs[i].payload_bytes}, {"result", report::sim_result_to_json(results[i])}};
    std::string status = "ok";
    try {
      run["verdict"] = report::verdict_to_json(validate_against_bounds(results[i], bounds));
      run["bound_violation"] = nullptr;
    } catch (const BoundViolation& e) {
      run["verdict"] = nullptr;
      run["bound_violation"] = e.what();
      status = "VIOLATION";
      ++violations;
    }
    runs.push_back(std::move(run));
    char line[160];
    std::snprintf(line, sizeof line, "%7zu  %-20s %5llu %11lld %10lld %10lld  %s\n", configs[i].payload_bytes,
                  std::string(to_string(configs[i].strategy)).c_str(),
                  static_cast<unsigned long long>(configs[i].seed),
                  static_cast<long long>(results[i].completed_iterations),
                  static_cast<long long>(bounds.t_max_lower_iterations),
                  static_cast<long long>(bounds.t_max_upper_iterations), status.c_str());
    table << line;
  }

  Sink sink(g.output);
  if (g.format == "structured") {
    json bounds_json = json::array();
    for (const auto& [payload, b] : bounds_by_payload) bounds_json.push_back(report::bounds_to_json(b));
    print_json(sink.stream(), report::document("sweep", {{"profile", g.profile},
                                                         {"frame", io::frame_to_json(p.frame)},
                                                         {"bounds", std::move(bounds_json)},
                                                         {"runs", std::move(runs)}}));
  } else {
    sink.stream() << table.str();
  }
  if (violations > 0) {
    std::cerr << "error: " << violations << " run(s) violated the analytical bounds\n";
    return kExitBoundViolation;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lifetime bounds and routing simulation for continuous wireless sensor networks"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--profile", g.profile, "Radio profile: preset key, profile file, or file#name")
      ->capture_default_str();
  app.add_option("--frame-preset", g.frame_preset, "Frame preset: paper-802154-short-addr | paper-tinyos");
  app.add_option("--payload", g.payload, "Data payload per packet (bytes)")->capture_default_str();
  app.add_option("--battery", g.battery_j, "Battery energy per node (J)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--interval", g.interval_s, "Iteration interval (s)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"structured", "table", "trace"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for deterministic tie-breaking")->capture_default_str();
  app.add_flag("--round-like-paper", g.round_like_paper, "Round calibrated energies to two decimals");
  app.add_option("-o,--output", g.output, "Write output to this file instead of stdout");

  std::string topology_path;
  std::string readings_path;

  auto* partition_cmd = app.add_subcommand("partition", "Print hop-distance sphere sizes of a topology");
  partition_cmd->add_option("topology", topology_path, "Topology file")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Compute analytical lifetime bounds");
  bounds_cmd->add_option("topology", topology_path, "Topology file")->required();

  SimulateOptions sim_opts;
  auto* simulate_cmd = app.add_subcommand("simulate", "Simulate until the first node dies and check the bounds");
  simulate_cmd->add_option("topology", topology_path, "Topology file")->required();
  simulate_cmd->add_option("--strategy", sim_opts.strategy, "balanced-rotating | static-tree | round-robin-parent")
      ->capture_default_str();
  simulate_cmd->add_option("--max-iterations", sim_opts.max_iterations, "Iteration cap")->capture_default_str();
  simulate_cmd->add_option("--trace", sim_opts.trace_path, "Also write a per-iteration CSV trace here");
  simulate_cmd->add_option("--trace-every", sim_opts.trace_every, "Trace every k-th iteration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CalibrateOptions cal_opts;
  auto* calibrate_cmd = app.add_subcommand("calibrate", "Build a radio profile from scope readings");
  calibrate_cmd->add_option("readings", readings_path, "Readings file")->required();
  calibrate_cmd->add_option("--name", cal_opts.name, "Name of the emitted profile")->capture_default_str();

  SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run independent simulations over strategies, seeds and payloads");
  sweep_cmd->add_option("topology", topology_path, "Topology file")->required();
  sweep_cmd->add_option("--strategies", sweep_opts.strategies, "Strategies (default: all)")->delimiter(',');
  sweep_cmd->add_option("--payloads", sweep_opts.payloads, "Payload sizes (default: --payload)")->delimiter(',');
  sweep_cmd->add_option("--seeds", sweep_opts.seed_count, "Number of consecutive seeds starting at --seed")
      ->capture_default_str();
  sweep_cmd->add_option("--jobs", sweep_opts.jobs, "Worker threads (0 = hardware concurrency)")
      ->capture_default_str();
  sweep_cmd->add_option("--max-iterations", sweep_opts.max_iterations, "Iteration cap")->capture_default_str();

  for (auto* sub : {partition_cmd, bounds_cmd, simulate_cmd, calibrate_cmd, sweep_cmd}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*partition_cmd) return cmd_partition(g, topology_path);
    if (*bounds_cmd) return cmd_bounds(g, topology_path);
    if (*simulate_cmd) return cmd_simulate(g, topology_path, sim_opts);
    if (*calibrate_cmd) return cmd_calibrate(g, readings_path, cal_opts);
    if (*sweep_cmd) return cmd_sweep(g, topology_path, sweep_opts);
  } catch (const UnreachableNode& e) {
    std::cerr << "error: UnreachableNode: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

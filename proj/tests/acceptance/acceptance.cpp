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

// Acceptance suite: runs every exit criterion of the toolkit and prints one
// PASS/FAIL line per criterion. Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "random_network.hpp"
#include "wsnlife/bounds.hpp"
#include "wsnlife/calibration.hpp"
#include "wsnlife/energy_model.hpp"
#include "wsnlife/error.hpp"
#include "wsnlife/frame_model.hpp"
#include "wsnlife/io.hpp"
#include "wsnlife/numeric.hpp"
#include "wsnlife/report.hpp"
#include "wsnlife/simulator.hpp"
#include "wsnlife/topology.hpp"

namespace {

using namespace wsnlife;
using Clock = std::chrono::steady_clock;

// Pinned tolerances.
constexpr double kExact = 1e-12;              // "exact" decimal values held in doubles
constexpr double kSphereEnergyTol = 0.005;    // mJ
constexpr std::int64_t kIterationTol = 1;     // iterations
constexpr double kHoursTol = 1.0;             // h
constexpr double kRatioTarget = 2.68;
constexpr double kRatioTol = 0.01;
constexpr double kCalibrationTol = 0.0005;    // mJ
constexpr double kFastRuntimeMs = 100.0;      // "milliseconds"
constexpr double kSweepRuntimeS = 120.0;
constexpr int kSweepTopologies = 100;
constexpr int kOracleGraphs = 50;
constexpr std::size_t kMaxNodes = 30;
constexpr double kMaxSweepBatteryJ = 50.0;

std::string data(const std::string& rel) { return std::string(WSNLIFE_DATA_DIR) + "/" + rel; }

/// Collects check failures for one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void near(double actual, double expected, double tol, const std::string& what) {
    std::ostringstream msg;
    msg.precision(12);
    msg << what << ": got " << actual << ", want " << expected << " +/- " << tol;
    expect(std::fabs(actual - expected) <= tol, msg.str());
  }
  const std::vector<std::string>& failures() const { return failures_; }
  std::string detail;

 private:
  std::vector<std::string> failures_;
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

EnergyModel cc2420_model() {
  auto profile = io::resolve_profile("cc2420-paper");
  return build_model(profile.profile, *frame_preset("paper-tinyos"));
}

BoundsReport fixture_bounds(std::size_t payload, double interval_s) {
  auto topology = io::load_topology(data("topologies/sphere29.json"));
  return lifetime_bounds(partition(topology), cc2420_model(), payload, 30780, interval_s);
}

void base_case(Criterion& c) {
  const auto start = Clock::now();
  auto topology = io::load_topology(data("topologies/sphere29.json"));
  auto parts = partition(topology);
  c.expect(parts.sizes() == std::vector<std::size_t>{1, 4, 6, 10, 8}, "fixture sphere sizes 1,4,6,10,8");
  auto model = cc2420_model();
  auto b = lifetime_bounds(parts, model, 2, 30780, 10);
  const double ms = elapsed_ms(start);

  c.near(b.e_send, 3.78, kExact, "E(send)");
  c.near(b.e_recv, 4.27, kExact, "E(receive)");
  const double m[] = {52.08, 27.93, 10.22, 3.78};
  c.expect(b.per_sphere_min.size() == 4, "four spheres");
  for (std::size_t i = 0; i < 4 && i < b.per_sphere_min.size(); ++i) {
    c.near(b.per_sphere_min[i], m[i], kSphereEnergyTol, "m_" + std::to_string(i + 1));
  }
  c.expect(std::llabs(b.t_max_lower_iterations - 139194) <= kIterationTol, "lower T_max within 1 of 139194");
  c.expect(std::llabs(b.t_max_upper_iterations - 591014) <= kIterationTol, "upper T_max within 1 of 591014");
  c.near(b.lifetime_lower_h, 387, kHoursTol, "lower lifetime (h)");
  c.near(b.lifetime_upper_h, 1642, kHoursTol, "upper lifetime (h)");
  c.expect(ms < kFastRuntimeMs, "runtime under 100 ms");

  char buf[200];
  std::snprintf(buf, sizeof buf, "m=(%.2f, %.2f, %.2f, %.2f) T=[%lld, %lld] life=[%.2f h, %.2f h] %.2f ms",
                b.per_sphere_min[0], b.per_sphere_min[1], b.per_sphere_min[2], b.per_sphere_min[3],
                static_cast<long long>(b.t_max_lower_iterations), static_cast<long long>(b.t_max_upper_iterations),
                b.lifetime_lower_h, b.lifetime_upper_h, ms);
  c.detail = buf;
}

void aggregation(Criterion& c) {
  const auto start = Clock::now();
  auto base = fixture_bounds(2, 10);
  auto agg = fixture_bounds(6, 30);
  const double ms = elapsed_ms(start);
  c.near(agg.lifetime_lower_h, 1036, kHoursTol, "lower lifetime (h)");
  c.near(agg.lifetime_upper_h, 4398, kHoursTol, "upper lifetime (h)");
  const double lower_ratio = agg.lifetime_lower_h / base.lifetime_lower_h;
  const double upper_ratio = agg.lifetime_upper_h / base.lifetime_upper_h;
  c.near(lower_ratio, kRatioTarget, kRatioTol, "lower-bound ratio");
  c.near(upper_ratio, kRatioTarget, kRatioTol, "upper-bound ratio");
  c.expect(ms < kFastRuntimeMs, "runtime under 100 ms");
  char buf[160];
  std::snprintf(buf, sizeof buf, "life=[%.2f h, %.2f h] ratios=(%.3f, %.3f)", agg.lifetime_lower_h,
                agg.lifetime_upper_h, lower_ratio, upper_ratio);
  c.detail = buf;
}

void model_construction(Criterion& c) {
  auto m = cc2420_model();
  c.near(m.m_send, 0.12, kExact, "m_send");
  c.near(m.b_send, 3.54, kExact, "b_send");
  c.near(m.m_receive, 0.12, kExact, "m_receive");
  c.near(m.b_receive, 4.03, kExact, "b_receive");
  char buf[120];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g, %.17g, %.17g)", m.m_send, m.b_send, m.m_receive, m.b_receive);
  c.detail = buf;
}

void calibration(Criterion& c) {
  auto readings = io::load_readings(data("readings/cc2420-scope.json"));
  auto rounded = profile_from_readings(readings.input, readings.frame, {.round_like_paper = true});
  c.expect(rounded.e_cca == 0.08, "rounded CCA = 0.08");
  c.expect(rounded.e_listen == 0.58, "rounded listening = 0.58");
  c.expect(rounded.m_tx == 0.12, "rounded send rate = 0.12");

  auto raw = profile_from_readings(readings.input, readings.frame);
  c.near(raw.e_cca, 0.0806, kCalibrationTol, "CCA energy");
  c.near(raw.e_listen, 0.576, kCalibrationTol, "listening energy");
  c.near(raw.m_tx, 0.1202, kCalibrationTol, "send rate");
  char buf[160];
  std::snprintf(buf, sizeof buf, "rounded (%.2f, %.2f, %.2f) raw (%.5f, %.5f, %.5f)", rounded.e_cca,
                rounded.e_listen, rounded.m_tx, raw.e_cca, raw.e_listen, raw.m_tx);
  c.detail = buf;
}

/// Runs the bracketing sweep; returns the structured document of every run.
std::string bracketing_sweep(Criterion& c, bool parallel) {
  std::mt19937_64 rng(20260415);
  auto model = cc2420_model();
  nlohmann::json runs = nlohmann::json::array();
  int violations = 0;
  for (int i = 0; i < kSweepTopologies; ++i) {
    const std::size_t n = 2 + rng() % (kMaxNodes - 1);
    const double p_extra = static_cast<double>(rng() % 20) / 100.0;
    auto topology = testing::random_connected(rng, n, p_extra);
    auto parts = partition(topology);
    const double battery = 1.0 + static_cast<double>(rng() % 4900) / 100.0;
    const std::size_t payload = rng() % 30;
    auto bounds = lifetime_bounds(parts, model, payload, battery, 10);
    c.expect(battery <= kMaxSweepBatteryJ, "battery within 50 J");

    std::vector<SimConfig> configs;
    for (Strategy s : all_strategies()) configs.push_back(SimConfig{s, payload, battery, 1'000'000'000, 1000u + i});
    std::vector<SimResult> results;
    if (parallel) {
      results = simulate_all(topology, parts, model, configs, 0);
    } else {
      for (const auto& cfg : configs) results.push_back(simulate(topology, parts, model, cfg));
    }
    for (const auto& r : results) {
      nlohmann::json run = {{"topology", i}, {"result", report::sim_result_to_json(r)}};
      try {
        run["verdict"] = report::verdict_to_json(validate_against_bounds(r, bounds));
      } catch (const BoundViolation& e) {
        ++violations;
        c.expect(false, e.what());
      }
      c.expect(!r.cap_reached, "simulation terminated before the iteration cap");
      runs.push_back(std::move(run));
    }
  }
  c.expect(violations == 0, "zero bound violations");
  return report::document("sweep", {{"runs", std::move(runs)}}).dump();
}

void sweep(Criterion& c, std::string& output) {
  const auto start = Clock::now();
  output = bracketing_sweep(c, false);
  const double seconds = elapsed_ms(start) / 1000.0;
  c.expect(seconds < kSweepRuntimeS, "sweep under 2 minutes");
  char buf[120];
  std::snprintf(buf, sizeof buf, "%d topologies x 3 strategies, %.2f s", kSweepTopologies, seconds);
  c.detail = buf;
}

void tightness(Criterion& c) {
  auto model = cc2420_model();
  std::ostringstream detail;
  {
    auto topology = io::load_topology(data("topologies/chain3.json"));
    auto parts = partition(topology);
    auto b = lifetime_bounds(parts, model, 2, 30780, 10);
    for (Strategy s : all_strategies()) {
      auto r = simulate(topology, parts, model, SimConfig{s, 2, 30780, 1'000'000'000, 0});
      c.expect(r.completed_iterations == b.t_max_lower_iterations, "chain equals lower bound");
      c.expect(r.completed_iterations == b.t_max_upper_iterations, "chain equals upper bound");
      if (s == Strategy::kBalancedRotating) detail << "chain " << r.completed_iterations;
    }
  }
  {
    auto topology = io::load_topology(data("topologies/star3.json"));
    auto parts = partition(topology);
    auto b = lifetime_bounds(parts, model, 2, 30780, 10);
    for (Strategy s : all_strategies()) {
      auto r = simulate(topology, parts, model, SimConfig{s, 2, 30780, 1'000'000'000, 0});
      c.expect(r.completed_iterations == b.t_max_upper_iterations, "star equals upper bound");
      if (s == Strategy::kBalancedRotating) detail << ", star " << r.completed_iterations;
    }
    auto small = simulate(topology, parts, model, SimConfig{Strategy::kStaticTree, 2, 0.0378, 1'000'000'000, 0});
    c.expect(small.completed_iterations == 10, "star with 37.8 mJ completes 10 iterations");
  }
  c.detail = detail.str();
}

void partition_oracle(Criterion& c) {
  std::mt19937_64 rng(777);
  std::size_t nodes = 0;
  for (int i = 0; i < kOracleGraphs; ++i) {
    auto topology = testing::random_connected(rng, 1 + rng() % kMaxNodes, static_cast<double>(rng() % 25) / 100.0);
    auto parts = partition(topology);
    auto hops = testing::brute_force_hops(topology);
    for (std::size_t v = 0; v < topology.size(); ++v) {
      c.expect(parts.sphere_of(v) == hops[v], "sphere index equals hop distance");
    }
    nodes += topology.size();
  }
  c.detail = std::to_string(kOracleGraphs) + " graphs, " + std::to_string(nodes) + " nodes";
}

void determinism(Criterion& c, const std::string& first) {
  Criterion scratch;
  const std::string again = bracketing_sweep(scratch, true);
  c.expect(scratch.failures().empty(), "repeat sweep passes");
  c.expect(!first.empty() && again == first, "structured outputs byte-identical");
  c.detail = std::to_string(first.size()) + " bytes compared (second run multi-threaded)";
}

}  // namespace

int main() {
  struct Entry {
    const char* id;
    const char* title;
    std::function<void(Criterion&)> run;
  };
  std::string sweep_output;
  const std::vector<Entry> entries = {
      {"AC1", "29-node base case (n=2, 10 s)", base_case},
      {"AC2", "aggregation variant (n=6, 30 s)", aggregation},
      {"AC3", "CC2420 model coefficients", model_construction},
      {"AC4", "scope-reading calibration", calibration},
      {"AC5", "bound-bracketing sweep", [&](Criterion& c) { sweep(c, sweep_output); }},
      {"AC6", "tightness witnesses (chain, star)", tightness},
      {"AC7", "partition vs brute-force hop distance", partition_oracle},
      {"AC8", "determinism of the sweep", [&](Criterion& c) { determinism(c, sweep_output); }},
  };

  int failed = 0;
  for (const auto& e : entries) {
    Criterion c;
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const bool ok = c.failures().empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] %s %s%s%s\n", ok ? "PASS" : "FAIL", e.id, e.title, c.detail.empty() ? "" : " :: ",
                c.detail.c_str());
    for (std::size_t i = 0; i < c.failures().size() && i < 10; ++i) {
      std::printf("       - %s\n", c.failures()[i].c_str());
    }
  }
  std::printf("%zu/%zu criteria passed\n", entries.size() - failed, entries.size());
  return failed == 0 ? 0 : 1;
}

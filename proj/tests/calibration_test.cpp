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

#include <doctest.h>

#include "wsnlife/calibration.hpp"
#include "wsnlife/error.hpp"

using namespace wsnlife;
using doctest::Approx;

namespace {

ScopeReading scope(double v, double seconds) {
  ScopeReading r;
  r.v_scope = v;
  r.duration_s = seconds;
  return r;
}

CalibrationInput measured_cc2420() {
  CalibrationInput in;
  in.cca = {scope(3.2, 0.0014)};
  in.listen = {scope(3.2, 0.010)};
  in.tx = FrameReading{{scope(2.92, 0.096)}, 46, 4};
  in.rx = FrameReading{{scope(2.88, 0.096)}, 46, 4};
  return in;
}

}  // namespace

TEST_CASE("energy of a scope reading") {
  CHECK(reading_energy(scope(3.2, 0.0014)) == Approx(0.0806722689).epsilon(1e-9));
  CHECK(reading_energy(scope(3.2, 0.010)) == Approx(0.5762304922).epsilon(1e-9));
  CHECK(reading_energy(scope(2.92, 0.096)) == Approx(5.0477791116).epsilon(1e-9));
  CHECK(reading_energy(scope(2.92, 0.096)) / 42 == Approx(0.1201852169).epsilon(1e-9));
}

TEST_CASE("reading energy scaling") {
  const auto r = scope(1.5, 0.02);
  const double e = reading_energy(r);
  auto v2 = r;
  v2.v_scope *= 2;
  auto t3 = r;
  t3.duration_s *= 3;
  auto g2 = r;
  g2.gain *= 2;
  auto r4 = r;
  r4.r_sense *= 4;
  CHECK(reading_energy(v2) == Approx(2 * e));
  CHECK(reading_energy(t3) == Approx(3 * e));
  CHECK(reading_energy(g2) == Approx(e / 2));
  CHECK(reading_energy(r4) == Approx(e / 4));
}

TEST_CASE("non-positive readings are rejected") {
  CHECK_THROWS_AS(reading_energy(scope(0.0, 0.01)), NonPositiveInput);
  CHECK_THROWS_AS(reading_energy(scope(1.0, -0.01)), NonPositiveInput);
  auto r = scope(1.0, 0.01);
  r.gain = 0;
  CHECK_THROWS_AS(reading_energy(r), NonPositiveInput);
}

TEST_CASE("profile from the CC2420 readings") {
  auto p = profile_from_readings(measured_cc2420(), tinyos_frame());
  CHECK(p.m_tx == Approx(0.1201852169).epsilon(1e-9));
  CHECK(p.m_rx == Approx(0.1185388441).epsilon(1e-9));
  CHECK(p.e_cca == Approx(0.0806722689).epsilon(1e-9));
  CHECK(p.e_listen == Approx(0.5762304922).epsilon(1e-9));
  CHECK(p.tx_cost(18) == Approx(18 * p.m_tx));
  CHECK(p.block_overrides.size() == 4);
}

TEST_CASE("rounded calibration reproduces the published CC2420 model") {
  auto p = profile_from_readings(measured_cc2420(), tinyos_frame(), {.round_like_paper = true});
  CHECK(p == cc2420_profile());
  auto model = build_model(p, tinyos_frame());
  CHECK(send_energy(model, 2) == Approx(3.78).epsilon(1e-12));
  CHECK(receive_energy(model, 2) == Approx(4.27).epsilon(1e-12));
}

TEST_CASE("measured blocks take precedence over extrapolation") {
  auto in = measured_cc2420();
  in.measured_blocks[{Direction::kRx, 11}] = 1.234;
  auto p = profile_from_readings(in, tinyos_frame(), {.round_like_paper = true});
  CHECK(p.rx_cost(11) == 1.234);
}

TEST_CASE("calibration symmetry, linearity and averaging") {
  auto in = measured_cc2420();
  in.rx = in.tx;
  auto p = profile_from_readings(in, tinyos_frame());
  CHECK(p.m_tx == p.m_rx);

  auto doubled = measured_cc2420();
  for (auto* list : {&doubled.cca, &doubled.listen, &doubled.tx.readings, &doubled.rx.readings}) {
    for (auto& r : *list) r.v_scope *= 2;
  }
  auto base = profile_from_readings(measured_cc2420(), tinyos_frame());
  auto twice = profile_from_readings(doubled, tinyos_frame());
  CHECK(twice.m_tx == Approx(2 * base.m_tx));
  CHECK(twice.m_rx == Approx(2 * base.m_rx));
  CHECK(twice.e_cca == Approx(2 * base.e_cca));
  CHECK(twice.e_listen == Approx(2 * base.e_listen));
  CHECK(twice.rx_cost(11) == Approx(2 * base.rx_cost(11)));

  std::vector<ScopeReading> pair = {scope(3.0, 0.01), scope(3.4, 0.01)};
  CHECK(mean_energy(pair) == Approx(reading_energy(scope(3.2, 0.01))));
}

TEST_CASE("preamble exclusion must leave bytes") {
  auto in = measured_cc2420();
  in.tx.excluded_preamble_bytes = 46;
  CHECK_THROWS_AS(profile_from_readings(in, tinyos_frame()), ZeroEffectiveBytes);
}

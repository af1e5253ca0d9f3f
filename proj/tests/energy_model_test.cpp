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

#include <random>

#include "wsnlife/energy_model.hpp"
#include "wsnlife/error.hpp"

using namespace wsnlife;
using doctest::Approx;

TEST_CASE("CC2420 model coefficients") {
  auto model = build_model(cc2420_profile(), tinyos_frame());
  CHECK(model.overhead_bytes == 18);
  CHECK(model.ack_bytes == 11);
  CHECK(model.m_send == 0.12);
  CHECK(model.m_receive == 0.12);
  CHECK(model.b_send == Approx(3.54).epsilon(1e-12));
  CHECK(model.b_receive == Approx(4.03).epsilon(1e-12));
}

TEST_CASE("CC2420 per-packet energies") {
  auto model = build_model(cc2420_profile(), tinyos_frame());
  CHECK(send_energy(model, 2) == Approx(3.78).epsilon(1e-12));
  CHECK(receive_energy(model, 2) == Approx(4.27).epsilon(1e-12));
  CHECK(send_energy(model, 6) == Approx(4.26).epsilon(1e-12));
  CHECK(receive_energy(model, 6) == Approx(4.75).epsilon(1e-12));
  CHECK(send_energy(model, 0) == model.b_send);
  CHECK(receive_energy(model, 0) == model.b_receive);
  for (std::size_t n = 0; n < 120; n += 7) {
    CHECK(receive_energy(model, n) - send_energy(model, n) == Approx(0.49).epsilon(1e-12));
  }
}

TEST_CASE("zero profile yields a zero model") {
  auto model = build_model(RadioProfile{}, tinyos_frame());
  CHECK(model.is_zero());
}

TEST_CASE("unit per-byte profile without overrides") {
  RadioProfile p;
  p.m_tx = 1.0;
  p.m_rx = 1.0;
  auto model = build_model(p, tinyos_frame());
  CHECK(model.b_send == 29.0);
  CHECK(model.b_receive == 29.0);
}

TEST_CASE("linearity without overrides and monotone energies") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    RadioProfile p;
    p.m_tx = p.m_rx = u(rng);
    p.e_cca = u(rng);
    p.e_listen = u(rng);
    auto model = build_model(p, short_address_frame());
    CHECK(model.b_send == Approx(p.e_cca + p.m_tx * (17 + 11)).epsilon(1e-12));
    CHECK(model.b_receive == Approx(p.e_listen + p.m_rx * (17 + 11)).epsilon(1e-12));
    for (std::size_t n = 0; n < 50; ++n) {
      CHECK(send_energy(model, n + 1) >= send_energy(model, n));
      CHECK(receive_energy(model, n + 1) >= receive_energy(model, n));
    }
  }
}

TEST_CASE("block overrides apply only to their exact length and direction") {
  RadioProfile p;
  p.m_tx = 0.5;
  p.m_rx = 0.25;
  p.block_overrides[{Direction::kTx, 4}] = 9.0;
  CHECK(p.tx_cost(4) == 9.0);
  CHECK(p.tx_cost(5) == 2.5);
  CHECK(p.rx_cost(4) == 1.0);
}

TEST_CASE("negative energies are rejected") {
  RadioProfile p;
  p.e_cca = -0.1;
  CHECK_THROWS_AS(build_model(p, tinyos_frame()), InvalidProfile);
}

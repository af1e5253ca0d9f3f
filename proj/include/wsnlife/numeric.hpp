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

#include <cmath>
#include <cstdint>

namespace wsnlife {

/// Relative slack used wherever an energy budget is compared against a
/// per-iteration cost or divided into an iteration count. Both the simulator
/// and the analytical bounds use the same value so that a budget that is an
/// exact multiple of a cost yields the same iteration count on both sides.
inline constexpr double kBudgetTolerance = 1e-9;

/// Number of whole iterations contained in a real-valued iteration count.
inline std::int64_t whole_iterations(double iterations) {
  return static_cast<std::int64_t>(std::floor(iterations * (1.0 + kBudgetTolerance)));
}

/// True when `cost` fits in `budget` up to kBudgetTolerance.
inline bool fits_budget(double cost, double budget) {
  return cost <= budget * (1.0 + kBudgetTolerance);
}

/// Half-up rounding to `digits` decimals, for presentation only.
inline double round_half_up(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  // The nudge keeps decimal ties such as 2.135 (stored as 2.13499...) rounding up.
  return std::floor(value * scale + 0.5 + 1e-9) / scale;
}

}  // namespace wsnlife

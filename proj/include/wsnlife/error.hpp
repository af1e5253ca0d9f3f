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

#include <stdexcept>
#include <string>

namespace wsnlife {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyTopology : public Error {
 public:
  EmptyTopology() : Error("topology has no nodes") {}
};

/// Structural violation: unknown endpoint, self-loop, duplicate edge or node.
class InvalidTopology : public Error {
 public:
  using Error::Error;
};

class UnreachableNode : public Error {
 public:
  explicit UnreachableNode(std::string node)
      : Error("node '" + node + "' has no path to the base station"), node_(std::move(node)) {}

  const std::string& node() const noexcept { return node_; }

 private:
  std::string node_;
};

class InvalidFrameConfig : public Error {
 public:
  using Error::Error;
};

class InvalidProfile : public Error {
 public:
  using Error::Error;
};

class NonPositiveInput : public Error {
 public:
  using Error::Error;
};

class ZeroEffectiveBytes : public Error {
 public:
  using Error::Error;
};

class SphereIndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ZeroEnergyModel : public Error {
 public:
  ZeroEnergyModel() : Error("energy model has zero per-packet cost; lifetime is unbounded") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidStrategyForTopology : public Error {
 public:
  using Error::Error;
};

/// Raised when a simulated lifetime falls outside the analytical bracket.
/// This always indicates a defect, never a legitimate outcome.
class BoundViolation : public Error {
 public:
  using Error::Error;
};

/// File could not be read or does not match its documented schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace wsnlife

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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wsnlife {

/// Opaque node identifier. Integer ids from input files are carried in their
/// decimal string form; ordering is lexicographic on that string.
class NodeId {
 public:
  NodeId() = default;
  explicit NodeId(std::string value) : value_(std::move(value)) {}

  const std::string& str() const noexcept { return value_; }

  friend auto operator<=>(const NodeId&, const NodeId&) = default;

 private:
  std::string value_;
};

using Edge = std::pair<NodeId, NodeId>;

/// Undirected sensor network graph with a single designated base station.
///
/// Construction validates the graph: the node set is non-empty, the base is a
/// member, every edge joins two distinct known nodes, and no node or edge
/// occurs twice (edges are unordered, so {a,b} and {b,a} collide). Nodes are
/// stored in lexicographic order and addressed internally by that index.
class Topology {
 public:
  Topology(std::vector<NodeId> nodes, std::vector<Edge> edges, NodeId base);

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
  const NodeId& base() const noexcept { return nodes_[base_index_]; }
  std::size_t base_index() const noexcept { return base_index_; }

  /// Neighbor indices of node `index`, ascending.
  const std::vector<std::size_t>& neighbors(std::size_t index) const { return adjacency_.at(index); }

  std::optional<std::size_t> index_of(const NodeId& id) const;

  /// Edges as sorted index pairs (first < second), ascending.
  std::vector<std::pair<std::size_t, std::size_t>> edge_indices() const;

 private:
  std::vector<NodeId> nodes_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::map<NodeId, std::size_t> index_;
  std::size_t base_index_ = 0;
};

/// Hop-distance layers around the base station.
///
/// spheres()[i] holds the node indices exactly i hops from the base, in
/// ascending (lexicographic id) order. sizes()[i] = s_i, cumulative()[i] = b_i.
class SpherePartition {
 public:
  SpherePartition(std::vector<std::vector<std::size_t>> spheres, std::size_t total);

  /// Layering with the given sphere sizes over consecutively numbered nodes.
  /// Only the sizes matter to the bound formulas.
  static SpherePartition from_sizes(const std::vector<std::size_t>& sizes);

  /// Index of the outermost sphere.
  std::size_t depth() const noexcept { return spheres_.size() - 1; }
  std::size_t total() const noexcept { return total_; }

  const std::vector<std::vector<std::size_t>>& spheres() const noexcept { return spheres_; }
  const std::vector<std::size_t>& sphere(std::size_t i) const { return spheres_.at(i); }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  const std::vector<std::size_t>& cumulative() const noexcept { return cumulative_; }

  std::size_t size_of(std::size_t i) const { return sizes_.at(i); }
  std::size_t ball_size(std::size_t i) const { return cumulative_.at(i); }

  /// Sphere index of node `node_index`.
  std::size_t sphere_of(std::size_t node_index) const { return sphere_of_.at(node_index); }

 private:
  std::vector<std::vector<std::size_t>> spheres_;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> cumulative_;
  std::vector<std::size_t> sphere_of_;
  std::size_t total_;
};

/// Breadth-first layering of `topology` from its base station.
/// Throws UnreachableNode naming the lexicographically first node with no
/// path to the base.
SpherePartition partition(const Topology& topology);

}  // namespace wsnlife

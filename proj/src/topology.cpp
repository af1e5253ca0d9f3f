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

#include "wsnlife/topology.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "wsnlife/error.hpp"

namespace wsnlife {

Topology::Topology(std::vector<NodeId> nodes, std::vector<Edge> edges, NodeId base) {
  if (nodes.empty()) throw EmptyTopology();

  std::sort(nodes.begin(), nodes.end());
  if (auto dup = std::adjacent_find(nodes.begin(), nodes.end()); dup != nodes.end()) {
    throw InvalidTopology("duplicate node '" + dup->str() + "'");
  }
  nodes_ = std::move(nodes);
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);

  auto base_it = index_.find(base);
  if (base_it == index_.end()) throw InvalidTopology("base '" + base.str() + "' is not a node");
  base_index_ = base_it->second;

  adjacency_.resize(nodes_.size());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : edges) {
    auto ia = index_.find(a);
    auto ib = index_.find(b);
    if (ia == index_.end()) throw InvalidTopology("edge endpoint '" + a.str() + "' is not a node");
    if (ib == index_.end()) throw InvalidTopology("edge endpoint '" + b.str() + "' is not a node");
    if (ia->second == ib->second) throw InvalidTopology("self-loop on '" + a.str() + "'");
    auto key = std::minmax(ia->second, ib->second);
    if (!seen.insert(key).second) {
      throw InvalidTopology("duplicate edge '" + a.str() + "'-'" + b.str() + "'");
    }
    adjacency_[ia->second].push_back(ib->second);
    adjacency_[ib->second].push_back(ia->second);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::optional<std::size_t> Topology::index_of(const NodeId& id) const {
  if (auto it = index_.find(id); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> Topology::edge_indices() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < adjacency_.size(); ++a) {
    for (std::size_t b : adjacency_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

SpherePartition::SpherePartition(std::vector<std::vector<std::size_t>> spheres, std::size_t total)
    : spheres_(std::move(spheres)), total_(total) {
  if (spheres_.empty() || total_ == 0) throw EmptyTopology();
  sphere_of_.assign(total_, std::numeric_limits<std::size_t>::max());
  std::size_t running = 0;
  for (std::size_t i = 0; i < spheres_.size(); ++i) {
    auto& members = spheres_[i];
    if (members.empty()) throw InvalidTopology("sphere " + std::to_string(i) + " is empty");
    std::sort(members.begin(), members.end());
    for (std::size_t v : members) {
      if (v >= total_) throw InvalidTopology("sphere member index out of range");
      if (sphere_of_[v] != std::numeric_limits<std::size_t>::max()) {
        throw InvalidTopology("node index " + std::to_string(v) + " appears in two spheres");
      }
      sphere_of_[v] = i;
    }
    running += members.size();
    sizes_.push_back(members.size());
    cumulative_.push_back(running);
  }
  if (running != total_) throw InvalidTopology("spheres do not cover every node");
}

SpherePartition SpherePartition::from_sizes(const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<std::size_t>> spheres;
  std::size_t next = 0;
  for (std::size_t s : sizes) {
    std::vector<std::size_t> members(s);
    for (auto& m : members) m = next++;
    spheres.push_back(std::move(members));
  }
  return SpherePartition(std::move(spheres), next);
}

SpherePartition partition(const Topology& topology) {
  constexpr auto kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> hops(topology.size(), kUnvisited);
  std::queue<std::size_t> frontier;
  hops[topology.base_index()] = 0;
  frontier.push(topology.base_index());
  std::size_t depth = 0;
  while (!frontier.empty()) {
    std::size_t v = frontier.front();
    frontier.pop();
    for (std::size_t w : topology.neighbors(v)) {
      if (hops[w] != kUnvisited) continue;
      hops[w] = hops[v] + 1;
      depth = std::max(depth, hops[w]);
      frontier.push(w);
    }
  }

  std::vector<std::vector<std::size_t>> spheres(depth + 1);
  for (std::size_t v = 0; v < hops.size(); ++v) {
    // Indices follow lexicographic id order, so the first miss is the
    // lexicographically smallest unreachable node.
    if (hops[v] == kUnvisited) throw UnreachableNode(topology.nodes()[v].str());
    spheres[hops[v]].push_back(v);
  }
  return SpherePartition(std::move(spheres), topology.size());
}

}  // namespace wsnlife

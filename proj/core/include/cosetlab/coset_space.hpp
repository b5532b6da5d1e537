// Copyright 2026 The cosetlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// The coset spaces G/Gamma_0 and H/Gamma_0 with G = Z x| F and H = F.
// The left coset (n, x)Gamma_0 equals {n} x x.Gamma_n, so a coset is named by
// its level n together with x retracted modulo Gamma_n.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cosetlab/free_group.hpp"

namespace cosetlab {

class Coset {
 public:
  Coset() = default;

  // Canonical coset of (level, representative). Accepts any word.
  static Coset of(GenIndex level, const Word& representative) {
    return Coset(level, retract(representative, level));
  }
  static Coset base(GenIndex level) { return Coset(level, Word{}); }

  GenIndex level() const noexcept { return level_; }
  const Word& tail() const noexcept { return tail_; }

  friend bool operator==(const Coset&, const Coset&) = default;
  friend auto operator<=>(const Coset&, const Coset&) = default;

 private:
  Coset(GenIndex level, Word tail) : level_(level), tail_(std::move(tail)) {}

  GenIndex level_ = 0;
  Word tail_;  // every letter index > level_
};

Coset normal_form(const GElement& a);
Coset act(const GElement& g, const Coset& c);

std::string to_string(const Coset& c);
std::size_t hash_value(const Coset& c) noexcept;

struct OrbitEdge {
  std::uint32_t src;
  std::uint32_t gen;
  std::uint32_t dst;
  friend bool operator==(const OrbitEdge&, const OrbitEdge&) = default;
};

// Generator step whose image falls outside the ball.
struct BoundaryMark {
  std::uint32_t src;
  std::uint32_t gen;
};

inline constexpr std::size_t kDefaultNodeCap = 2'000'000;

// Breadth-first truncation of the Schreier graph of a finite generator
// sequence acting on cosets. Node 0 is the base; nodes are ordered by
// distance, then by discovery (generators tried in the given order), so the
// ball of any smaller radius is a prefix of the node list.
class OrbitBall {
 public:
  OrbitBall(const Coset& base, std::vector<GElement> generators, int radius,
            std::size_t node_cap = kDefaultNodeCap);

  const Coset& base() const noexcept { return nodes_.front(); }
  std::span<const GElement> generators() const noexcept { return generators_; }
  int radius() const noexcept { return radius_; }

  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const Coset> nodes() const noexcept { return nodes_; }
  const Coset& node(std::size_t i) const { return nodes_.at(i); }

  // Number of nodes at distance <= r from the base (r clamped to radius()).
  std::size_t size_within(int r) const;
  int distance(std::size_t node_index) const;

  std::span<const OrbitEdge> edges() const noexcept { return edges_; }
  std::span<const BoundaryMark> boundary() const noexcept { return boundary_; }

  std::optional<std::size_t> find(const Coset& c) const;

 private:
  void insert_slot(std::uint32_t node_index, std::size_t hash);
  void grow_table();

  std::vector<GElement> generators_;
  int radius_;
  std::vector<Coset> nodes_;
  std::vector<std::size_t> layer_end_;  // layer_end_[d] = size_within(d)
  std::vector<OrbitEdge> edges_;
  std::vector<BoundaryMark> boundary_;

  // Open-addressing index over nodes_ (stores node index + 1, 0 = empty).
  std::vector<std::uint32_t> slots_;
  std::vector<std::size_t> hashes_;
};

OrbitBall orbit_ball(const Coset& base, std::span<const GElement> generators, int radius,
                     std::size_t node_cap = kDefaultNodeCap);

struct HOrbitPartition {
  std::map<GenIndex, OrbitBall> balls;
  bool level_preserving = true;
};

// H-orbit balls of Coset(n, e) for every n in [first_level, last_level].
// Generators must have shift 0.
HOrbitPartition h_orbit_partition(GenIndex first_level, GenIndex last_level,
                                  std::span<const GElement> generators, int radius,
                                  std::size_t node_cap = kDefaultNodeCap);

// Line-oriented export: a `nodes` section of `idx level tail-word` rows, an
// `edges` section of `src gen dst` rows and a `boundary` section of `src gen`.
std::string to_text(const OrbitBall& ball);

}  // namespace cosetlab

template <>
struct std::hash<cosetlab::Coset> {
  std::size_t operator()(const cosetlab::Coset& c) const noexcept { return cosetlab::hash_value(c); }
};

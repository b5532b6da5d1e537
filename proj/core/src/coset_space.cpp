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

#include "cosetlab/coset_space.hpp"

#include <sstream>

#include "cosetlab/errors.hpp"

namespace cosetlab {

Coset normal_form(const GElement& a) { return Coset::of(a.shift, a.word); }

Coset act(const GElement& g, const Coset& c) {
  // g.(n, t) = (g.shift + n, g.word tau_{g.shift}(t))
  return normal_form(g_mul(g, GElement{c.level(), c.tail()}));
}

std::string to_string(const Coset& c) {
  return "Coset(" + std::to_string(c.level()) + ", " + to_string(c.tail()) + ")";
}

std::size_t hash_value(const Coset& c) noexcept {
  const auto h = hash_value(c.tail());
  return h ^ (static_cast<std::size_t>(c.level()) * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

// --- OrbitBall ----------------------------------------------------------------

OrbitBall::OrbitBall(const Coset& base, std::vector<GElement> generators, int radius,
                     std::size_t node_cap)
    : generators_(std::move(generators)), radius_(radius) {
  if (radius < 0) throw DomainError("orbit ball radius must be >= 0");
  if (generators_.size() > UINT32_MAX) throw DomainError("too many generators");
  node_cap = std::min<std::size_t>(node_cap, UINT32_MAX - 1);
  if (node_cap == 0) throw ResourceError("orbit ball node cap is zero");

  slots_.assign(64, 0);
  nodes_.push_back(base);
  hashes_.push_back(hash_value(base));
  insert_slot(0, hashes_.back());

  std::size_t layer_begin = 0;
  for (int d = 0; d <= radius_; ++d) {
    // Every node at distance <= d is known before layer d is expanded.
    const std::size_t layer_stop = nodes_.size();
    layer_end_.push_back(layer_stop);
    for (std::size_t i = layer_begin; i < layer_stop; ++i) {
      for (std::size_t s = 0; s < generators_.size(); ++s) {
        Coset image = act(generators_[s], nodes_[i]);
        const auto src = static_cast<std::uint32_t>(i);
        const auto gen = static_cast<std::uint32_t>(s);
        if (auto hit = find(image)) {
          edges_.push_back({src, gen, static_cast<std::uint32_t>(*hit)});
        } else if (d < radius_) {
          if (nodes_.size() >= node_cap) {
            throw ResourceError("orbit ball exceeds node cap of " + std::to_string(node_cap) +
                                " at radius " + std::to_string(d + 1));
          }
          const auto idx = static_cast<std::uint32_t>(nodes_.size());
          hashes_.push_back(hash_value(image));
          nodes_.push_back(std::move(image));
          insert_slot(idx, hashes_.back());
          edges_.push_back({src, gen, idx});
        } else {
          boundary_.push_back({src, gen});
        }
      }
    }
    layer_begin = layer_stop;
  }
  hashes_.clear();
  hashes_.shrink_to_fit();
}

std::size_t OrbitBall::size_within(int r) const {
  if (r < 0) return 0;
  if (r >= radius_) return nodes_.size();
  return layer_end_[static_cast<std::size_t>(r)];
}

int OrbitBall::distance(std::size_t node_index) const {
  if (node_index >= nodes_.size()) throw DomainError("node index out of range");
  int d = 0;
  while (layer_end_[static_cast<std::size_t>(d)] <= node_index) ++d;
  return d;
}

std::optional<std::size_t> OrbitBall::find(const Coset& c) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t pos = hash_value(c) & mask;; pos = (pos + 1) & mask) {
    const std::uint32_t slot = slots_[pos];
    if (slot == 0) return std::nullopt;
    if (nodes_[slot - 1] == c) return slot - 1;
  }
}

void OrbitBall::insert_slot(std::uint32_t node_index, std::size_t hash) {
  if (2 * (nodes_.size() + 1) > slots_.size()) grow_table();
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = hash & mask;
  while (slots_[pos] != 0) pos = (pos + 1) & mask;
  slots_[pos] = node_index + 1;
}

void OrbitBall::grow_table() {
  std::vector<std::uint32_t> next(slots_.size() * 2, 0);
  const std::size_t mask = next.size() - 1;
  for (std::uint32_t slot : slots_) {
    if (slot == 0) continue;
    std::size_t pos = hashes_[slot - 1] & mask;
    while (next[pos] != 0) pos = (pos + 1) & mask;
    next[pos] = slot;
  }
  slots_ = std::move(next);
}

OrbitBall orbit_ball(const Coset& base, std::span<const GElement> generators, int radius,
                     std::size_t node_cap) {
  return OrbitBall(base, std::vector<GElement>(generators.begin(), generators.end()), radius, node_cap);
}

HOrbitPartition h_orbit_partition(GenIndex first_level, GenIndex last_level,
                                  std::span<const GElement> generators, int radius,
                                  std::size_t node_cap) {
  if (first_level > last_level) throw DomainError("empty level window");
  for (const GElement& g : generators) {
    if (g.shift != 0) throw DomainError("H-orbit generator " + to_string(g) + " has nonzero shift");
  }
  HOrbitPartition out;
  for (GenIndex n = first_level; n <= last_level; ++n) {
    OrbitBall ball = orbit_ball(Coset::base(n), generators, radius, node_cap);
    for (const Coset& c : ball.nodes()) {
      if (c.level() != n) out.level_preserving = false;
    }
    out.balls.emplace(n, std::move(ball));
  }
  return out;
}

std::string to_text(const OrbitBall& ball) {
  std::ostringstream os;
  os << "# nodes: idx level tail\n";
  for (std::size_t i = 0; i < ball.size(); ++i) {
    os << i << ' ' << ball.node(i).level() << ' ' << to_string(ball.node(i).tail()) << '\n';
  }
  os << "# edges: src gen dst\n";
  for (const OrbitEdge& e : ball.edges()) os << e.src << ' ' << e.gen << ' ' << e.dst << '\n';
  os << "# boundary: src gen\n";
  for (const BoundaryMark& b : ball.boundary()) os << b.src << ' ' << b.gen << '\n';
  return os.str();
}

}  // namespace cosetlab

// Copyright 2026 the ILTT toolkit authors
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

#include "iltt/hamilton.hpp"

#include <algorithm>
#include <string>

#include "iltt/metrics.hpp"

namespace iltt {

namespace {

// Every tournament has a Hamilton path; build one by insertion.
std::vector<NodeId> hamilton_path(const Tournament& g) {
  std::vector<NodeId> path;
  path.reserve(g.order());
  path.push_back(0);
  for (NodeId v = 1; v < g.order(); ++v) {
    if (g.arc(v, path.front())) {
      path.insert(path.begin(), v);
      continue;
    }
    std::size_t pos = path.size();  // default: append
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (g.arc(path[i], v) && g.arc(v, path[i + 1])) {
        pos = i + 1;
        break;
      }
    }
    path.insert(path.begin() + static_cast<std::ptrdiff_t>(pos), v);
  }
  return path;
}

enum class OutsideStatus : std::uint8_t {
  kMixed,      // sees both directions vs the cycle: directly insertable
  kBeatenByAll,  // every cycle node beats it
  kBeatsAll,     // it beats every cycle node
};

// Grows `next` (successor map of a cycle through `start`) until it covers
// all nodes. `pending` holds the outside nodes.
void grow_cycle(const Tournament& g, std::vector<NodeId>& next, NodeId start,
                std::vector<NodeId> pending) {
  const std::uint32_t n = g.order();
  std::vector<OutsideStatus> status(n, OutsideStatus::kMixed);
  std::vector<bool> outside(n, false);

  auto classify = [&](NodeId v) {
    bool beats = false, beaten = false;
    NodeId c = start;
    do {
      (g.arc(v, c) ? beats : beaten) = true;
      if (beats && beaten) return OutsideStatus::kMixed;
      c = next[c];
    } while (c != start);
    return beats ? OutsideStatus::kBeatsAll : OutsideStatus::kBeatenByAll;
  };

  std::vector<NodeId> insertable;
  for (NodeId v : pending) {
    outside[v] = true;
    status[v] = classify(v);
    if (status[v] == OutsideStatus::kMixed) insertable.push_back(v);
  }

  std::uint32_t remaining = static_cast<std::uint32_t>(pending.size());

  // Splices v in and re-checks the homogeneous outside nodes against the
  // new member only; a flip to mixed makes them insertable.
  auto insert_after = [&](NodeId pos, NodeId v) {
    next[v] = next[pos];
    next[pos] = v;
    outside[v] = false;
    --remaining;
    for (NodeId u = 0; u < n; ++u) {
      if (!outside[u] || status[u] == OutsideStatus::kMixed) continue;
      const bool flipped = status[u] == OutsideStatus::kBeatenByAll
                               ? g.arc(u, v)
                               : g.arc(v, u);
      if (flipped) {
        status[u] = OutsideStatus::kMixed;
        insertable.push_back(u);
      }
    }
  };

  while (remaining > 0) {
    if (!insertable.empty()) {
      const NodeId v = insertable.back();
      insertable.pop_back();
      if (!outside[v]) continue;
      // Mixed vs the cycle means some consecutive pair brackets v.
      NodeId c = start;
      bool placed = false;
      do {
        if (g.arc(c, v) && g.arc(v, next[c])) {
          insert_after(c, v);
          placed = true;
          break;
        }
        c = next[c];
      } while (c != start);
      if (!placed) {
        throw DomainError("internal: mixed outside node had no slot");
      }
      continue;
    }

    // Everything left is homogeneous. Strongness forces an arc from the
    // beaten-by-all class into the beats-all class; splicing that arc
    // between any consecutive cycle pair inserts both endpoints.
    NodeId a = kUnreachable, b = kUnreachable;
    for (NodeId cand = 0; cand < n && a == kUnreachable; ++cand) {
      if (!outside[cand] || status[cand] != OutsideStatus::kBeatenByAll) continue;
      bits::for_each_set_bit(g.row(cand), [&](std::uint32_t w) {
        if (a == kUnreachable && outside[w] &&
            status[w] == OutsideStatus::kBeatsAll) {
          a = cand;
          b = w;
        }
      });
    }
    if (a == kUnreachable) {
      throw DomainError("no-cycle: tournament is not strong");
    }
    const NodeId pos = start;
    insert_after(pos, b);
    insert_after(pos, a);  // order: pos -> a -> b -> old successor
  }
}

}  // namespace

bool is_hamiltonian(const Tournament& g) {
  if (g.order() < 3) return false;
  return is_strong(g);
}

HamiltonCycle find_hamilton_cycle(const Tournament& g) {
  const std::uint32_t n = g.order();
  if (n < 3) {
    throw DomainError("no-cycle: Hamilton cycles need order >= 3");
  }
  if (!is_strong(g)) {
    throw DomainError("no-cycle: tournament is not strong");
  }

  const std::vector<NodeId> path = hamilton_path(g);
  // No sink in a strong tournament, so the path tail points back somewhere.
  std::size_t j = 0;
  while (j < n && !g.arc(path[n - 1], path[j])) ++j;
  if (j >= n - 1) throw DomainError("internal: path tail has no back arc");

  std::vector<NodeId> next(n, 0);
  for (std::size_t i = j; i < n; ++i) {
    next[path[i]] = path[i + 1 == n ? j : i + 1];
  }
  grow_cycle(g, next, path[j],
             std::vector<NodeId>(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(j)));

  // Unroll from the smallest id for stable fixtures.
  HamiltonCycle cycle;
  cycle.nodes.reserve(n);
  NodeId c = 0;
  do {
    cycle.nodes.push_back(c);
    c = next[c];
  } while (c != 0);
  return cycle;
}

HamiltonCycle lift_hamilton_cycle(const HamiltonCycle& c, ModelKind /*model*/,
                                  std::uint32_t order) {
  const std::size_t n = c.nodes.size();
  if (n != order || n < 3) {
    throw DomainError("invalid-cycle: expected a cycle through all " +
                      std::to_string(order) + " nodes");
  }
  std::vector<bool> seen(order, false);
  for (NodeId v : c.nodes) {
    if (v >= order || seen[v]) {
      throw DomainError("invalid-cycle: nodes must be distinct and in range");
    }
    seen[v] = true;
  }

  HamiltonCycle lifted;
  lifted.nodes.reserve(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    lifted.nodes.push_back(c.nodes[k]);
    lifted.nodes.push_back(order + c.nodes[(k + 1) % n]);
  }
  // Keep the smallest-id start; originals sort below all clones.
  const auto min_it = std::min_element(lifted.nodes.begin(), lifted.nodes.end());
  std::rotate(lifted.nodes.begin(), min_it, lifted.nodes.end());
  return lifted;
}

bool is_valid_hamilton_cycle(const Tournament& g, const HamiltonCycle& c) {
  const std::uint32_t n = g.order();
  if (c.nodes.size() != n || n < 3) return false;
  std::vector<bool> seen(n, false);
  for (NodeId v : c.nodes) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t k = 0; k < c.nodes.size(); ++k) {
    if (!g.arc(c.nodes[k], c.nodes[(k + 1) % n])) return false;
  }
  return true;
}

}  // namespace iltt

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

#include "iltt/tournament.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace iltt {

Tournament::Tournament(std::uint32_t order)
    : order_(order),
      wpr_(bits::words_for(order)),
      bits_(static_cast<std::size_t>(order) * wpr_, 0) {
  if (order == 0) throw DomainError("invalid-order: order must be at least 1");
}

Tournament Tournament::from_rows(std::uint32_t order,
                                 std::vector<std::uint64_t> rows) {
  Tournament g(order);
  if (rows.size() != g.bits_.size()) {
    throw DomainError("internal: row buffer size mismatch");
  }
  g.bits_ = std::move(rows);
  return g;
}

void validate(const Tournament& g) {
  const std::uint32_t n = g.order();
  const std::size_t wpr = g.words_per_row();
  for (std::uint32_t i = 0; i < n; ++i) {
    if (g.arc(i, i)) {
      throw DomainError("invalid tournament: loop at node " +
                        std::to_string(i));
    }
    // Padding past column n-1 must stay zero for word-level operations.
    auto row = g.row(i);
    if (n & 63) {
      const std::uint64_t pad_mask = ~std::uint64_t{0} << (n & 63);
      if (row[wpr - 1] & pad_mask) {
        throw DomainError("invalid tournament: dirty padding in row " +
                          std::to_string(i));
      }
    }
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (g.arc(i, j) == g.arc(j, i)) {
        throw DomainError("invalid tournament: pair {" + std::to_string(i) +
                          "," + std::to_string(j) +
                          "} must carry exactly one arc");
      }
    }
  }
}

Tournament make_linear_order(std::uint32_t n) {
  if (n == 0) throw DomainError("invalid-order: linear order needs n >= 1");
  return Tournament::build(n, [](std::uint32_t, std::uint32_t) { return true; });
}

Tournament make_directed_3_cycle() {
  return Tournament::build(3, [](std::uint32_t i, std::uint32_t j) {
    // (0,1) and (1,2) point forward, (0,2) is reversed to close the cycle.
    return !(i == 0 && j == 2);
  });
}

Tournament make_random(std::uint32_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("invalid-order: random tournament needs n >= 1");
  std::mt19937_64 rng(seed);
  return Tournament::build(
      n, [&rng](std::uint32_t, std::uint32_t) { return (rng() & 1u) != 0; });
}

Tournament dual(const Tournament& g) {
  const std::size_t wpr = g.words_per_row();
  std::span<const std::uint64_t> all(g.row(0).data(),
      static_cast<std::size_t>(g.order()) * wpr);
  return Tournament::from_rows(g.order(),
                               bits::transpose(all, g.order(), wpr));
}

Tournament induced(const Tournament& g, std::span<const NodeId> nodes) {
  if (nodes.empty()) {
    throw DomainError("invalid-selection: empty node selection");
  }
  std::vector<bool> seen(g.order(), false);
  for (NodeId v : nodes) {
    if (v >= g.order()) {
      throw DomainError("invalid-selection: node " + std::to_string(v) +
                        " out of range");
    }
    if (seen[v]) {
      throw DomainError("invalid-selection: duplicate node " +
                        std::to_string(v));
    }
    seen[v] = true;
  }
  return Tournament::build(
      static_cast<std::uint32_t>(nodes.size()),
      [&](std::uint32_t a, std::uint32_t b) { return g.arc(nodes[a], nodes[b]); });
}

namespace {

bool extend_mapping(const Tournament& g, const Tournament& h,
                    std::vector<NodeId>& map, std::vector<bool>& used,
                    std::uint32_t depth) {
  const std::uint32_t n = g.order();
  if (depth == n) return true;
  for (NodeId cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (h.out_degree(cand) != g.out_degree(depth)) continue;
    bool ok = true;
    for (std::uint32_t prev = 0; prev < depth; ++prev) {
      if (g.arc(depth, prev) != h.arc(cand, map[prev])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[depth] = cand;
    used[cand] = true;
    if (extend_mapping(g, h, map, used, depth + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

IsoResult isomorphic(const Tournament& g, const Tournament& h) {
  if (g.order() != h.order()) return {};
  const std::uint32_t n = g.order();
  if (n > kIsomorphismOrderCap) {
    throw DomainError("size-cap: isomorphism testing is limited to order " +
                      std::to_string(kIsomorphismOrderCap));
  }
  // Degree-sequence pre-filter.
  std::vector<std::uint32_t> dg(n), dh(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    dg[i] = g.out_degree(i);
    dh[i] = h.out_degree(i);
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return {};

  std::vector<NodeId> map(n, 0);
  std::vector<bool> used(n, false);
  if (!extend_mapping(g, h, map, used, 0)) return {};
  return {true, std::move(map)};
}

std::uint64_t differ_by(const Tournament& g, const Tournament& h) {
  if (g.order() != h.order()) {
    throw DomainError("invalid-comparison: orders differ (" +
                      std::to_string(g.order()) + " vs " +
                      std::to_string(h.order()) + ")");
  }
  // A flipped pair {i, j} mismatches in both ordered slots.
  std::uint64_t mismatched = 0;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    auto rg = g.row(i);
    auto rh = h.row(i);
    for (std::size_t w = 0; w < rg.size(); ++w) {
      mismatched += static_cast<std::uint64_t>(std::popcount(rg[w] ^ rh[w]));
    }
  }
  return mismatched / 2;
}

}  // namespace iltt

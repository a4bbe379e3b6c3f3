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

#ifndef ILTT_METRICS_HPP_
#define ILTT_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "iltt/int128.hpp"
#include "iltt/tournament.hpp"

namespace iltt {

// Distance sentinel for unreachable ordered pairs. Distances are directed
// shortest-path lengths (a quasimetric: triangle inequality, no symmetry).
// Never folded into Wiener sums; the Wiener index exists only when strong.
inline constexpr std::uint32_t kUnreachable = 0xFFFFFFFFu;

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;  // reduced
  double value = 0.0;
};

struct DistanceSummary {
  std::uint32_t order = 0;
  bool strong = false;
  std::optional<u128> wiener;           // sum over ordered pairs; strong only
  std::optional<Rational> avg_distance; // W / (n(n-1)); strong, n >= 2
  std::uint32_t diameter = 0;           // max finite distance
  std::uint64_t alpha = 0;              // arcs on no directed 3-cycle
};

// Exactly one strongly connected component?
bool is_strong(const Tournament& g);

// Any node with out-degree 0?
bool has_sink(const Tournament& g);

// Row-major order x order matrix of directed distances (diagonal 0,
// kUnreachable sentinel). Per-source BFS over packed adjacency rows;
// sources are independent and spread across `threads` workers.
std::vector<std::uint32_t> all_pairs_distances(const Tournament& g,
                                               unsigned threads = 1);

// Distances from one source (row of the matrix above).
std::vector<std::uint32_t> distances_from(const Tournament& g, NodeId src);

// All DistanceSummary fields, computed exactly without materializing the
// distance matrix.
DistanceSummary summarize(const Tournament& g, unsigned threads = 1);

// Number of arcs (u,v) with no w completing a directed 3-cycle v->w->u.
std::uint64_t count_alpha(const Tournament& g);

// Closed-form Wiener index of the t-th ILTT iterate of a strong base of
// order n >= 3 with Wiener index w0:  2^{t+1} (2^t - 1) n + 4^t w0.
u128 predict_wiener_iltt(std::uint32_t n, u128 w0, std::uint32_t t);

// Closed-form Wiener index of the t-th ILTT_d iterate of a strong base of
// order n >= 3 with alpha arcs on no directed 3-cycle, stated for t >= 1:
//   12 C(2^{t-1} n, 2) + alpha + 3 * 2^{t-1} n.
// t = 0 is an out-of-domain error.
u128 predict_wiener_ilttd(std::uint32_t n, std::uint64_t alpha,
                          std::uint32_t t);

}  // namespace iltt

#endif  // ILTT_METRICS_HPP_

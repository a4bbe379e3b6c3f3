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

#include "iltt/metrics.hpp"

#include <algorithm>
#include <string>

#include "iltt/parallel.hpp"

namespace iltt {

namespace {

struct BfsAccumulator {
  u128 distance_sum = 0;
  std::uint32_t max_distance = 0;
  std::uint32_t reached = 0;  // nodes other than the source
};

// Frontier expansion by OR-ing the out-neighbour rows of frontier nodes.
// Each node enters the frontier at most once, so one source costs
// O(order * words_per_row) word operations.
BfsAccumulator bfs_from(const Tournament& g, NodeId src,
                        std::vector<std::uint64_t>& visited,
                        std::vector<std::uint64_t>& frontier,
                        std::vector<std::uint64_t>& next,
                        std::uint32_t* dist_row) {
  const std::size_t wpr = g.words_per_row();
  std::fill(visited.begin(), visited.end(), 0);
  std::fill(frontier.begin(), frontier.end(), 0);
  bits::set(visited, src);
  bits::set(frontier, src);
  if (dist_row) {
    std::fill(dist_row, dist_row + g.order(), kUnreachable);
    dist_row[src] = 0;
  }

  BfsAccumulator acc;
  std::uint32_t depth = 0;
  for (;;) {
    std::fill(next.begin(), next.end(), 0);
    bits::for_each_set_bit(frontier, [&](std::uint32_t u) {
      const auto row = g.row(u);
      for (std::size_t w = 0; w < wpr; ++w) next[w] |= row[w];
    });
    std::uint64_t fresh = 0;
    for (std::size_t w = 0; w < wpr; ++w) {
      next[w] &= ~visited[w];
      fresh |= next[w];
    }
    if (!fresh) break;
    ++depth;
    const auto count =
        static_cast<std::uint32_t>(bits::popcount(next));
    acc.distance_sum += static_cast<u128>(depth) * count;
    acc.reached += count;
    acc.max_distance = depth;
    if (dist_row) {
      bits::for_each_set_bit(next, [&](std::uint32_t v) { dist_row[v] = depth; });
    }
    for (std::size_t w = 0; w < wpr; ++w) visited[w] |= next[w];
    frontier.swap(next);
  }
  return acc;
}

bool reaches_all(const Tournament& g, NodeId src) {
  const std::size_t wpr = g.words_per_row();
  std::vector<std::uint64_t> visited(wpr), frontier(wpr), next(wpr);
  const auto acc = bfs_from(g, src, visited, frontier, next, nullptr);
  return acc.reached == g.order() - 1;
}

}  // namespace

bool is_strong(const Tournament& g) {
  if (g.order() == 1) return true;
  // Strong iff node 0 reaches everything and everything reaches node 0;
  // the reverse search is a forward search on the dual.
  return reaches_all(g, 0) && reaches_all(dual(g), 0);
}

bool has_sink(const Tournament& g) {
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    if (g.out_degree(v) == 0) return true;
  }
  return false;
}

std::vector<std::uint32_t> distances_from(const Tournament& g, NodeId src) {
  if (src >= g.order()) {
    throw DomainError("invalid-selection: source " + std::to_string(src) +
                      " out of range");
  }
  const std::size_t wpr = g.words_per_row();
  std::vector<std::uint64_t> visited(wpr), frontier(wpr), next(wpr);
  std::vector<std::uint32_t> row(g.order());
  bfs_from(g, src, visited, frontier, next, row.data());
  return row;
}

std::vector<std::uint32_t> all_pairs_distances(const Tournament& g,
                                               unsigned threads) {
  const std::uint32_t n = g.order();
  std::vector<std::uint32_t> dist(static_cast<std::size_t>(n) * n);
  parallel_chunks(n, threads, [&](std::size_t, std::size_t begin,
                                  std::size_t end) {
    const std::size_t wpr = g.words_per_row();
    std::vector<std::uint64_t> visited(wpr), frontier(wpr), next(wpr);
    for (std::size_t src = begin; src < end; ++src) {
      bfs_from(g, static_cast<NodeId>(src), visited, frontier, next,
               dist.data() + src * n);
    }
  });
  return dist;
}

std::uint64_t count_alpha(const Tournament& g) {
  const std::uint32_t n = g.order();
  if (n < 3) return static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const Tournament gd = dual(g);  // row u of the dual = in-neighbours of u
  const std::size_t wpr = g.words_per_row();
  std::uint64_t alpha = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    const auto out_u = g.row(u);
    const auto in_u = gd.row(u);
    bits::for_each_set_bit(out_u, [&](std::uint32_t v) {
      // Arc (u,v) lies on a 3-cycle iff some w has v->w and w->u.
      const auto out_v = g.row(v);
      for (std::size_t w = 0; w < wpr; ++w) {
        if (out_v[w] & in_u[w]) return;
      }
      ++alpha;
    });
  }
  return alpha;
}

DistanceSummary summarize(const Tournament& g, unsigned threads) {
  const std::uint32_t n = g.order();
  DistanceSummary s;
  s.order = n;
  s.alpha = count_alpha(g);

  struct Partial {
    u128 sum = 0;
    std::uint32_t max_distance = 0;
    bool all_reached = true;
  };
  const std::size_t n_chunks =
      threads <= 1 ? 1 : std::min<std::size_t>(threads, n);
  std::vector<Partial> partials(n_chunks);
  parallel_chunks(n, static_cast<unsigned>(n_chunks),
                  [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    const std::size_t wpr = g.words_per_row();
    std::vector<std::uint64_t> visited(wpr), frontier(wpr), next(wpr);
    Partial& p = partials[chunk];
    for (std::size_t src = begin; src < end; ++src) {
      const auto acc = bfs_from(g, static_cast<NodeId>(src), visited,
                                frontier, next, nullptr);
      p.sum += acc.distance_sum;
      p.max_distance = std::max(p.max_distance, acc.max_distance);
      if (acc.reached != n - 1) p.all_reached = false;
    }
  });

  u128 wiener = 0;
  bool strong = n >= 1;
  std::uint32_t diameter = 0;
  for (const Partial& p : partials) {
    wiener += p.sum;
    diameter = std::max(diameter, p.max_distance);
    strong = strong && p.all_reached;
  }
  if (n == 1) strong = true;

  s.strong = strong;
  s.diameter = diameter;
  if (strong) {
    s.wiener = wiener;
    if (n >= 2) {
      // Strong with n >= 2 implies every distance is >= 1, so wiener > 0.
      const u128 den = static_cast<u128>(n) * (n - 1);
      const u128 d = gcd_u128(wiener, den);
      Rational r;
      r.num = static_cast<std::uint64_t>(wiener / d);
      r.den = static_cast<std::uint64_t>(den / d);
      r.value = static_cast<double>(r.num) / static_cast<double>(r.den);
      s.avg_distance = r;
    }
  }
  return s;
}

u128 predict_wiener_iltt(std::uint32_t n, u128 w0, std::uint32_t t) {
  const u128 pow2_t = static_cast<u128>(1) << t;
  return (pow2_t * 2) * (pow2_t - 1) * n + pow2_t * pow2_t * w0;
}

u128 predict_wiener_ilttd(std::uint32_t n, std::uint64_t alpha,
                          std::uint32_t t) {
  if (t == 0) {
    throw DomainError(
        "out-of-domain: the dual-model closed form is stated for t >= 1");
  }
  const u128 half_order = static_cast<u128>(n) << (t - 1);
  return 6 * half_order * (half_order - 1) + alpha + 3 * half_order;
}

}  // namespace iltt

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

#include "iltt/motifs.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace iltt {

namespace {

std::uint64_t choose2(std::uint64_t n) { return n * (n - 1) / 2; }
std::uint64_t choose3(std::uint64_t n) { return n * (n - 1) * (n - 2) / 6; }
std::uint64_t choose4(std::uint64_t n) {
  return n * (n - 1) * (n - 2) * (n - 3) / 24;
}

TetradClass classify_scores(std::array<std::uint32_t, 4> s) {
  std::sort(s.begin(), s.end());
  if (s == std::array<std::uint32_t, 4>{0, 1, 2, 3}) return TetradClass::kTransitive;
  if (s == std::array<std::uint32_t, 4>{1, 1, 1, 3}) return TetradClass::kCycleWithSource;
  if (s == std::array<std::uint32_t, 4>{0, 2, 2, 2}) return TetradClass::kCycleWithSink;
  return TetradClass::kStrong;  // (1,1,2,2) is the only remaining sequence
}

TetradClass classify_quadruple(const Tournament& g, NodeId a, NodeId b,
                               NodeId c, NodeId d) {
  const NodeId q[4] = {a, b, c, d};
  std::array<std::uint32_t, 4> score{};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (g.arc(q[i], q[j])) {
        ++score[i];
      } else {
        ++score[j];
      }
    }
  }
  return classify_scores(score);
}

}  // namespace

const char* to_string(TetradClass c) {
  switch (c) {
    case TetradClass::kTransitive: return "transitive";
    case TetradClass::kCycleWithSource: return "cycle_with_source";
    case TetradClass::kCycleWithSink: return "cycle_with_sink";
    case TetradClass::kStrong: return "strong";
  }
  return "?";
}

Tournament tetrad_representative(TetradClass c) {
  switch (c) {
    case TetradClass::kTransitive:
      return make_linear_order(4);
    case TetradClass::kCycleWithSource:
      // 0 beats the cycle 1 -> 2 -> 3 -> 1.
      return Tournament::build(4, [](std::uint32_t i, std::uint32_t j) {
        if (i == 0) return true;
        return !(i == 1 && j == 3);
      });
    case TetradClass::kCycleWithSink:
      // Cycle 0 -> 1 -> 2 -> 0 beats node 3.
      return Tournament::build(4, [](std::uint32_t i, std::uint32_t j) {
        if (j == 3) return true;
        return !(i == 0 && j == 2);
      });
    case TetradClass::kStrong:
      // 0 -> 1 -> 2 -> 0 with 3 -> 0, 1 -> 3, 2 -> 3.
      return Tournament::build(4, [](std::uint32_t i, std::uint32_t j) {
        if (i == 0 && j == 1) return true;
        if (i == 1 && j == 2) return true;
        if (i == 0 && j == 2) return false;
        if (i == 0 && j == 3) return false;
        return true;  // (1,3), (2,3)
      });
  }
  throw DomainError("unknown tetrad class");
}

std::uint64_t cyclic_triple_count_formula(const Tournament& g) {
  const std::uint32_t n = g.order();
  if (n < 3) {
    throw DomainError("out-of-domain: triple counts need order >= 3");
  }
  std::uint64_t transitive_witnesses = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    transitive_witnesses += choose2(g.out_degree(v));
  }
  // Each transitive triple has exactly one node beating the other two;
  // cyclic triples have none.
  return choose3(n) - transitive_witnesses;
}

TriadCensus triad_census(const Tournament& g) {
  const std::uint64_t cyclic = cyclic_triple_count_formula(g);
  return {choose3(g.order()) - cyclic, cyclic};
}

TetradCensus tetrad_census(const Tournament& g) {
  const std::uint32_t n = g.order();
  if (n < 4) {
    throw DomainError("out-of-domain: quadruple counts need order >= 4");
  }
  if (n > kTetradExactOrderCap) {
    throw CapacityError(
        "size-cap: exact quadruple census is limited to order " +
            std::to_string(kTetradExactOrderCap) + "; use sampling",
        n);
  }
  TetradCensus census;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      for (NodeId c = b + 1; c < n; ++c) {
        for (NodeId d = c + 1; d < n; ++d) {
          ++census.counts[static_cast<std::size_t>(
              classify_quadruple(g, a, b, c, d))];
        }
      }
    }
  }
  return census;
}

TetradEstimate tetrad_census_sampled(const Tournament& g,
                                     std::uint64_t samples,
                                     std::uint64_t seed) {
  const std::uint32_t n = g.order();
  if (n < 4) {
    throw DomainError("out-of-domain: quadruple counts need order >= 4");
  }
  if (samples == 0) throw DomainError("sample count must be positive");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
  std::array<std::uint64_t, kTetradClassCount> hits{};
  for (std::uint64_t s = 0; s < samples; ++s) {
    NodeId q[4];
    for (int i = 0; i < 4;) {
      const NodeId v = pick(rng);
      bool fresh = true;
      for (int j = 0; j < i; ++j) fresh = fresh && q[j] != v;
      if (fresh) q[i++] = v;
    }
    ++hits[static_cast<std::size_t>(classify_quadruple(g, q[0], q[1], q[2], q[3]))];
  }

  TetradEstimate est;
  est.samples = samples;
  est.seed = seed;
  const double total = static_cast<double>(choose4(n));
  for (std::size_t k = 0; k < kTetradClassCount; ++k) {
    const double p = static_cast<double>(hits[k]) / static_cast<double>(samples);
    est.estimate[k] = p * total;
    est.std_error[k] =
        total * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  }
  return est;
}

}  // namespace iltt

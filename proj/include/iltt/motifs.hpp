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

#ifndef ILTT_MOTIFS_HPP_
#define ILTT_MOTIFS_HPP_

#include <array>
#include <cstdint>

#include "iltt/tournament.hpp"

namespace iltt {

struct TriadCensus {
  std::uint64_t transitive = 0;
  std::uint64_t cyclic = 0;  // directed 3-cycles
};

// Exact counts over all C(n,3) triples, computed through the score-sequence
// identity (cyclic = C(n,3) - sum_v C(outdeg v, 2)); the O(n^3) enumeration
// lives in the tests as the independent oracle. Order < 3 is out of domain.
TriadCensus triad_census(const Tournament& g);

// The identity above, exposed as its own cross-check entry point.
std::uint64_t cyclic_triple_count_formula(const Tournament& g);

// The four isomorphism classes of 4-node tournaments, distinguished by
// their sorted score sequences:
//   transitive        (0,1,2,3)  the 4-node linear order
//   cycle_with_source (1,1,1,3)  one node beating a directed 3-cycle
//   cycle_with_sink   (0,2,2,2)  a directed 3-cycle beating one node
//   strong            (1,1,2,2)  the unique strong 4-node tournament
enum class TetradClass : std::uint8_t {
  kTransitive = 0,
  kCycleWithSource = 1,
  kCycleWithSink = 2,
  kStrong = 3,
};
inline constexpr std::size_t kTetradClassCount = 4;
const char* to_string(TetradClass c);

// Canonical representative of each class (used by docs and test oracles).
Tournament tetrad_representative(TetradClass c);

struct TetradCensus {
  std::array<std::uint64_t, kTetradClassCount> counts{};
};

// Enumeration ceiling: C(n,4) growth makes exact counting infeasible past
// this; larger orders go through the sampled estimator.
inline constexpr std::uint32_t kTetradExactOrderCap = 512;

// Exact counts over all C(n,4) quadruples for order in [4, cap].
TetradCensus tetrad_census(const Tournament& g);

struct TetradEstimate {
  std::array<double, kTetradClassCount> estimate{};   // projected counts
  std::array<double, kTetradClassCount> std_error{};  // binomial SE, same scale
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Uniform quadruple sampling with a documented seed; clearly an estimate,
// never mixed with exact counts.
TetradEstimate tetrad_census_sampled(const Tournament& g,
                                     std::uint64_t samples, std::uint64_t seed);

}  // namespace iltt

#endif  // ILTT_MOTIFS_HPP_

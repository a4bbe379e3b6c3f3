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

#ifndef ILTT_DOMINATION_HPP_
#define ILTT_DOMINATION_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "iltt/generate.hpp"
#include "iltt/tournament.hpp"

namespace iltt {

// Exact search ceiling. Domination numbers of tournaments are O(log n), so
// branch-and-bound depth stays tiny, but coverage masks are kept in single
// words for simplicity.
inline constexpr std::uint32_t kDominationExactOrderCap = 24;

enum class DominationKind { kIn, kOut };

// S is in-dominating when every u outside S has an arc (u, v) into some
// v in S; out-dominating is the dual (an arc (v, u) from some v in S).
// Empty or invalid selections are invalid-selection errors.
bool is_in_dominating(const Tournament& g, std::span<const NodeId> s);
bool is_out_dominating(const Tournament& g, std::span<const NodeId> s);
bool is_dominating(const Tournament& g, std::span<const NodeId> s,
                   DominationKind kind);

struct DominationResult {
  std::uint32_t gamma_in = 0;
  std::uint32_t gamma_out = 0;
  std::vector<NodeId> witness_in;
  std::vector<NodeId> witness_out;
};

// Exact minima with witnesses: branch-and-bound over bit-parallel coverage
// masks with a greedy upper bound, candidates ordered by coverage size.
// Deterministic. Order above the cap is a size-cap error.
DominationResult domination_numbers(const Tournament& g);

// Replaces every node of a dominating set of the final trace step by its
// ultimate base ancestor and intersects with the base node set. Holds for
// both models and both kinds (the one-step set transfer statement names an
// undefined set T, read here as S) and is asserted at runtime: a set that
// dominates neither way is an invalid-input error; a projection that fails
// to dominate the base would be reported, not ignored.
std::vector<NodeId> project_dominating_set(std::span<const NodeId> s,
                                           const GenerationTrace& trace,
                                           DominationKind kind);

// Outcome of a lift construction. The constructions mirror the stated
// one-step transfers, but those do not hold for every input (see the tests
// for the precise boundary), so the result carries the validation verdict
// instead of trusting the statement: validated == false comes with the
// nodes left uncovered at the final step.
struct LiftOutcome {
  std::vector<NodeId> set;  // candidate at the final trace step
  bool validated = false;
  std::vector<NodeId> uncovered;
};

// Clone copies of an in-dominating set of the base, iterated through every
// step of an ILTT trace (v at step t is (2^t - 1) * n + v).
LiftOutcome lift_in_dominating(std::span<const NodeId> s,
                               const GenerationTrace& trace);

// An out-dominating set of the base carried unchanged to the final step of
// an ILTT trace.
LiftOutcome lift_out_dominating(std::span<const NodeId> s,
                                const GenerationTrace& trace);

// All inclusion-minimal dominating sets of the given kind; subset
// enumeration, order capped at kDominationEnumerationCap.
inline constexpr std::uint32_t kDominationEnumerationCap = 16;
std::vector<std::vector<NodeId>> enumerate_minimal_dominating_sets(
    const Tournament& g, DominationKind kind);

}  // namespace iltt

#endif  // ILTT_DOMINATION_HPP_
